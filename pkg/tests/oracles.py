"""Test-side reference implementations, written without the package's helpers.

Terms are converted to a nameless tuple form: ("b", i) for a bound
variable with de Bruijn index i, ("f", x) free variable, ("c", c) constant,
("l", body) abstraction, ("a", fun, arg) application.
"""

import dataclasses

from comppaths.expr import App, Const, Lam, Var
from comppaths.path import Beta, Eta, MuR, NuL, Refl, Symm, Trans, Xi, endpoints


def nameless(e, env=()):
    if isinstance(e, Var):
        for i, name in enumerate(reversed(env)):
            if name == e.name:
                return ("b", i)
        return ("f", e.name)
    if isinstance(e, Const):
        return ("c", e.name)
    if isinstance(e, Lam):
        return ("l", nameless(e.body, env + (e.binder,)))
    if isinstance(e, App):
        return ("a", nameless(e.fun, env), nameless(e.arg, env))
    raise TypeError(e)


def shift(t, d, cutoff=0):
    tag = t[0]
    if tag == "b":
        return ("b", t[1] + d) if t[1] >= cutoff else t
    if tag == "l":
        return ("l", shift(t[1], d, cutoff + 1))
    if tag == "a":
        return ("a", shift(t[1], d, cutoff), shift(t[2], d, cutoff))
    return t


def nsubst(t, j, s):
    tag = t[0]
    if tag == "b":
        return s if t[1] == j else t
    if tag == "l":
        return ("l", nsubst(t[1], j + 1, shift(s, 1)))
    if tag == "a":
        return ("a", nsubst(t[1], j, s), nsubst(t[2], j, s))
    return t


def nbeta(t):
    assert t[0] == "a" and t[1][0] == "l", "not a beta-redex"
    return shift(nsubst(t[1][1], 0, shift(t[2], 1)), -1)


def occurs(t, i):
    tag = t[0]
    if tag == "b":
        return t[1] == i
    if tag == "l":
        return occurs(t[1], i + 1)
    if tag == "a":
        return occurs(t[1], i) or occurs(t[2], i)
    return False


def neta(t):
    assert t[0] == "l" and t[1][0] == "a" and t[1][2] == ("b", 0), "not an eta-redex"
    assert not occurs(t[1][1], 0), "bound variable occurs in the function part"
    return shift(t[1][1], -1)


def abstract(t, x, k=0):
    """Bind free variable x at de Bruijn level k (the inverse of opening a binder)."""
    tag = t[0]
    if tag == "f":
        return ("b", k) if t[1] == x else t
    if tag == "b":
        return ("b", t[1] + 1) if t[1] >= k else t
    if tag == "l":
        return ("l", abstract(t[1], x, k + 1))
    if tag == "a":
        return ("a", abstract(t[1], x, k), abstract(t[2], x, k))
    return t


def ends(p):
    """Nameless endpoints of a path, or None when it is ill-formed."""
    if isinstance(p, Refl):
        t = nameless(p.e)
        return t, t
    if isinstance(p, Symm):
        r = ends(p.p)
        return None if r is None else (r[1], r[0])
    if isinstance(p, Trans):
        a, b = ends(p.p), ends(p.q)
        if a is None or b is None or a[1] != b[0]:
            return None
        return a[0], b[1]
    if isinstance(p, (Beta, Eta)):
        t = nameless(p.e)
        try:
            return t, (nbeta(t) if isinstance(p, Beta) else neta(t))
        except AssertionError:
            return None
    if isinstance(p, Xi):
        r = ends(p.p)
        if r is None:
            return None
        return ("l", abstract(r[0], p.binder)), ("l", abstract(r[1], p.binder))
    if isinstance(p, NuL):
        r = ends(p.p)
        if r is None:
            return None
        n = nameless(p.arg)
        return ("a", r[0], n), ("a", r[1], n)
    if isinstance(p, MuR):
        r = ends(p.p)
        if r is None:
            return None
        m = nameless(p.fun)
        return ("a", m, r[0]), ("a", m, r[1])
    raise TypeError(p)


# -- rule matcher from a pattern table -----------------------------------------

# Patterns: ("Ctor", sub, ...) tuples, metavariables "?name". Expression
# slots are metavariables as well. Right-hand sides are builders over the
# binding dictionary.

def _src(r):
    return endpoints(r)[0]


def _tgt(r):
    return endpoints(r)[1]


RULE_TABLE = {
    "SR": (("Symm", ("Refl", "?e")), lambda b: Refl(b["e"])),
    "SS": (("Symm", ("Symm", "?r")), lambda b: b["r"]),
    "TR": (("Trans", "?r", ("Symm", "?r")), lambda b: Refl(_src(b["r"]))),
    "TSR": (("Trans", ("Symm", "?r"), "?r"), lambda b: Refl(_tgt(b["r"]))),
    "TRR": (("Trans", "?r", ("Refl", "?e")), lambda b: b["r"]),
    "TLR": (("Trans", ("Refl", "?e"), "?r"), lambda b: b["r"]),
    "TT": (("Trans", ("Trans", "?r", "?s"), "?t"), lambda b: Trans(b["r"], Trans(b["s"], b["t"]))),
    "STSS": (("Symm", ("Trans", "?r", "?s")), lambda b: Trans(Symm(b["s"]), Symm(b["r"]))),
    "TC_NU": (("NuL", ("Trans", "?a", "?b"), "?n"), lambda b: Trans(NuL(b["a"], b["n"]), NuL(b["b"], b["n"]))),
    "TC_MU": (("MuR", "?m", ("Trans", "?a", "?b")), lambda b: Trans(MuR(b["m"], b["a"]), MuR(b["m"], b["b"]))),
    "TC_XI": (("Xi", "?x", ("Trans", "?a", "?b")), lambda b: Trans(Xi(b["x"], b["a"]), Xi(b["x"], b["b"]))),
    "SC_NU": (("NuL", ("Symm", "?a"), "?n"), lambda b: Symm(NuL(b["a"], b["n"]))),
    "SC_MU": (("MuR", "?m", ("Symm", "?a")), lambda b: Symm(MuR(b["m"], b["a"]))),
    "SC_XI": (("Xi", "?x", ("Symm", "?a")), lambda b: Symm(Xi(b["x"], b["a"]))),
    "RC_NU": (("NuL", ("Refl", "?a"), "?n"), lambda b: Refl(App(b["a"], b["n"]))),
    "RC_MU": (("MuR", "?m", ("Refl", "?a")), lambda b: Refl(App(b["m"], b["a"]))),
    "RC_XI": (("Xi", "?x", ("Refl", "?a")), lambda b: Refl(Lam(b["x"], b["a"]))),
}

LHS_ROOT = {name: pat[0][0] for name, pat in RULE_TABLE.items()}


def _fields(p):
    return [getattr(p, f.name) for f in dataclasses.fields(p)]


def match(pat, term, binds):
    if isinstance(pat, str):
        key = pat[1:]
        if key in binds:
            return binds[key] == term
        binds[key] = term
        return True
    if type(term).__name__ != pat[0]:
        return False
    vals = _fields(term)
    if len(vals) != len(pat) - 1:
        return False
    return all(match(sp, v, binds) for sp, v in zip(pat[1:], vals))


def rewrite(rule_name, term):
    pat, rhs = RULE_TABLE[rule_name]
    binds = {}
    if match(pat, term, binds):
        return rhs(binds)
    return None


_PATH_CHILD_FIELDS = {
    "Refl": (), "Beta": (), "Eta": (), "Symm": (0,), "Trans": (0, 1), "Xi": (1,), "NuL": (0,), "MuR": (1,),
}


def subterms(p, pos=()):
    """Pre-order (pos, subpath) pairs, numbering only path-valued children."""
    yield pos, p
    vals = _fields(p)
    for k, idx in enumerate(_PATH_CHILD_FIELDS[type(p).__name__]):
        yield from subterms(vals[idx], pos + (k,))


def plug(p, pos, new):
    if not pos:
        return new
    vals = _fields(p)
    idx = _PATH_CHILD_FIELDS[type(p).__name__][pos[0]]
    vals[idx] = plug(vals[idx], pos[1:], new)
    return type(p)(*vals)


def reducts(p, rule_names):
    out = []
    for pos, sub in subterms(p):
        for name in rule_names:
            new = rewrite(name, sub)
            if new is not None:
                out.append((pos, name, plug(p, pos, new)))
    return out


def reachable_normal_forms(p, rule_names, limit=50_000):
    """Every normal form reachable under any reduction order."""
    seen, stack, nfs = {p}, [p], set()
    while stack:
        cur = stack.pop()
        nxt = [q for _, _, q in reducts(cur, rule_names)]
        if not nxt:
            nfs.add(cur)
        for q in nxt:
            if q not in seen:
                seen.add(q)
                stack.append(q)
        assert len(seen) <= limit, "reduction graph larger than expected"
    return nfs
