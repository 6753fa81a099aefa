"""Empirical checks on the rewrite system.

Seeded random path generation, local-confluence probing of every
one-step divergence, randomized-strategy agreement, and a bounded
breadth-first search over the symmetric step relation that serves as an
oracle for rewrite equivalence independent of normal forms.
"""

from __future__ import annotations

import random
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .errors import FuelExhausted
from .expr import App, Const, Lam, Var, fresh, is_beta_redex, is_eta_redex
from .path import (
    Beta, Eta, MuR, NuL, Refl, Symm, Trans, Xi, endpoints, positions, replace_at, size, src,
    subpath, tgt,
)
from .trs import (
    DEFAULT_FUEL, RuleId, normalize, one_step_reducts, reduce_with,
    resolve_rules, rewrite_here,
)


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    max_path_depth: int = 6
    max_expr_depth: int = 3
    base_constants: tuple = ("a", "b", "c")

    def __post_init__(self):
        if self.max_path_depth < 1 or self.max_expr_depth < 1:
            raise ValueError("depths must be >= 1")
        if not self.base_constants:
            raise ValueError("need at least one base constant")


# -- random generation ---------------------------------------------------------

class PathGen:
    """Random well-formed paths. All randomness flows through one ``random.Random``."""

    LEAF_WEIGHT = 0.4

    def __init__(self, cfg, rng=None):
        self.cfg = cfg
        self.rng = rng if rng is not None else random.Random(cfg.seed)

    def const(self):
        return Const(self.rng.choice(self.cfg.base_constants))

    def expr(self, d=None, bound=()):
        rng = self.rng
        d = self.cfg.max_expr_depth if d is None else d
        if d <= 1:
            if bound and rng.random() < 0.5:
                return Var(rng.choice(bound))
            return self.const()
        roll = rng.random()
        if roll < 0.25:
            return self.expr(1, bound)
        if roll < 0.45:
            x = fresh("x", set(bound))
            return Lam(x, self.expr(d - 1, bound + (x,)))
        if roll < 0.7:
            return App(self.expr(d - 1, bound), self.expr(d - 1, bound))
        if roll < 0.9:
            # beta-redex
            x = fresh("x", set(bound))
            return App(Lam(x, self.expr(d - 1, bound + (x,))), self.expr(d - 1, bound))
        # eta-redex
        x = fresh("x", set(bound))
        return Lam(x, App(self.expr(d - 1, bound), Var(x)))

    def _leaf_from(self, e):
        opts = [Refl(e)]
        if is_beta_redex(e):
            opts.append(Beta(e))
        if is_eta_redex(e):
            opts.append(Eta(e))
        return self.rng.choice(opts)

    def _leaf_into(self, e):
        rng = self.rng
        roll = rng.random()
        if roll < 0.34:
            return Refl(e)
        x = fresh("x", e.free_vars)
        if roll < 0.67:
            if rng.random() < 0.5:
                return Beta(App(Lam(x, Var(x)), e))
            return Beta(App(Lam(x, e), self.const()))
        return Eta(Lam(x, App(e, Var(x))))

    def from_(self, e, d):
        """Random path with source ``e`` and depth <= d."""
        rng = self.rng
        if d <= 1 or rng.random() < self.LEAF_WEIGHT:
            return self._leaf_from(e)
        kinds = ["symm", "trans"]
        if isinstance(e, (App, Lam)):
            kinds.append("cong")
        match rng.choice(kinds):
            case "symm":
                return Symm(self.into(e, d - 1))
            case "trans":
                left = self.from_(e, d - 1)
                return Trans(left, self.from_(tgt(left), d - 1))
        if isinstance(e, Lam):
            return Xi(e.binder, self.from_(e.body, d - 1))
        if rng.random() < 0.5:
            return NuL(self.from_(e.fun, d - 1), e.arg)
        return MuR(e.fun, self.from_(e.arg, d - 1))

    def into(self, e, d):
        """Random path with target ``e`` and depth <= d."""
        rng = self.rng
        if d <= 1 or rng.random() < self.LEAF_WEIGHT:
            return self._leaf_into(e)
        kinds = ["symm", "trans"]
        if isinstance(e, (App, Lam)):
            kinds.append("cong")
        match rng.choice(kinds):
            case "symm":
                return Symm(self.from_(e, d - 1))
            case "trans":
                right = self.into(e, d - 1)
                return Trans(self.into(src(right), d - 1), right)
        if isinstance(e, Lam):
            return Xi(e.binder, self.into(e.body, d - 1))
        if rng.random() < 0.5:
            return NuL(self.into(e.fun, d - 1), e.arg)
        return MuR(e.fun, self.into(e.arg, d - 1))

    def path(self, depth=None):
        return self.from_(self.expr(), self.cfg.max_path_depth if depth is None else depth)

    def binder(self):
        return self.rng.choice(("x", "y", "z", "w"))

    def rule_instance(self, rule, depth=5):
        """Random path whose root matches ``rule``'s left-hand side, depth <= ``depth``."""
        d = max(depth - 2, 1)
        e = self.expr()
        r = self.from_(e, d)
        match rule:
            case RuleId.SR:
                return Symm(Refl(e))
            case RuleId.SS:
                return Symm(Symm(r))
            case RuleId.TR:
                return Trans(r, Symm(r))
            case RuleId.TSR:
                return Trans(Symm(r), r)
            case RuleId.TRR:
                return Trans(r, Refl(tgt(r)))
            case RuleId.TLR:
                return Trans(Refl(e), r)
            case RuleId.TT:
                s = self.from_(tgt(r), d)
                return Trans(Trans(r, s), self.from_(tgt(s), d))
            case RuleId.STSS:
                return Symm(Trans(r, self.from_(tgt(r), d)))
            case RuleId.TC_NU:
                return NuL(Trans(r, self.from_(tgt(r), d)), self.expr())
            case RuleId.TC_MU:
                return MuR(self.expr(), Trans(r, self.from_(tgt(r), d)))
            case RuleId.TC_XI:
                return Xi(self.binder(), Trans(r, self.from_(tgt(r), d)))
            case RuleId.SC_NU:
                return NuL(Symm(r), self.expr())
            case RuleId.SC_MU:
                return MuR(self.expr(), Symm(r))
            case RuleId.SC_XI:
                return Xi(self.binder(), Symm(r))
            case RuleId.RC_NU:
                return NuL(Refl(e), self.expr())
            case RuleId.RC_MU:
                return MuR(self.expr(), Refl(e))
            case RuleId.RC_XI:
                return Xi(self.binder(), Refl(e))
        raise ValueError(rule)

    def embedded_instance(self, rule, depth=5):
        """A rule instance, sometimes wrapped in one random context; returns (path, position)."""
        if self.rng.random() < 0.5:
            return self.rule_instance(rule, depth), ()
        inst = self.rule_instance(rule, depth - 1)
        a, b = endpoints(inst)
        match self.rng.choice(("symm", "tl", "tr", "nu", "mu", "xi")):
            case "symm":
                return Symm(inst), (0,)
            case "tl":
                return Trans(inst, self.from_(b, 1)), (0,)
            case "tr":
                return Trans(self.into(a, 1), inst), (1,)
            case "nu":
                return NuL(inst, self.const()), (0,)
            case "mu":
                return MuR(self.const(), inst), (0,)
        return Xi(self.binder(), inst), (0,)


def gen_path(cfg):
    """Deterministic in ``cfg.seed``; depth <= ``cfg.max_path_depth``."""
    return PathGen(cfg).path()


def gen_corpus(cfg, n):
    gen = PathGen(cfg)
    return [gen.path() for _ in range(n)]


# -- local confluence ------------------------------------------------------------

@dataclass
class ConfluenceReport:
    divergences: int = 0
    joinable: int = 0
    failures: list = field(default_factory=list)
    max_steps: int = 0
    paths: int = 0

    def merge(self, other):
        self.divergences += other.divergences
        self.joinable += other.joinable
        self.failures.extend(other.failures)
        self.max_steps = max(self.max_steps, other.max_steps)
        self.paths += other.paths
        return self


def local_confluence(p, fuel=DEFAULT_FUEL, rules=None):
    """Check that every pair of one-step reducts of ``p`` normalizes to the same path."""
    report = ConfluenceReport(paths=1)
    reducts = one_step_reducts(p, rules)
    nfs = []
    for pos, rule, q in reducts:
        try:
            res = normalize(q, fuel, rules)
        except FuelExhausted as err:
            nfs.append(err)
            continue
        report.max_steps = max(report.max_steps, len(res.trace) + 1)
        nfs.append(res.nf)
    for i, j in combinations(range(len(reducts)), 2):
        report.divergences += 1
        a, b = nfs[i], nfs[j]
        if isinstance(a, FuelExhausted) or isinstance(b, FuelExhausted) or a != b:
            (pi, ri, _), (pj, rj, _) = reducts[i], reducts[j]
            report.failures.append({
                "path": p,
                "left": (pi, ri, a),
                "right": (pj, rj, b),
            })
        else:
            report.joinable += 1
    return report


def _check_chunk(args):
    paths, fuel, rules = args
    total = ConfluenceReport()
    for p in paths:
        r = local_confluence(p, fuel, rules)
        try:
            r.max_steps = max(r.max_steps, len(normalize(p, fuel, rules).trace))
        except FuelExhausted as err:
            r.failures.append({"path": p, "fuel": err.steps})
        total.merge(r)
    return total


def check_corpus(paths, fuel=DEFAULT_FUEL, rules=None, workers=1):
    """Local confluence over many paths, optionally fanned out over processes."""
    paths = list(paths)
    rules = resolve_rules(rules)
    if workers <= 1:
        return _check_chunk((paths, fuel, rules))
    chunks = [paths[i::workers] for i in range(workers)]
    total = ConfluenceReport()
    with ProcessPoolExecutor(workers) as pool:
        for part in pool.map(_check_chunk, [(c, fuel, rules) for c in chunks]):
            total.merge(part)
    return total


# -- strategy independence ------------------------------------------------------

def strategy_agreement(p, k=5, seed=0, fuel=DEFAULT_FUEL, rules=None):
    """True iff k random reduction orders all reach the same normal form."""
    rng = random.Random(seed)
    nfs = {reduce_with(p, rng.choice, fuel, rules).nf for _ in range(k)}
    return len(nfs) == 1


def all_normal_forms(p, rules=None, limit=100_000):
    """Every normal form reachable from ``p`` under any strategy (exhaustive search)."""
    seen = {p}
    todo = [p]
    nfs = set()
    while todo:
        cur = todo.pop()
        reds = one_step_reducts(cur, rules)
        if not reds:
            nfs.add(cur)
        for _, _, q in reds:
            if q not in seen:
                seen.add(q)
                todo.append(q)
                if len(seen) > limit:
                    raise RuntimeError("reduction graph too large")
    return nfs


# -- breadth-first search over the symmetric step relation -------------------------

@dataclass(frozen=True)
class BfsResult:
    connected: bool
    distance: int | None
    explored: int
    chain: tuple = ()

    def __bool__(self):
        return self.connected


def _inverse_candidates(w, pool, rules):
    """(rule, lhs) pairs such that ``rule`` rewrites ``lhs`` at its root to ``w``."""
    out = []
    rs = set(resolve_rules(rules))
    try:
        a, b = endpoints(w)
    except Exception:
        return out
    if RuleId.SS in rs:
        out.append((RuleId.SS, Symm(Symm(w))))
    if RuleId.TRR in rs:
        out.append((RuleId.TRR, Trans(w, Refl(b))))
    if RuleId.TLR in rs:
        out.append((RuleId.TLR, Trans(Refl(a), w)))
    match w:
        case Refl(e):
            if RuleId.SR in rs:
                out.append((RuleId.SR, Symm(Refl(e))))
            for r in pool:
                ra, rb = endpoints(r)
                if RuleId.TR in rs and ra == e:
                    out.append((RuleId.TR, Trans(r, Symm(r))))
                if RuleId.TSR in rs and rb == e:
                    out.append((RuleId.TSR, Trans(Symm(r), r)))
            if isinstance(e, App):
                if RuleId.RC_NU in rs:
                    out.append((RuleId.RC_NU, NuL(Refl(e.fun), e.arg)))
                if RuleId.RC_MU in rs:
                    out.append((RuleId.RC_MU, MuR(e.fun, Refl(e.arg))))
            if isinstance(e, Lam) and RuleId.RC_XI in rs:
                out.append((RuleId.RC_XI, Xi(e.binder, Refl(e.body))))
        case Trans(r, Trans(s, t)) if RuleId.TT in rs:
            out.append((RuleId.TT, Trans(Trans(r, s), t)))
    match w:
        case Trans(Symm(s), Symm(r)) if RuleId.STSS in rs:
            out.append((RuleId.STSS, Symm(Trans(r, s))))
        case Trans(NuL(p1, n1), NuL(p2, n2)) if n1 == n2 and RuleId.TC_NU in rs:
            out.append((RuleId.TC_NU, NuL(Trans(p1, p2), n1)))
        case Trans(MuR(m1, p1), MuR(m2, p2)) if m1 == m2 and RuleId.TC_MU in rs:
            out.append((RuleId.TC_MU, MuR(m1, Trans(p1, p2))))
        case Trans(Xi(x1, p1), Xi(x2, p2)) if x1 == x2 and RuleId.TC_XI in rs:
            out.append((RuleId.TC_XI, Xi(x1, Trans(p1, p2))))
        case Symm(NuL(p1, n)) if RuleId.SC_NU in rs:
            out.append((RuleId.SC_NU, NuL(Symm(p1), n)))
        case Symm(MuR(m, p1)) if RuleId.SC_MU in rs:
            out.append((RuleId.SC_MU, MuR(m, Symm(p1))))
        case Symm(Xi(x, p1)) if RuleId.SC_XI in rs:
            out.append((RuleId.SC_XI, Xi(x, Symm(p1))))
    return out


def predecessors(v, pool=(), max_size=None, rules=None):
    """Paths u with a single step u -> v, up to ``max_size`` nodes.

    Rules that forget a sub-path (TR, TSR) can only be inverted by
    guessing it; candidates for the forgotten path come from ``pool``.
    """
    out = set()
    for pos in positions(v):
        w = subpath(v, pos)
        for rule, lhs in _inverse_candidates(w, pool, rules):
            u = replace_at(v, pos, lhs, check=False)
            if max_size is not None and size(u) > max_size:
                continue
            if rewrite_here(rule, lhs) == w:
                out.add(u)
    return out


class StepGraph:
    """Undirected step graph over a finite universe closed under forward steps."""

    def __init__(self, universe, rules=None, limit=200_000):
        self.rules = rules = resolve_rules(rules)
        self.forward = {}
        todo = list(universe)
        while todo:
            u = todo.pop()
            if u in self.forward:
                continue
            succ = [q for _, _, q in one_step_reducts(u, rules)]
            self.forward[u] = succ
            todo.extend(q for q in succ if q not in self.forward)
            if len(self.forward) > limit:
                raise RuntimeError("universe closure too large")
        self.backward = {u: [] for u in self.forward}
        for u, succ in self.forward.items():
            for q in succ:
                self.backward[q].append(u)

    def __contains__(self, p):
        return p in self.forward

    def __len__(self):
        return len(self.forward)

    def neighbors(self, v):
        return self.forward[v] + self.backward[v]

    def distances(self, start, bound, parents=None):
        dist = {start: 0}
        frontier = deque([start])
        while frontier:
            v = frontier.popleft()
            if dist[v] == bound:
                continue
            for w in self.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    if parents is not None:
                        parents[w] = v
                    frontier.append(w)
        return dist


def _chain(parents, end):
    out = [end]
    while out[-1] in parents:
        out.append(parents[out[-1]])
    return tuple(reversed(out))


def bfs_rweq(p, q, bound=12, graph=None, rules=None, max_size=None, pool=None):
    """Search for a zig-zag of at most ``bound`` steps (either direction) from p to q.

    With ``graph`` the search stays inside that universe. Without it,
    backward steps are generated by inverting the rule schemas, limited to
    paths of at most ``max_size`` nodes (default: two more than the larger
    input) and drawing forgotten sub-paths from ``pool`` (default: every
    sub-path of p and q). "connected" is always sound and comes with the
    zig-zag ``chain`` from p to q; "disconnected" only means nothing was
    found inside that envelope.
    """
    if endpoints(p) != endpoints(q):
        return BfsResult(False, None, 0)
    if p == q:
        return BfsResult(True, 0, 1, (p,))
    if graph is not None:
        if p not in graph or q not in graph:
            raise ValueError("both paths must lie in the step graph's universe")
        parents = {}
        dist = graph.distances(p, bound, parents)
        d = dist.get(q)
        return BfsResult(d is not None, d, len(dist), _chain(parents, q) if d is not None else ())
    if max_size is None:
        max_size = max(size(p), size(q)) + 2
    if pool is None:
        pool = {subpath(x, pos) for x in (p, q) for pos in positions(x)}
    pool = tuple(pool)
    dist = {p: 0}
    parents = {}
    frontier = deque([p])
    while frontier:
        v = frontier.popleft()
        if dist[v] == bound:
            continue
        nbrs = [w for _, _, w in one_step_reducts(v, rules)]
        nbrs.extend(predecessors(v, pool, max_size, rules))
        for w in nbrs:
            if w in dist:
                continue
            dist[w] = dist[v] + 1
            parents[w] = v
            if w == q:
                return BfsResult(True, dist[w], len(dist), _chain(parents, q))
            frontier.append(w)
    return BfsResult(False, None, len(dist))


# -- exhaustive enumeration ---------------------------------------------------------

@dataclass(frozen=True)
class TermFamily:
    """Base terms and congruence contexts used to enumerate small paths."""

    points: tuple
    funs: tuple = ()
    args: tuple = ()
    binders: tuple = ()


def default_family():
    ident = Lam("x", Var("x"))
    a = Const("a")
    eta = Lam("y", App(Const("g"), Var("y")))
    return TermFamily(
        points=(App(ident, a), a, eta, Const("g")),
        funs=(Const("f"),),
        args=(Const("b"),),
        binders=("x",),
    )


def enumerate_paths(family, depth):
    """Every well-formed path of depth <= ``depth`` over the family, as a list."""
    leaves = []
    for e in family.points:
        leaves.append(Refl(e))
        if is_beta_redex(e):
            leaves.append(Beta(e))
        if is_eta_redex(e):
            leaves.append(Eta(e))
    levels = [list(dict.fromkeys(leaves))]
    seen = set(levels[0])
    for _ in range(depth - 1):
        prev = [p for level in levels for p in level]
        by_src = {}
        for p in prev:
            by_src.setdefault(src(p), []).append(p)
        new = []
        for p in prev:
            cands = [Symm(p)]
            cands += [Trans(p, r) for r in by_src.get(tgt(p), ())]
            cands += [MuR(m, p) for m in family.funs]
            cands += [NuL(p, n) for n in family.args]
            cands += [Xi(x, p) for x in family.binders]
            for c in cands:
                if c not in seen:
                    seen.add(c)
                    new.append(c)
        levels.append(new)
    return [p for level in levels for p in level]


__all__ = [
    "GenConfig", "PathGen", "gen_path", "gen_corpus", "ConfluenceReport", "local_confluence",
    "check_corpus", "strategy_agreement", "all_normal_forms", "BfsResult", "predecessors",
    "StepGraph", "bfs_rweq", "TermFamily", "default_family", "enumerate_paths",
]
