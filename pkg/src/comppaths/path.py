"""Path terms (1-cells) and their endpoints.

A path records how one lambda term was turned into another: primitive
beta/eta steps, lifted through application (``NuL``/``MuR``) and lambda
(``Xi``) contexts, glued with reflexivity, symmetry and transitivity.

Positions inside a path are tuples of child indices, counting only
sub-paths: ``Trans`` has children 0 and 1; ``Symm``, ``Xi``, ``NuL`` and
``MuR`` have the single child 0; ``Refl``, ``Beta`` and ``Eta`` are leaves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import expr as ex
from .errors import IllFormed, InvalidPosition, NotARedex
from .expr import App, Expr, Lam


@dataclass(frozen=True)
class Refl:
    e: Expr

    def __str__(self):
        return show(self)


@dataclass(frozen=True)
class Symm:
    p: "Path"

    def __str__(self):
        return show(self)


@dataclass(frozen=True)
class Trans:
    p: "Path"
    q: "Path"

    def __str__(self):
        return show(self)


@dataclass(frozen=True)
class Beta:
    e: Expr

    def __str__(self):
        return show(self)


@dataclass(frozen=True)
class Eta:
    e: Expr

    def __str__(self):
        return show(self)


@dataclass(frozen=True)
class Xi:
    binder: str
    p: "Path"

    def __post_init__(self):
        ex._check_ident(self.binder)

    def __str__(self):
        return show(self)


@dataclass(frozen=True)
class NuL:
    p: "Path"
    arg: Expr

    def __str__(self):
        return show(self)


@dataclass(frozen=True)
class MuR:
    fun: Expr
    p: "Path"

    def __str__(self):
        return show(self)


Path = Union[Refl, Symm, Trans, Beta, Eta, Xi, NuL, MuR]
PATH_TYPES = (Refl, Symm, Trans, Beta, Eta, Xi, NuL, MuR)


def is_path(x):
    return isinstance(x, PATH_TYPES)


def children(p):
    match p:
        case Trans(a, b):
            return (a, b)
        case Symm(a) | Xi(_, a) | NuL(a, _) | MuR(_, a):
            return (a,)
    return ()


def with_children(p, kids):
    match p:
        case Trans():
            return Trans(*kids)
        case Symm():
            return Symm(kids[0])
        case Xi(x, _):
            return Xi(x, kids[0])
        case NuL(_, n):
            return NuL(kids[0], n)
        case MuR(m, _):
            return MuR(m, kids[0])
    if kids:
        raise InvalidPosition((0,), "leaf has no children")
    return p


def endpoints(p):
    """(source, target) of a well-formed path; raises IllFormed otherwise."""
    return _ends(p)


def src(p):
    return _ends(p)[0]


def tgt(p):
    return _ends(p)[1]


def _child_ends(q, i):
    try:
        return _ends(q)
    except IllFormed as err:
        raise IllFormed((i,) + err.position, err.reason) from None


def _ends(p):
    match p:
        case Refl(e):
            return (e, e)
        case Symm(q):
            a, b = _child_ends(q, 0)
            return (b, a)
        case Trans(q, r):
            a, b = _child_ends(q, 0)
            c, d = _child_ends(r, 1)
            if b != c:
                raise IllFormed((), f"trans: {ex.show(b)} does not meet {ex.show(c)}")
            return (a, d)
        case Beta(e):
            try:
                return (e, ex.beta_contract(e))
            except NotARedex as err:
                raise IllFormed((), str(err)) from None
        case Eta(e):
            try:
                return (e, ex.eta_contract(e))
            except NotARedex as err:
                raise IllFormed((), str(err)) from None
        case Xi(x, q):
            a, b = _child_ends(q, 0)
            return (Lam(x, a), Lam(x, b))
        case NuL(q, n):
            a, b = _child_ends(q, 0)
            return (App(a, n), App(b, n))
        case MuR(m, q):
            a, b = _child_ends(q, 0)
            return (App(m, a), App(m, b))
    raise TypeError(f"not a path: {p!r}")


def validate(p):
    """Raise IllFormed at the first bad node; return None when ``p`` is well formed."""
    _ends(p)


def is_well_formed(p):
    try:
        _ends(p)
    except IllFormed:
        return False
    return True


def subpath(p, pos):
    for i, k in enumerate(pos):
        kids = children(p)
        if not 0 <= k < len(kids):
            raise InvalidPosition(pos[: i + 1])
        p = kids[k]
    return p


def replace_at(p, pos, sub, check=True):
    """``p`` with the sub-path at ``pos`` swapped for ``sub``; re-validated unless ``check`` is off."""
    out = _replace(p, tuple(pos), 0, sub)
    if check:
        validate(out)
    return out


def _replace(p, pos, i, sub):
    if i == len(pos):
        return sub
    kids = children(p)
    k = pos[i]
    if not 0 <= k < len(kids):
        raise InvalidPosition(pos[: i + 1])
    new = list(kids)
    new[k] = _replace(kids[k], pos, i + 1, sub)
    return with_children(p, new)


def positions(p, prefix=()):
    """All positions in pre-order (node before its children, children left to right)."""
    yield prefix
    for k, c in enumerate(children(p)):
        yield from positions(c, prefix + (k,))


def depth(p):
    kids = children(p)
    return 1 + max(map(depth, kids)) if kids else 1


def size(p):
    return 1 + sum(map(size, children(p)))


def show(p):
    match p:
        case Refl(e):
            return f"(refl {ex.show(e)})"
        case Symm(q):
            return f"(symm {show(q)})"
        case Trans(q, r):
            return f"(trans {show(q)} {show(r)})"
        case Beta(e):
            return f"(beta {ex.show(e)})"
        case Eta(e):
            return f"(eta {ex.show(e)})"
        case Xi(x, q):
            return f"(xi {x} {show(q)})"
        case NuL(q, n):
            return f"(nu {show(q)} {ex.show(n)})"
        case MuR(m, q):
            return f"(mu {ex.show(m)} {show(q)})"
    raise TypeError(f"not a path: {p!r}")


def pretty(p):
    match p:
        case Refl(e):
            return f"refl[{ex.pretty(e)}]"
        case Symm(q):
            return f"symm({pretty(q)})"
        case Trans(q, r):
            return f"trans({pretty(q)}, {pretty(r)})"
        case Beta(e):
            return f"β[{ex.pretty(e)}]"
        case Eta(e):
            return f"η[{ex.pretty(e)}]"
        case Xi(x, q):
            return f"ξ{x}({pretty(q)})"
        case NuL(q, n):
            return f"ν({pretty(q)}, {ex.pretty(n)})"
        case MuR(m, q):
            return f"μ[{ex.pretty(m)}]({pretty(q)})"
    raise TypeError(f"not a path: {p!r}")
