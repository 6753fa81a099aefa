"""2-cells: derivations between parallel paths.

A derivation is data, not a proposition. ``DComp`` is never reassociated
on construction; the groupoid laws for derivations hold only up to the
3-cells in :mod:`comppaths.tower`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import BadChain, BadStep, IllFormed, NotEquivalent
from .path import Refl, Symm, Trans, endpoints, src, tgt, validate
from .trs import (
    DEFAULT_FUEL, RuleId, StepWitness, Trace, active_rules, check_step, normalize, step,
)


@dataclass(frozen=True)
class DRefl:
    p: object


@dataclass(frozen=True)
class DStep:
    s: StepWitness


@dataclass(frozen=True)
class DInv:
    d: "Derivation"


@dataclass(frozen=True)
class DComp:
    d1: "Derivation"
    d2: "Derivation"


Derivation = Union[DRefl, DStep, DInv, DComp]
DERIVATION_TYPES = (DRefl, DStep, DInv, DComp)


def is_derivation(x):
    return isinstance(x, DERIVATION_TYPES)


def boundary(d):
    """(source path, target path), without re-checking steps or chaining."""
    match d:
        case DRefl(p):
            return p, p
        case DStep(s):
            return s.source, s.target
        case DInv(e):
            a, b = boundary(e)
            return b, a
        case DComp(d1, d2):
            return boundary(d1)[0], boundary(d2)[1]
    raise TypeError(f"not a derivation: {d!r}")


def d_src(d):
    return boundary(d)[0]


def d_tgt(d):
    return boundary(d)[1]


def verify(d, pos=()):
    """Re-check every step and every composition; return the boundary pair.

    Raises BadStep or BadChain carrying the position inside the derivation
    tree (0 = first/only child, 1 = second child of a composition).
    """
    match d:
        case DRefl(p):
            try:
                validate(p)
            except IllFormed as err:
                raise BadStep(pos, f"refl of an ill-formed path: {err.reason}") from None
            return p, p
        case DStep(s):
            try:
                validate(s.source)
            except IllFormed as err:
                raise BadStep(pos, f"ill-formed source: {err.reason}") from None
            if s.rule not in active_rules():
                raise BadStep(pos, f"rule {s.rule} is not enabled")
            if not check_step(s):
                raise BadStep(pos, f"{s.rule} at {list(s.pos)} does not produce the recorded target")
            return s.source, s.target
        case DInv(e):
            a, b = verify(e, pos + (0,))
            return b, a
        case DComp(d1, d2):
            a, b = verify(d1, pos + (0,))
            c, e = verify(d2, pos + (1,))
            if b != c:
                raise BadChain(pos, "target of the first derivation is not the source of the second")
            return a, e
    raise BadStep(pos, f"not a derivation: {d!r}")


def from_trace(tr):
    """Right-nested composite of the trace's steps; an empty trace gives ``DRefl``."""
    prev = tr.start
    for i, s in enumerate(tr.steps):
        if s.source != prev:
            raise BadChain((i,), "trace steps do not chain")
        prev = s.target
    if not tr.steps:
        return DRefl(tr.start)
    out = DStep(tr.steps[-1])
    for s in reversed(tr.steps[:-1]):
        out = DComp(DStep(s), out)
    return out


def delta(p, fuel=DEFAULT_FUEL, rules=None):
    """Normalizing derivation from ``p`` to its normal form."""
    return from_trace(normalize(p, fuel, rules).trace)


def gamma(p, q, fuel=DEFAULT_FUEL, rules=None):
    """Canonical derivation ``delta(p) ; inv(delta(q))`` through the shared normal form."""
    if endpoints(p) != endpoints(q):
        raise NotEquivalent("paths are not parallel")
    np_, nq = normalize(p, fuel, rules), normalize(q, fuel, rules)
    if np_.nf != nq.nf:
        raise NotEquivalent("normal forms differ")
    return DComp(from_trace(np_.trace), DInv(from_trace(nq.trace)))


def _whisker(side, fixed, d):
    match d:
        case DRefl(p):
            return DRefl(Trans(p, fixed) if side == "right" else Trans(fixed, p))
        case DStep(s):
            if side == "right":
                ws = StepWitness(Trans(s.source, fixed), Trans(s.target, fixed), (0,) + s.pos, s.rule)
            else:
                ws = StepWitness(Trans(fixed, s.source), Trans(fixed, s.target), (1,) + s.pos, s.rule)
            return DStep(ws)
        case DInv(e):
            return DInv(_whisker(side, fixed, e))
        case DComp(d1, d2):
            return DComp(_whisker(side, fixed, d1), _whisker(side, fixed, d2))
    raise TypeError(f"not a derivation: {d!r}")


def whisker2(side, fixed, d):
    """Compose every path of ``d`` with ``fixed``: ``trans(_, fixed)`` on the right, ``trans(fixed, _)`` on the left."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    a, b = endpoints(d_src(d))
    fa, fb = endpoints(fixed)
    if side == "right" and b != fa:
        raise IllFormed((), "right whisker: path does not end where the fixed path starts")
    if side == "left" and fb != a:
        raise IllFormed((), "left whisker: fixed path does not end where the derivation starts")
    return _whisker(side, fixed, d)


def whisker_right(d, g):
    return whisker2("right", g, d)


def whisker_left(h, d):
    return whisker2("left", h, d)


def hcomp2(alpha, beta):
    """Horizontal composite: whisker alpha on the right by g, then beta on the left by f'."""
    f, f2 = boundary(alpha)
    g, g2 = boundary(beta)
    if tgt(f) != src(g):
        raise IllFormed((), "horizontal composition: 2-cells do not share a middle point")
    return DComp(whisker2("right", g, alpha), whisker2("left", f2, beta))


def hcomp2_alt(alpha, beta):
    """The other order: whisker beta on the left by f, then alpha on the right by g'."""
    f, f2 = boundary(alpha)
    g, g2 = boundary(beta)
    if tgt(f) != src(g):
        raise IllFormed((), "horizontal composition: 2-cells do not share a middle point")
    return DComp(whisker2("left", f, beta), whisker2("right", g2, alpha))


WITNESS2_KINDS = ("assoc", "lunit", "runit", "linv", "rinv", "invinv")


def witness2(kind, *paths):
    """Single-step 2-cell for one of the groupoid laws on paths.

    assoc(p, q, r)  trans(trans(p,q),r) => trans(p,trans(q,r))
    lunit(p)        trans(refl, p) => p
    runit(p)        trans(p, refl) => p
    linv(p)         trans(symm(p), p) => refl
    rinv(p)         trans(p, symm(p)) => refl
    invinv(p)       symm(symm(p)) => p
    """
    arity = 3 if kind == "assoc" else 1
    if kind not in WITNESS2_KINDS:
        raise ValueError(f"unknown coherence kind {kind!r}")
    if len(paths) != arity:
        raise ValueError(f"{kind} takes {arity} path(s), got {len(paths)}")
    p = paths[0]
    match kind:
        case "assoc":
            source, rule = Trans(Trans(p, paths[1]), paths[2]), RuleId.TT
        case "lunit":
            source, rule = Trans(Refl(src(p)), p), RuleId.TLR
        case "runit":
            source, rule = Trans(p, Refl(tgt(p))), RuleId.TRR
        case "linv":
            source, rule = Trans(Symm(p), p), RuleId.TSR
        case "rinv":
            source, rule = Trans(p, Symm(p)), RuleId.TR
        case "invinv":
            source, rule = Symm(Symm(p)), RuleId.SS
    validate(source)
    return DStep(step(source, (), rule))


def assoc2(p, q, r):
    return witness2("assoc", p, q, r)


def lunit2(p):
    return witness2("lunit", p)


def runit2(p):
    return witness2("runit", p)


def size(d):
    match d:
        case DInv(e):
            return 1 + size(e)
        case DComp(d1, d2):
            return 1 + size(d1) + size(d2)
    return 1


def pretty(d):
    from .path import pretty as ppath

    match d:
        case DRefl(p):
            return f"refl({ppath(p)})"
        case DStep(s):
            return f"step[{s.rule}@{list(s.pos)}]"
        case DInv(e):
            return f"inv({pretty(e)})"
        case DComp(d1, d2):
            return f"({pretty(d1)} ∘ {pretty(d2)})"
    raise TypeError(f"not a derivation: {d!r}")


__all__ = [
    "DRefl", "DStep", "DInv", "DComp", "Derivation", "boundary", "d_src", "d_tgt", "verify",
    "from_trace", "delta", "gamma", "whisker2", "whisker_left", "whisker_right", "hcomp2",
    "hcomp2_alt", "witness2", "assoc2", "lunit2", "runit2", "WITNESS2_KINDS", "Trace",
]
