"""Cells of dimension 3 and above.

Every cell is built from four constructors (refl, step, inv, comp) over a
meta-step payload. Boundaries of meta-steps are always recomputed from
the payload, never stored, so a cell cannot claim a boundary it lacks.

Dimension bookkeeping used throughout: a ``Path`` is a 1-cell, a
``Derivation`` a 2-cell, ``Cell3`` values are 3-cells, and ``CellN``
values carry their own ``dim`` (4 and up). An Expr counts as a 0-cell.

The canonical cell between parallel k-cells x, y is

* ``gamma(x, y)`` for paths (k = 1), and
* ``can(x) ; inv(can(y))`` for k >= 2, where ``can(c)`` runs from ``c``
  to the canonical cell between the two sides of ``c``.

So contractibility ``chi(x, y)`` and the canonical cell coincide, and the
canonicity target at every level is fixed by the level below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import derivation as dv
from .derivation import DComp, DInv, DRefl, DStep
from .errors import BadBoundary, BadChain, IllFormed, NotEquivalent, NotParallel
from .expr import App, Const, Lam, Var
from .path import Refl, Symm, Trans, endpoints, is_path
from .trs import StepWitness


# -- meta-steps at dimension 3 ------------------------------------------------

@dataclass(frozen=True)
class VCompReflRight:
    d: object


@dataclass(frozen=True)
class VCompReflLeft:
    d: object


@dataclass(frozen=True)
class VCompAssoc:
    d1: object
    d2: object
    d3: object


@dataclass(frozen=True)
class InvInv:
    d: object


@dataclass(frozen=True)
class VCompInvRight:
    d: object


@dataclass(frozen=True)
class VCompInvLeft:
    d: object


@dataclass(frozen=True)
class StepEq:
    s1: StepWitness
    s2: StepWitness


@dataclass(frozen=True)
class Can:
    d: object


@dataclass(frozen=True)
class Pentagon:
    f: object
    g: object
    h: object
    k: object


@dataclass(frozen=True)
class Triangle:
    f: object
    g: object


@dataclass(frozen=True)
class Interchange:
    alpha: object
    beta: object


@dataclass(frozen=True)
class WhiskerL:
    h: object
    d: object


@dataclass(frozen=True)
class WhiskerR:
    d: object
    g: object


MetaStep3 = Union[
    VCompReflRight, VCompReflLeft, VCompAssoc, InvInv, VCompInvRight, VCompInvLeft,
    StepEq, Can, Pentagon, Triangle, Interchange, WhiskerL, WhiskerR,
]
META3_TYPES = MetaStep3.__args__


# -- 3-cells ------------------------------------------------------------------

@dataclass(frozen=True)
class Refl3:
    d: object


@dataclass(frozen=True)
class Step3:
    m: object


@dataclass(frozen=True)
class Inv3:
    c: object


@dataclass(frozen=True)
class Comp3:
    c1: object
    c2: object


CELL3_TYPES = (Refl3, Step3, Inv3, Comp3)


# -- meta-steps and cells at dimension n >= 4 ---------------------------------

LAW_KINDS = ("refl_right", "refl_left", "assoc", "inv_inv", "inv_right", "inv_left")


@dataclass(frozen=True)
class LawN:
    """Groupoid law for (dim-1)-cells; ``kind`` is one of LAW_KINDS."""

    dim: int
    kind: str
    cells: tuple


@dataclass(frozen=True)
class StepEqN:
    """Two parallel (dim-1)-level meta-steps are identified."""

    dim: int
    m1: object
    m2: object


@dataclass(frozen=True)
class CanN:
    dim: int
    c: object


META_N_TYPES = (LawN, StepEqN, CanN)


@dataclass(frozen=True)
class ReflN:
    dim: int
    c: object


@dataclass(frozen=True)
class StepN:
    dim: int
    m: object


@dataclass(frozen=True)
class InvN:
    dim: int
    c: object


@dataclass(frozen=True)
class CompN:
    dim: int
    c1: object
    c2: object


CELLN_TYPES = (ReflN, StepN, InvN, CompN)


# -- generic operations by dimension -----------------------------------------

def dim(x):
    if isinstance(x, (Var, Const, Lam, App)):
        return 0
    if is_path(x):
        return 1
    if dv.is_derivation(x):
        return 2
    if isinstance(x, CELL3_TYPES):
        return 3
    if isinstance(x, CELLN_TYPES):
        return x.dim
    raise TypeError(f"not a cell: {x!r}")


def boundary(x):
    """(source, target) of a cell of dimension >= 1; no re-checking."""
    match x:
        case _ if is_path(x):
            return endpoints(x)
        case _ if dv.is_derivation(x):
            return dv.boundary(x)
        case Refl3(d) | ReflN(_, d):
            return d, d
        case Step3(m) | StepN(_, m):
            return meta_boundary(m)
        case Inv3(c) | InvN(_, c):
            a, b = boundary(c)
            return b, a
        case Comp3(c1, c2) | CompN(_, c1, c2):
            return boundary(c1)[0], boundary(c2)[1]
    raise TypeError(f"not a cell: {x!r}")


def source(x):
    return boundary(x)[0]


def target(x):
    return boundary(x)[1]


def identity(x):
    """Identity cell one dimension up."""
    k = dim(x)
    if k == 0:
        return Refl(x)
    if k == 1:
        return DRefl(x)
    if k == 2:
        return Refl3(x)
    return ReflN(k + 1, x)


def _comp(a, b):
    k = dim(a)
    if k == 1:
        return Trans(a, b)
    if k == 2:
        return DComp(a, b)
    if k == 3:
        return Comp3(a, b)
    return CompN(k, a, b)


def compose(a, b):
    """Composite ``a ; b`` of two k-cells; raises BadChain unless target(a) = source(b)."""
    if dim(a) != dim(b) or dim(a) == 0:
        raise BadChain((), "cells of different dimension")
    if target(a) != source(b):
        raise BadChain((), "target of the first cell is not the source of the second")
    return _comp(a, b)


def inverse(a):
    k = dim(a)
    if k == 1:
        return Symm(a)
    if k == 2:
        return DInv(a)
    if k == 3:
        return Inv3(a)
    return InvN(k, a)


def _step(m, k):
    """Wrap a meta-step whose sides are (k-1)-cells as a k-cell."""
    return Step3(m) if k == 3 else StepN(k, m)


def _can(c):
    k = dim(c) + 1
    return Can(c) if k == 3 else CanN(k, c)


def canonical(x, y):
    """Distinguished (k+1)-cell between parallel k-cells."""
    if is_path(x):
        return dv.gamma(x, y)
    if boundary(x) != boundary(y):
        raise NotParallel("cells do not share source and target")
    k = dim(x) + 1
    return _comp(_step(_can(x), k), inverse(_step(_can(y), k)))


def chi3(d1, d2):
    """3-cell from d1 to d2 for parallel derivations: ``can(d1) ; inv(can(d2))``."""
    if dv.boundary(d1) != dv.boundary(d2):
        raise NotParallel("derivations do not share source and target paths")
    return Comp3(Step3(Can(d1)), Inv3(Step3(Can(d2))))


def chiN(n, c1, c2):
    """n-cell (n >= 4) from c1 to c2 for parallel (n-1)-cells."""
    if n < 4:
        raise ValueError("chiN needs n >= 4; use chi3 for 3-cells")
    if dim(c1) != n - 1 or dim(c2) != n - 1:
        raise ValueError(f"chiN({n}) takes {n - 1}-cells")
    if boundary(c1) != boundary(c2):
        raise NotParallel("cells do not share source and target")
    return CompN(n, StepN(n, CanN(n, c1)), InvN(n, StepN(n, CanN(n, c2))))


def chi(c1, c2):
    """Contractibility at whatever dimension the inputs live in (derivations and up)."""
    k = dim(c1) + 1
    if k == 3:
        return chi3(c1, c2)
    return chiN(k, c1, c2)


# -- meta-step boundaries -----------------------------------------------------

def _law_sides(kind, cells):
    match kind, cells:
        case "refl_right", (c,):
            return _comp(c, identity(target(c))), c
        case "refl_left", (c,):
            return _comp(identity(source(c)), c), c
        case "assoc", (a, b, c):
            return _comp(_comp(a, b), c), _comp(a, _comp(b, c))
        case "inv_inv", (c,):
            return inverse(inverse(c)), c
        case "inv_right", (c,):
            return _comp(c, inverse(c)), identity(source(c))
        case "inv_left", (c,):
            return _comp(inverse(c), c), identity(target(c))
    raise ValueError(f"bad law {kind!r} with {len(cells)} argument(s)")


def pentagon_sides(f, g, h, k):
    a = dv.assoc2
    left = DComp(a(Trans(f, g), h, k), a(f, g, Trans(h, k)))
    right = DComp(
        DComp(dv.whisker_right(a(f, g, h), k), a(f, Trans(g, h), k)),
        dv.whisker_left(f, a(g, h, k)),
    )
    return left, right


def triangle_sides(f, g):
    mid = Refl(endpoints(f)[1])
    left = DComp(dv.assoc2(f, mid, g), dv.whisker_left(f, dv.lunit2(g)))
    right = dv.whisker_right(dv.runit2(f), g)
    return left, right


def interchange_sides(alpha, beta):
    return dv.hcomp2(alpha, beta), dv.hcomp2_alt(alpha, beta)


def meta_boundary(m):
    """The two parallel sides a meta-step connects."""
    match m:
        case VCompReflRight(d):
            return _law_sides("refl_right", (d,))
        case VCompReflLeft(d):
            return _law_sides("refl_left", (d,))
        case VCompAssoc(d1, d2, d3):
            return _law_sides("assoc", (d1, d2, d3))
        case InvInv(d):
            return _law_sides("inv_inv", (d,))
        case VCompInvRight(d):
            return _law_sides("inv_right", (d,))
        case VCompInvLeft(d):
            return _law_sides("inv_left", (d,))
        case StepEq(s1, s2):
            return DStep(s1), DStep(s2)
        case Can(d):
            p, q = dv.boundary(d)
            return d, dv.gamma(p, q)
        case Pentagon(f, g, h, k):
            return pentagon_sides(f, g, h, k)
        case Triangle(f, g):
            return triangle_sides(f, g)
        case Interchange(alpha, beta):
            return interchange_sides(alpha, beta)
        case WhiskerL(h, d):
            return dv.whisker_left(h, d), dv.hcomp2(DRefl(h), d)
        case WhiskerR(d, g):
            return dv.whisker_right(d, g), dv.hcomp2(d, DRefl(g))
        case LawN(_, kind, cells):
            return _law_sides(kind, cells)
        case StepEqN(n, m1, m2):
            return _step(m1, n - 1), _step(m2, n - 1)
        case CanN(_, c):
            x, y = boundary(c)
            return c, canonical(x, y)
    raise TypeError(f"not a meta-step: {m!r}")


ms3_boundary = meta_boundary


def c3_boundary(c):
    return boundary(c)


# -- verification -------------------------------------------------------------

def verify_cell(c, pos=()):
    """Re-check a cell of any dimension; returns its boundary pair.

    Raises BadStep / BadChain / BadBoundary (all IllFormed) with the
    position of the failing node inside the cell tree.
    """
    if is_path(c):
        try:
            return endpoints(c)
        except IllFormed as err:
            raise BadBoundary(pos + err.position, err.reason) from None
    if dv.is_derivation(c):
        return dv.verify(c, pos)
    match c:
        case Refl3(d):
            if dim(d) != 2:
                raise BadBoundary(pos, "refl3 needs a derivation")
            verify_cell(d, pos + (0,))
            return d, d
        case ReflN(n, x):
            _check_dim(x, n - 1, pos)
            verify_cell(x, pos + (0,))
            return x, x
        case Step3(m):
            if not isinstance(m, META3_TYPES):
                raise BadBoundary(pos, "step3 needs a dimension-3 meta-step")
            return verify_meta(m, pos + (0,))
        case StepN(n, m):
            if not isinstance(m, META_N_TYPES) or m.dim != n:
                raise BadBoundary(pos, f"step at dimension {n} needs a matching meta-step")
            return verify_meta(m, pos + (0,))
        case Inv3(x) | InvN(_, x):
            _check_dim(x, dim(c), pos)
            a, b = verify_cell(x, pos + (0,))
            return b, a
        case Comp3(c1, c2) | CompN(_, c1, c2):
            _check_dim(c1, dim(c), pos)
            _check_dim(c2, dim(c), pos)
            a, b = verify_cell(c1, pos + (0,))
            b2, e = verify_cell(c2, pos + (1,))
            if b != b2:
                raise BadChain(pos, "composed cells do not meet")
            return a, e
    raise BadBoundary(pos, f"not a cell: {type(c).__name__}")


def _check_dim(x, k, pos):
    try:
        got = dim(x)
    except TypeError:
        raise BadBoundary(pos, "payload is not a cell") from None
    if got != k:
        raise BadBoundary(pos, f"expected a {k}-cell, found a {got}-cell")


def _payload(m):
    match m:
        case VCompReflRight(d) | VCompReflLeft(d) | InvInv(d) | VCompInvRight(d) | VCompInvLeft(d) | Can(d):
            return (d,)
        case VCompAssoc(d1, d2, d3):
            return (d1, d2, d3)
        case StepEq(s1, s2):
            return (DStep(s1), DStep(s2))
        case Pentagon(f, g, h, k):
            return (f, g, h, k)
        case Triangle(f, g):
            return (f, g)
        case Interchange(a, b):
            return (a, b)
        case WhiskerL(h, d):
            return (h, d)
        case WhiskerR(d, g):
            return (d, g)
        case LawN(_, _, cells):
            return cells
        case CanN(_, c):
            return (c,)
        case StepEqN(n, m1, m2):
            return (_step(m1, n - 1), _step(m2, n - 1))
    raise BadBoundary((), f"not a meta-step: {type(m).__name__}")


def _expected_payload_dims(m):
    match m:
        case Pentagon() | Triangle():
            return None, 1
        case WhiskerL():
            return (1, 2), None
        case WhiskerR():
            return (2, 1), None
        case LawN(n, _, _) | CanN(n, _) | StepEqN(n, _, _):
            return None, n - 1
    return None, 2


def verify_meta(m, pos=()):
    payload = _payload(m)
    dims, uniform = _expected_payload_dims(m)
    for i, x in enumerate(payload):
        _check_dim(x, dims[i] if dims else uniform, pos + (i,))
        verify_cell(x, pos + (i,))
    if isinstance(m, LawN) and m.kind not in LAW_KINDS:
        raise BadBoundary(pos, f"unknown law {m.kind!r}")
    try:
        lhs, rhs = meta_boundary(m)
    except (ValueError, IllFormed, NotEquivalent) as err:
        raise BadBoundary(pos, f"payload does not compose: {err}") from None
    if isinstance(m, (StepEq, StepEqN)) and lhs != rhs:
        raise BadBoundary(pos, "step_eq between steps with different boundaries")
    lb = verify_cell(lhs, pos)
    rb = verify_cell(rhs, pos)
    if lb != rb:
        raise BadBoundary(pos, "the two sides of the meta-step are not parallel")
    return lhs, rhs


def verify3(c):
    if not isinstance(c, CELL3_TYPES):
        raise BadBoundary((), "not a 3-cell")
    return verify_cell(c)


# -- coherence witnesses -------------------------------------------------------

_LAW3 = {
    "assoc": VCompAssoc,
    "lunit": VCompReflLeft,
    "runit": VCompReflRight,
    "linv": VCompInvLeft,
    "rinv": VCompInvRight,
    "invinv": InvInv,
}

_LAW_OF_KIND = {
    "assoc": "assoc",
    "lunit": "refl_left",
    "runit": "refl_right",
    "linv": "inv_left",
    "rinv": "inv_right",
    "invinv": "inv_inv",
}


def witness3(kind, *ds):
    """Groupoid-law 3-cell on derivations (same kinds as ``witness2``)."""
    if kind not in _LAW3:
        raise ValueError(f"unknown coherence kind {kind!r}")
    cell = Step3(_LAW3[kind](*ds))
    verify_cell(cell)
    return cell


def witnessN(n, kind, *cells):
    """Groupoid-law n-cell on (n-1)-cells, n >= 4."""
    if kind not in _LAW_OF_KIND:
        raise ValueError(f"unknown coherence kind {kind!r}")
    cell = StepN(n, LawN(n, _LAW_OF_KIND[kind], tuple(cells)))
    verify_cell(cell)
    return cell


def coherence3(kind, *args):
    """Primitive pentagon / triangle / interchange 3-cell."""
    match kind:
        case "pentagon":
            cell = Step3(Pentagon(*args))
        case "triangle":
            cell = Step3(Triangle(*args))
        case "interchange":
            cell = Step3(Interchange(*args))
        case _:
            raise ValueError(f"unknown coherence {kind!r}")
    verify_cell(cell)
    return cell


def globular_check(c):
    """src(src c) = src(tgt c) and tgt(src c) = tgt(tgt c), for cells of dimension >= 2."""
    x, y = boundary(c)
    return boundary(x) == boundary(y)
