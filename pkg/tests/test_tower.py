import pytest
from hypothesis import given, settings, strategies as st

from comppaths import derivation as dv
from comppaths import tower
from comppaths.derivation import DComp, DInv, DRefl, DStep, gamma
from comppaths.errors import BadBoundary, BadChain, NotParallel
from comppaths.expr import App, Const, Lam, Var
from comppaths.path import Beta, MuR, Refl, Symm, Trans
from comppaths.tower import (
    Can, CanN, Comp3, CompN, Interchange, Inv3, InvInv, LawN, Pentagon, Refl3, ReflN, Step3,
    StepEq, StepN, Triangle, VCompAssoc, VCompReflRight, c3_boundary, chi, chi3, chiN,
    coherence3, globular_check, ms3_boundary, verify3, verify_cell, witness3, witnessN,
)
from comppaths.trs import RuleId, normalize, step

from cellgen import CellGen

I = Lam("x", Var("x"))
a = Const("a")
Ia = App(I, a)
p = Beta(Ia)
q = Trans(p, Refl(a))
d_trr = DStep(step(q, (), RuleId.TRR))                              # q => p


def two_routes():
    """Two distinct single-step derivations between the same paths."""
    r = Trans(Refl(a), Refl(a))
    return DStep(step(r, (), RuleId.TLR)), DStep(step(r, (), RuleId.TRR))


def test_meta_boundary_examples():
    lhs, rhs = ms3_boundary(VCompReflRight(d_trr))
    assert lhs == DComp(d_trr, DRefl(p)) and rhs == d_trr
    assert ms3_boundary(Can(DRefl(p))) == (DRefl(p), gamma(p, p))


def test_pentagon_sides_share_boundary():
    f, g, h, k = p, Refl(a), Symm(p), p
    left, right = ms3_boundary(Pentagon(f, g, h, k))
    expected = (Trans(Trans(Trans(f, g), h), k), Trans(f, Trans(g, Trans(h, k))))
    assert dv.verify(left) == expected
    assert dv.verify(right) == expected


def test_cell3_examples():
    assert c3_boundary(Refl3(d_trr)) == (d_trr, d_trr)
    d1, d2 = two_routes()
    assert verify3(Comp3(Step3(Can(d1)), Inv3(Step3(Can(d2))))) == (d1, d2)
    with pytest.raises(BadChain):
        verify3(Comp3(Refl3(d_trr), Refl3(DRefl(q))))
    # boundary-equal steps are the same step, so this one does chain
    verify3(Comp3(Refl3(d1), Refl3(d2)))


def test_chi3_examples():
    assert verify3(chi3(d_trr, d_trr)) == (d_trr, d_trr)
    d1, d2 = two_routes()
    assert d1 == d2  # step witnesses are compared by boundary only
    assert d1.s.rule != d2.s.rule
    assert verify3(chi3(d1, d2)) == (d1, d2)
    with pytest.raises(NotParallel):
        chi3(d1, d_trr)


def test_loop_contraction_example():
    loop = DComp(d_trr, DInv(d_trr))
    assert verify3(chi3(loop, DRefl(q))) == (loop, DRefl(q))


def test_chiN_examples():
    c = chi3(d_trr, d_trr)
    assert verify_cell(chiN(4, c, c)) == (c, c)
    assert verify_cell(chiN(4, Refl3(d_trr), c)) == (Refl3(d_trr), c)
    e = chiN(4, Refl3(d_trr), c)
    five = chiN(5, e, e)
    verify_cell(five)
    assert globular_check(five)
    assert tower.dim(five) == 5
    with pytest.raises(ValueError):
        chiN(3, c, c)
    with pytest.raises(NotParallel):
        chiN(4, c, Refl3(DRefl(p)))
    assert chi(c, c) == chiN(4, c, c)


def test_witness3_examples():
    d1, d2, d3 = DRefl(q), d_trr, DRefl(p)
    c = witness3("assoc", d1, d2, d3)
    assert c == Step3(VCompAssoc(d1, d2, d3))
    assert tower.boundary(c) == (DComp(DComp(d1, d2), d3), DComp(d1, DComp(d2, d3)))
    assert tower.boundary(witness3("lunit", d2)) == (DComp(DRefl(q), d2), d2)
    assert tower.boundary(witness3("invinv", d2)) == (DInv(DInv(d2)), d2)
    with pytest.raises(BadChain):
        witness3("assoc", d2, d2, d2)


def test_witnessN():
    c = chi3(d_trr, d_trr)
    w = witnessN(4, "runit", c)
    assert tower.boundary(w) == (Comp3(c, Refl3(d_trr)), c)
    assert w == StepN(4, LawN(4, "refl_right", (c,)))


def test_coherence3_examples():
    f, g, h, k = p, Refl(a), Symm(p), p
    cell = coherence3("pentagon", f, g, h, k)
    x, y = verify3(cell)
    assert dv.d_src(x) == dv.d_src(y) == Trans(Trans(Trans(f, g), h), k)
    assert dv.d_tgt(x) == dv.d_tgt(y) == Trans(f, Trans(g, Trans(h, k)))
    verify3(coherence3("triangle", Refl(a), Refl(a)))
    verify3(coherence3("triangle", p, Symm(p)))
    x, y = verify3(coherence3("interchange", DRefl(p), DRefl(Refl(a))))
    assert dv.boundary(x) == dv.boundary(y)
    with pytest.raises(ValueError):
        coherence3("hexagon", p)


def test_malformed_cells_are_rejected():
    d1, d2 = two_routes()
    with pytest.raises(BadBoundary):
        verify3(Step3(StepEq(d_trr.s, d1.s)))
    verify3(Step3(StepEq(d1.s, d2.s)))
    with pytest.raises(BadBoundary):
        verify_cell(Step3(CanN(4, Refl3(d1))))
    with pytest.raises(BadBoundary):
        verify_cell(ReflN(4, d1))
    with pytest.raises(BadBoundary):
        verify_cell(Step3(Interchange(p, p)))
    with pytest.raises(BadBoundary):
        verify_cell(StepN(4, LawN(4, "bogus", (Refl3(d1),))))
    with pytest.raises(BadChain):
        verify_cell(CompN(4, ReflN(4, Refl3(d1)), ReflN(4, Refl3(d_trr))))
    with pytest.raises(BadBoundary):
        verify_cell(Step3(InvInv(Refl(a))))


def test_can_needs_a_shared_leftmost_outermost_normal_form():
    # a valid one-step derivation whose endpoints normalize apart under the shipped rules
    src = MuR(Const("f"), Symm(Refl(a)))
    d = DStep(step(src, (0,), RuleId.SR))
    dv.verify(d)
    assert normalize(src).nf != normalize(dv.d_tgt(d)).nf
    with pytest.raises(BadBoundary):
        verify3(Step3(Can(d)))


def test_triangle_sides_by_hand():
    f, g = p, Symm(p)
    left, right = ms3_boundary(Triangle(f, g))
    mid = Refl(a)
    assert dv.verify(left) == (Trans(Trans(f, mid), g), Trans(f, g))
    assert dv.verify(right) == dv.verify(left)


def test_identity_compose_inverse_by_dimension():
    assert tower.identity(a) == Refl(a)
    assert tower.identity(p) == DRefl(p)
    assert tower.identity(d_trr) == Refl3(d_trr)
    c = Refl3(d_trr)
    assert tower.identity(c) == ReflN(4, c)
    assert tower.compose(p, Refl(a)) == Trans(p, Refl(a))
    assert tower.inverse(d_trr) == DInv(d_trr)
    with pytest.raises(BadChain):
        tower.compose(p, p)


@settings(max_examples=60)
@given(st.integers(0, 10_000), st.sampled_from([2, 3, 4]))
def test_generated_cells_verify_and_are_globular(seed, k):
    gen = CellGen(seed)
    cell = {2: gen.derivation, 3: gen.cell3, 4: gen.cell4}[k]()
    assert tower.dim(cell) == k
    verify_cell(cell)
    assert globular_check(cell)
    x, y = tower.boundary(cell)
    assert tower.boundary(x) == tower.boundary(y)
