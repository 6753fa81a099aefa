import pytest
from hypothesis import given

from comppaths.errors import IllFormed, SExprSyntaxError
from comppaths.expr import App, Const, Lam, Var, show as show_expr
from comppaths.path import Refl, Trans, show
from comppaths.sexpr import parse_any, parse_expr, parse_path

from strategies import exprs, paths


def test_refl_of_constant():
    assert parse_path("(refl (const v))") == Refl(Const("v"))
    assert parse_any("(refl (const v))") == Refl(Const("v"))


def test_expressions():
    e = parse_expr("(app (lam x (var x)) (const a))")
    assert e == App(Lam("x", Var("x")), Const("a"))
    assert parse_any("(lam y (var y))") == Lam("x", Var("x"))


@pytest.mark.parametrize("text, line, col", [
    ("(refl (const v)", 1, 15),
    ("(refl (const v)))", 1, 17),
    ("(refl (cnst v))", 1, 7),
    ("", 1, 1),
    ("(trans (refl (const a))\n  (refl (var 1x)))", 2, 14),
    ("(symm)", 1, 1),
])
def test_syntax_errors_carry_line_and_column(text, line, col):
    with pytest.raises(SExprSyntaxError) as info:
        parse_any(text)
    assert (info.value.line, info.value.column) == (line, col)
    assert isinstance(info.value, ValueError)


def test_mismatched_endpoints_are_ill_formed():
    text = "(trans (refl (const a)) (refl (const b)))"
    with pytest.raises(IllFormed):
        parse_path(text)
    with pytest.raises(IllFormed):
        parse_any(text)
    assert parse_path(text, check=False) == Trans(Refl(Const("a")), Refl(Const("b")))


@given(exprs())
def test_expr_round_trip(e):
    assert parse_expr(show_expr(e)) == e


@given(paths())
def test_path_round_trip(p):
    assert parse_any(show(p)) == p
