import pytest
from hypothesis import given

from strategies import closed_terms, formulas
from tparadox import syntax as sx
from tparadox.syntax import (
    All, And, Eq, Ex, FormulaError, Neq, NotPar, NotTr, Num, Or, Par, Quote, Tr, Var, fn, negate,
)


def test_numerals_are_natural():
    with pytest.raises(FormulaError):
        Num(-1)


def test_fn_checks_name_and_arity():
    assert fn("S", Num(0)) == sx.Fn("S", (Num(0),))
    with pytest.raises(FormulaError):
        fn("S", Num(0), Num(1))
    with pytest.raises(FormulaError):
        fn("nope", Num(0))


def test_binder_builders_take_a_variable():
    with pytest.raises(FormulaError):
        fn("dAll", Num(0), Num(1))
    t = fn("dAll", Var("x"), Num(3))
    assert sx.term_free_vars(t) == frozenset()


def test_negation_is_de_morgan_dual():
    x = Var("x")
    phi = All("x", Or(Tr(x), And(Eq(x, Num(0)), NotPar(x))))
    assert negate(phi) == Ex("x", And(NotTr(x), Or(Neq(x, Num(0)), Par(x))))


@given(formulas)
def test_negation_is_an_involution(phi):
    assert negate(negate(phi)) == phi
    assert negate(phi) != phi


@given(formulas)
def test_negation_preserves_size_and_free_variables(phi):
    assert sx.size(negate(phi)) == sx.size(phi)
    assert sx.free_vars(negate(phi)) == sx.free_vars(phi)


def test_free_variables_respect_binding():
    phi = All("x", Eq(Var("x"), Var("y")))
    assert sx.free_vars(phi) == {"y"}
    assert not sx.is_closed(phi)
    assert sx.is_closed(All("x", Tr(Var("x"))))


@given(formulas, closed_terms)
def test_substituting_a_closed_term_removes_the_variable(phi, t):
    out = sx.substitute(phi, "x", t)
    assert "x" not in sx.free_vars(out)
    assert sx.free_vars(out) == sx.free_vars(phi) - {"x"}


def test_substitution_stops_at_binders():
    phi = And(Tr(Var("x")), All("x", Tr(Var("x"))))
    assert sx.substitute(phi, "x", Num(4)) == And(Tr(Num(4)), All("x", Tr(Var("x"))))


def test_substitute_rejects_open_terms_and_capture():
    with pytest.raises(FormulaError):
        sx.substitute(Tr(Var("x")), "x", Var("y"))
    with pytest.raises(FormulaError):
        sx.substitute_open(All("y", Eq(Var("x"), Var("y"))), "x", Var("y"))
    assert sx.substitute_open(Tr(Var("x")), "x", Var("u")) == Tr(Var("u"))


def test_quoted_names_and_arithmetic():
    phi = Or(Tr(Quote("a")), Eq(fn("dT", Quote("b")), Num(0)))
    assert sx.formula_quoted_names(phi) == {"a", "b"}
    assert not sx.is_arithmetic(phi)
    assert sx.is_arithmetic(And(Eq(Num(1), Num(1)), Neq(Var("x"), Num(0))))
