"""Hypothesis strategies for terms and formulas."""
from hypothesis import strategies as st

from tparadox.syntax import (
    All, And, Eq, Ex, Fn, Neq, NotPar, NotTr, Num, Or, Par, Quote, Tr, Var,
)

NAMES = ("a", "b", "c")
VARS = ("x", "y", "z")

nums = st.integers(min_value=0, max_value=50).map(Num)
variables = st.sampled_from(VARS).map(Var)
quotes = st.sampled_from(NAMES).map(Quote)


def _apps(sub):
    unary = st.tuples(st.sampled_from(["S", "num", "dT", "dP", "dnT", "dnP", "dneg"]), sub).map(
        lambda p: Fn(p[0], (p[1],)))
    binary = st.tuples(st.sampled_from(["add", "mul", "dEq", "dNeq", "dAnd", "dOr", "iterT", "inst"]),
                       sub, sub).map(lambda p: Fn(p[0], (p[1], p[2])))
    binder = st.tuples(st.sampled_from(["dAll", "dEx"]), variables, sub).map(
        lambda p: Fn(p[0], (p[1], p[2])))
    return unary | binary | binder


terms = st.recursive(nums | variables | quotes, _apps, max_leaves=4)
closed_terms = st.recursive(nums | quotes, _apps, max_leaves=3).filter(
    lambda t: not (isinstance(t, Fn) and t.name in ("dAll", "dEx")))


def _literals(term_strategy):
    return (st.tuples(term_strategy, term_strategy).map(lambda p: Eq(*p))
            | st.tuples(term_strategy, term_strategy).map(lambda p: Neq(*p))
            | term_strategy.map(Tr) | term_strategy.map(NotTr)
            | term_strategy.map(Par) | term_strategy.map(NotPar))


def _compound(sub):
    return (st.tuples(sub, sub).map(lambda p: And(*p))
            | st.tuples(sub, sub).map(lambda p: Or(*p))
            | st.tuples(st.sampled_from(VARS), sub).map(lambda p: All(*p))
            | st.tuples(st.sampled_from(VARS), sub).map(lambda p: Ex(*p)))


formulas = st.recursive(_literals(terms), _compound, max_leaves=6)

# sentences over numerals only: every closed term evaluates without a coding table
_arith_terms = st.recursive(nums, lambda s: st.tuples(st.sampled_from(["add", "mul"]), s, s).map(
    lambda p: Fn(p[0], (p[1], p[2]))) | s.map(lambda t: Fn("S", (t,))), max_leaves=3)
arith_literals = (st.tuples(_arith_terms, _arith_terms).map(lambda p: Eq(*p))
                  | st.tuples(_arith_terms, _arith_terms).map(lambda p: Neq(*p)))
