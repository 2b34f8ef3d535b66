import random

import pytest
from hypothesis import given, settings

from oracle import naive_value, random_sets, random_universe, shrink
from strategies import arith_literals
from tparadox.coding import CodingTable, build_universe
from tparadox.dsl import parse_definitions, parse_formula
from tparadox.semantics import (
    FALSE, TRUE, UNDEFINED, PartialModel, is_consistent, is_sound, sat_sequent,
    search_countermodel, value,
)
from tparadox.syntax import Eq, FormulaError, Num, Or, Tr, Var, negate
from tparadox.zoo import ZooSpec, build_zoo

_SYMBOL = {TRUE: "T", FALSE: "F", UNDEFINED: "U"}


@pytest.fixture(scope="module")
def liar_universe():
    env = parse_definitions("#domain 3\nlam := ~T(quote(lam))\ntau := T(quote(tau))\n")
    return build_universe(CodingTable(env), seeds=[parse_formula("all x. T(x) | ~T(x)")])


def test_empty_model(liar_universe):
    M = PartialModel(liar_universe)
    assert value(M, Eq(Num(1), Num(1))) is TRUE
    assert value(M, parse_formula("0 = 1")) is FALSE
    assert value(M, parse_formula("T(quote(lam))")) is UNDEFINED
    assert value(M, parse_formula("T(quote(lam)) | 0 = 0")) is TRUE
    assert value(M, parse_formula("T(quote(lam)) & 0 = 1")) is FALSE


def test_literals_read_the_sets(liar_universe):
    M = PartialModel(liar_universe, t_plus={1}, p_minus={0})
    assert value(M, parse_formula("T(quote(tau))")) is TRUE
    assert value(M, parse_formula("~T(quote(tau))")) is FALSE
    assert value(M, parse_formula("P(quote(lam))")) is FALSE
    assert value(M, parse_formula("~P(quote(lam))")) is TRUE


def test_truth_of_non_codes_is_undefined(liar_universe):
    M = PartialModel(liar_universe, t_plus=liar_universe.codes)
    assert value(M, Tr(Num(10_000))) is UNDEFINED


def test_quantifiers_range_over_the_domain(liar_universe):
    M = PartialModel(liar_universe)
    assert value(M, parse_formula("ex x. x = 3")) is TRUE
    assert value(M, parse_formula("ex x. x = 4")) is FALSE
    assert value(M, parse_formula("all x. x != 4")) is TRUE


def test_value_needs_a_sentence(liar_universe):
    with pytest.raises(FormulaError):
        value(PartialModel(liar_universe), Tr(Var("x")))


def test_models_reject_foreign_codes(liar_universe):
    with pytest.raises(ValueError):
        PartialModel(liar_universe, t_plus={10_000})


@given(arith_literals)
@settings(max_examples=200)
def test_arithmetic_is_classical(phi):
    env = parse_definitions("#domain 1\nz := 0 = 0\n")
    u = build_universe(CodingTable(env))
    M = PartialModel(u)
    v = value(M, phi)
    assert v in (TRUE, FALSE)
    assert value(M, negate(phi)) is (FALSE if v is TRUE else TRUE)
    assert value(M, Or(phi, negate(phi))) is TRUE


def test_negation_flips_values_everywhere():
    rng = random.Random(7)
    for _ in range(100):
        _, u = random_universe(rng, max_size=16)
        M = PartialModel(u, *random_sets(rng, u.codes))
        for c in u.codes:
            v = value(M, u.formula(c))
            assert value(M, u.formula(u.negation(c))) is {TRUE: FALSE, FALSE: TRUE, UNDEFINED: UNDEFINED}[v]


def test_agrees_with_naive_evaluator():
    rng = random.Random(11)
    for _ in range(200):
        _, u = random_universe(rng, max_size=16)
        sets = random_sets(rng, u.codes)
        M = PartialModel(u, *sets)
        for c in u.codes:
            phi = u.formula(c)
            assert _SYMBOL[value(M, phi)] == naive_value(sets, phi, u.table, u.domain)


def test_persistence_under_extension():
    rng = random.Random(3)
    for _ in range(300):
        _, u = random_universe(rng, max_size=16)
        big = random_sets(rng, u.codes)
        small = shrink(rng, big)
        M, N = PartialModel(u, *small), PartialModel(u, *big)
        assert M <= N
        for c in u.codes:
            v = value(M, u.formula(c))
            if v is not UNDEFINED:
                assert value(N, u.formula(c)) is v


def test_sequents(liar_universe):
    M = PartialModel(liar_universe, t_plus={1})
    tau, zero_one = parse_formula("T(quote(tau))"), parse_formula("0 = 1")
    assert sat_sequent(M, ([tau], [tau]))
    assert not sat_sequent(M, ([], [zero_one]))
    assert sat_sequent(M, ([zero_one], []))
    assert sat_sequent(M, ([parse_formula("T(quote(lam))")], []))   # undefined antecedent


def test_consistency_and_soundness(liar_universe):
    assert is_consistent(PartialModel(liar_universe, t_plus={0}, t_minus={1}))
    assert not is_consistent(PartialModel(liar_universe, t_plus={0}, t_minus={0}))
    # the liar is base paradoxical; deciding it makes the model unsound
    assert is_sound(PartialModel(liar_universe))
    assert not is_sound(PartialModel(liar_universe, t_plus={0}))


def test_countermodel_separates_p_from_untruth_of_p():
    env = parse_definitions("#domain 2\nlam := ~T(quote(lam))\n")
    lhs, rhs = parse_formula("P(quote(lam))"), parse_formula("~T(dP(quote(lam)))")
    M = search_countermodel(lhs, rhs, env)
    assert M is not None
    assert value(M, lhs) is not value(M, rhs)


def test_countermodel_separates_mcgee_from_its_untruth():
    env = build_zoo(ZooSpec(sentences=("mcgee",), domain=6, mcgee_k=1))
    mu = env.definitions["mu"]
    not_t_mu = parse_formula("~T(0)")      # mu has code 0
    M = search_countermodel(mu, not_t_mu, env)
    assert M is not None
    assert value(M, mu) is not value(M, not_t_mu)


def test_no_countermodel_for_equivalent_sentences():
    env = parse_definitions("#domain 2\nlam := ~T(quote(lam))\n")
    lhs, rhs = parse_formula("T(quote(lam)) & 0 = 0"), parse_formula("T(quote(lam))")
    assert search_countermodel(lhs, rhs, env) is None
