"""Structural laws of the classifiers, on random semigroups beyond the enumerated corpus."""

import random

from hypothesis import given, settings, strategies as st

from helpers import random_gens, random_semigroup
from sgpcalc.classify import (
    _burch,
    elias_colon_criterion,
    elias_socle_criterion,
    is_elias,
    is_ulrich,
    ulrich_witness_ok,
)
from sgpcalc.ideals import (
    canonical_ideal,
    colon_q,
    ideal_from_generators,
    power_of_maximal,
    product,
    sum_ideal,
    type_of_ideal,
    type_of_quotient,
    valuation_truncation,
)

seeds = st.integers(0, 2**32 - 1)


def draw(seed, n=1):
    rng = random.Random(seed)
    S = random_semigroup(rng, max_conductor=36)
    ideals = []
    while len(ideals) < n:
        E = ideal_from_generators(S, random_gens(rng, S, integral=True))
        if E.is_proper():
            ideals.append(E)
    return rng, S, ideals


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_criteria_imply_elias(seed):
    rng, S, (E,) = draw(seed)
    for a in S.elements(1, E.min + S.multiplicity + 1):
        if elias_colon_criterion(S, E, a):
            assert is_elias(S, E)
    if elias_socle_criterion(S, E):
        assert is_elias(S, E)


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_elias_closed_under_inclusion(seed):
    rng, S, (E, F) = draw(seed, 2)
    if is_elias(S, E):
        assert is_elias(S, product(E, F))
        assert is_elias(S, E & F)
    if is_elias(S, sum_ideal(E, F)):
        assert is_elias(S, E) and is_elias(S, F)


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_type_inequality_and_duality(seed):
    rng, S, (E,) = draw(seed)
    assert type_of_quotient(E) <= type_of_ideal(E)
    K = canonical_ideal(S)
    assert colon_q(K, colon_q(K, E)) == E


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_ulrich_witness_equivalence(seed):
    rng, S, (E,) = draw(seed)
    assert is_ulrich(S, E) == ulrich_witness_ok(S, E)


@settings(max_examples=80, deadline=None)
@given(seeds, st.integers(1, 5))
def test_powers_and_truncations_are_burch(seed, t):
    rng, S, _ = draw(seed)
    assert _burch(power_of_maximal(S, t))
    v = rng.choice(S.elements(1, S.conductor + 2 * S.multiplicity))
    assert _burch(valuation_truncation(S, v))
