import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import OPS, ORACLE_HI, ORACLE_LO, oracle_equivalence, oracle_nf, random_gens, random_semigroup
from sgpcalc import make_semigroup
from sgpcalc.errors import EmptyGenerators, NotIntegral, ParentMismatch
from sgpcalc.ideals import (
    canonical_ideal,
    colength,
    colon_q,
    colon_r,
    ideal_from_generators,
    intersect,
    is_nearly_gorenstein,
    maximal_ideal,
    power_of_maximal,
    principal,
    product,
    socle,
    sum_ideal,
    trace_of_canonical,
    type_of_ideal,
    type_of_quotient,
    unit_ideal,
    valuation_truncation,
)
from sgpcalc.oracle import Window


def test_normal_form_examples():
    S = make_semigroup([4, 6, 7])
    E = ideal_from_generators(S, [7, 8])
    assert E.sporadic == (7, 8) and E.threshold == 11 and E.generators == (7, 8)
    T = make_semigroup([4, 5, 11])
    E = ideal_from_generators(T, [8, 9, 15, 16, 22])
    assert E.generators == (8, 9, 15) and E.sporadic == (8, 9) and E.threshold == 12
    assert ideal_from_generators(T, [0]) == unit_ideal(T)


def test_maximal_ideal_powers():
    S = make_semigroup([4, 6, 7])
    assert maximal_ideal(S).generators == (4, 6, 7)
    m2 = power_of_maximal(S, 2)
    assert m2 == product(maximal_ideal(S), maximal_ideal(S))
    assert power_of_maximal(S, 0) == unit_ideal(S)
    assert power_of_maximal(S, 3).mu == 4


def test_colength_and_types():
    S = make_semigroup([4, 6, 7])
    E = ideal_from_generators(S, [7, 8])
    assert colength(E) == 4  # 0, 4, 6, 10
    assert type_of_quotient(E) == 1 and type_of_ideal(E) == 2
    assert colength(principal(S, 4)) == 4


def test_canonical_and_trace():
    S = make_semigroup([4, 5, 11])
    K = canonical_ideal(S)
    assert all((z in K) == (S.frobenius - z not in S) for z in range(-5, 30))
    assert trace_of_canonical(S) == maximal_ideal(S)
    assert is_nearly_gorenstein(S)
    G = make_semigroup([4, 6, 7])
    assert canonical_ideal(G) == unit_ideal(G)
    assert trace_of_canonical(G) == unit_ideal(G)


def test_socle_of_quotient():
    S = make_semigroup([4, 6, 7])
    E = ideal_from_generators(S, [7, 8])
    assert socle(E) == (10,)


def test_errors():
    S, T = make_semigroup([4, 6, 7]), make_semigroup([3, 5])
    with pytest.raises(EmptyGenerators):
        ideal_from_generators(S, [])
    with pytest.raises(ParentMismatch):
        product(principal(S, 4), principal(T, 3))
    with pytest.raises(NotIntegral):
        colength(ideal_from_generators(S, [-1]))


def test_valuation_truncation():
    S = make_semigroup([4, 6, 7])
    assert valuation_truncation(S, 5).generators == (6, 7, 8)


def test_small_oracle_sample_per_op():
    # the full 1000-instance comparison lives in the acceptance suite
    for op in OPS:
        assert oracle_equivalence(op, n=60, seed=7) == []


# -- algebraic laws --------------------------------------------------------------

@st.composite
def semigroup_and_ideals(draw, count=3, integral=False):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    S = random_semigroup(rng, max_conductor=30)
    return S, [ideal_from_generators(S, random_gens(rng, S, integral, kmax=3)) for _ in range(count)]


@settings(max_examples=120, deadline=None)
@given(semigroup_and_ideals())
def test_product_and_sum_laws(data):
    S, (A, B, C) = data
    assert product(A, B) == product(B, A)
    assert product(product(A, B), C) == product(A, product(B, C))
    assert product(A, sum_ideal(B, C)) == sum_ideal(product(A, B), product(A, C))
    assert intersect(A, sum_ideal(A, B)) == A
    assert product(A, unit_ideal(S)) == A


@settings(max_examples=120, deadline=None)
@given(semigroup_and_ideals())
def test_colon_adjunction(data):
    S, (A, B, C) = data
    # C*B inside A  iff  C inside (A : B)
    assert (product(C, B) <= A) == (C <= colon_q(A, B))
    assert product(colon_q(A, B), B) <= A
    assert colon_q(A, product(B, C)) == colon_q(colon_q(A, B), C)


@settings(max_examples=100, deadline=None)
@given(semigroup_and_ideals(integral=True))
def test_integral_invariants(data):
    S, (A, B, _) = data
    assert colon_r(A, B) == intersect(colon_q(A, B), unit_ideal(S))
    if A.is_proper():
        w = Window(S.generators, ORACLE_LO, ORACLE_HI)
        bits = w.ideal(A.generators)
        assert colength(A) == w.colength(bits)
        assert type_of_quotient(A) == w.type_of_quotient(bits)
        assert type_of_ideal(A) == w.type_of_ideal(bits)


@settings(max_examples=100, deadline=None)
@given(semigroup_and_ideals(count=1), st.integers(-20, 20))
def test_shift_is_principal_product(data, a):
    S, (A,) = data
    if a in S:
        assert A.shift(a) == product(A, principal(S, a))
    assert A.shift(a).shift(-a) == A
