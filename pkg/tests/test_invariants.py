import pytest

from sgpcalc import make_semigroup
from sgpcalc.certify import _Ring, oracle_window
from sgpcalc.corpus import enumerate_semigroups
from sgpcalc.errors import NotGorenstein, NotInSemigroup
from sgpcalc.ideals import colength, principal
from sgpcalc.invariants import (
    check_thm_2_20,
    elias_index,
    gll_monomial,
    gr_is_cm,
    hilbert_function,
    index_of_gorenstein,
    invariant_report,
    is_ord_regular,
    is_superficial_monomial,
    reduction_number_of_m,
    samuel_length,
    ulrich_index,
)

CORPUS = [S.generators for S in enumerate_semigroups(6, include_trivial=False)]


def test_gorenstein_profile():
    S = make_semigroup([4, 6, 7])
    rep = invariant_report(S)
    assert (rep.e, rep.eli, rep.ulr, rep.gll_mono, rep.gll_witness, rep.index, rep.gr_cm) == (4, 3, 2, 3, 4, 3, True)
    assert rep.gll_exact
    assert reduction_number_of_m(S, 4) == 2


def test_non_gorenstein_profile():
    S = make_semigroup([4, 5, 11])
    rep = invariant_report(S)
    assert (rep.ring_type, rep.eli, rep.ulr, rep.gll_mono, rep.gr_cm) == (2, 2, 3, 3, False)
    assert rep.index is None and rep.nearly_gorenstein and not rep.gll_exact
    with pytest.raises(NotGorenstein):
        index_of_gorenstein(S)


def test_samuel_values():
    S = make_semigroup([4, 5, 11])
    assert [samuel_length(S, n) for n in range(6)] == [0, 1, 4, 7, 11, 15]
    assert [hilbert_function(S, n) for n in range(5)] == [1, 3, 3, 4, 4]
    assert samuel_length(make_semigroup([4, 6, 7]), 2) == 4


def test_thm_check_on_gorenstein_ring():
    chk = check_thm_2_20(make_semigroup([4, 6, 7]), 4)
    assert chk.t == 1 and chk.s == 3
    assert chk.injective_up_to_s and chk.layer_verdicts == [True, True, True]
    assert chk.gll_bound_holds and chk.containment_holds and chk.power_mu == 4
    assert not chk.violation


def test_element_preconditions():
    S = make_semigroup([4, 6, 7])
    for fn in (is_ord_regular, reduction_number_of_m, is_superficial_monomial):
        with pytest.raises(NotInSemigroup):
            fn(S, 5)


def test_superficial_multiplicity_element():
    assert is_superficial_monomial(make_semigroup([4, 6, 7]), 4)
    assert is_superficial_monomial(make_semigroup([4, 5, 11]), 4)


@pytest.mark.parametrize("gens", CORPUS)
def test_invariants_match_oracle(gens):
    S = make_semigroup(gens)
    R = _Ring(oracle_window(gens))
    assert elias_index(S) == R.eli()
    assert ulrich_index(S) == R.ulr()
    assert gll_monomial(S) == R.gll()
    assert gr_is_cm(S) == R.ord_regular(S.multiplicity)
    assert reduction_number_of_m(S, S.multiplicity) == R.reduction_number(S.multiplicity)
    assert S.symmetric == R.symmetric()
    w = R.w
    for n in range(0, S.conductor + 3):
        assert samuel_length(S, n) == w.colength(R.power(n))


@pytest.mark.parametrize("gens", CORPUS)
def test_structural_relations(gens):
    S = make_semigroup(gens)
    e, c = S.multiplicity, S.conductor
    eli, ulr, (g, _) = elias_index(S), ulrich_index(S), gll_monomial(S)
    assert eli <= g
    assert colength(principal(S, e)) == e
    for n in range(c, c + 3):
        assert hilbert_function(S, n) == e
    if S.symmetric:
        assert eli <= e
    if gr_is_cm(S):
        assert eli == g == ulr + 1


def test_dvr_lengths():
    S = make_semigroup([1])
    assert [samuel_length(S, n) for n in range(6)] == [0, 1, 2, 3, 4, 5]
