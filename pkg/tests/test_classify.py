import pytest

from sgpcalc import make_semigroup
from sgpcalc.certify import evaluate, verify_certificate
from sgpcalc.classify import (
    PROPOSITION_IDS,
    InstanceSpec,
    check_proposition,
    classify,
    criterion_3_14 as generator_criterion,
    elias_colon_criterion,
    elias_socle_criterion,
    is_burch,
    is_elias,
    is_ulrich,
    ulrich_witness_ok,
)
from sgpcalc.errors import (
    ImproperIdeal,
    NotGorenstein,
    NotIntegral,
    PreconditionFailed,
    UnknownProposition,
)
from sgpcalc.ideals import ideal_from_generators as ideal, maximal_ideal, power_of_maximal, unit_ideal

S467 = make_semigroup([4, 6, 7])
S4511 = make_semigroup([4, 5, 11])


def test_verdicts_for_powers():
    m2 = power_of_maximal(S4511, 2)
    assert (is_elias(S4511, m2), is_burch(S4511, m2), is_ulrich(S4511, m2)) == (True, True, False)
    m3 = power_of_maximal(S467, 3)
    assert (is_elias(S467, m3), is_burch(S467, m3), is_ulrich(S467, m3)) == (True, True, True)


def test_classify_report():
    rep = classify(S467, ideal(S467, [7, 8]))
    assert (rep.elias, rep.burch, rep.ulrich) == (False, False, False)
    assert (rep.type_of_quotient, rep.type_of_ideal) == (1, 2)
    assert [a for a, _ in rep.colon_criteria] == [4, 6, 7, 8]
    doc = rep.to_json()
    assert doc["evidence"]["witness_search"] == "monomial"
    assert set(doc) >= {"elias", "burch", "ulrich", "evidence"}


def test_colon_criterion_needs_monomial_in_m():
    E = power_of_maximal(S4511, 2)
    assert not elias_colon_criterion(S4511, E, 9)
    for a in (0, 6, -4):
        with pytest.raises(PreconditionFailed):
            elias_colon_criterion(S4511, E, a)


def test_verdict_preconditions():
    with pytest.raises(NotIntegral):
        is_elias(S467, ideal(S467, [-1]))
    with pytest.raises(ImproperIdeal):
        is_burch(S467, unit_ideal(S467))


def test_witness_and_socle_criteria():
    m = maximal_ideal(S467)
    assert ulrich_witness_ok(S467, power_of_maximal(S467, 3))
    assert not ulrich_witness_ok(S467, m)
    # (I :_Q m) inside R, read off the oracle: true for m^2 over <4,5,11>, false for (7,8) over <4,6,7>
    assert elias_socle_criterion(S4511, power_of_maximal(S4511, 2))
    assert not elias_socle_criterion(S467, ideal(S467, [7, 8]))


def test_proposition_examples():
    out = check_proposition("P3.22", InstanceSpec(S467, I=ideal(S467, [7, 8]), J=ideal(S467, [4]), x=4))
    assert out.hypotheses_hold and not out.conclusion_holds and out.violation
    out = check_proposition("T3.5", InstanceSpec(S467))
    assert out.hypotheses_hold and out.conclusion_holds
    out = check_proposition("P3.18", InstanceSpec(S467, I=power_of_maximal(S467, 2)))
    assert not out.hypotheses_hold and not out.violation
    for S in (S467, S4511):
        assert check_proposition("L2.13", InstanceSpec(S)).conclusion_holds


def test_least_witness_is_found():
    out = check_proposition("P3.22", InstanceSpec(S467, I=ideal(S467, [7, 8]), J=ideal(S467, [4])))
    assert out.instance.x == 4 and out.violation


def test_generator_criterion():
    out = generator_criterion(S4511, ideal(S4511, [4, 5]), 4)
    assert out.hypotheses_hold and not out.violation
    with pytest.raises(PreconditionFailed):
        generator_criterion(S4511, ideal(S4511, [8, 9]), 4)


def test_errors():
    with pytest.raises(UnknownProposition):
        check_proposition("P9.99", InstanceSpec(S467))
    with pytest.raises(PreconditionFailed):
        check_proposition("P3.22", InstanceSpec(S467, I=ideal(S467, [7, 8])))
    with pytest.raises(NotGorenstein):
        check_proposition("T2.20", InstanceSpec(S4511, x=4))


CASES = [
    ("P2.3g", S467, {}),
    ("L2.13", S4511, {}),
    ("T2.20", S467, {"x": 4}),
    ("C2.21", S467, {"x": 4}),
    ("T3.5", S4511, {}),
    ("C3.8a", S467, {}),
    ("P3.11", S4511, {"I": (8, 9, 15), "x": 9}),
    ("P3.14", S4511, {"I": (4, 5), "x": 4}),
    ("C3.15", S467, {"I": (7, 8), "J": (4,)}),
    ("P3.18", S467, {"I": (12, 14, 15, 17)}),
    ("P3.19", S467, {"I": (12, 14, 15, 17)}),
    ("P3.21", S467, {"I": (7, 8), "J": (4,)}),
    ("P3.22", S467, {"I": (7, 8), "J": (4,)}),
    ("C3.24", S467, {"I": (6, 7), "J": (4,)}),
    ("P3.25", S467, {"I": (8,), "J": (8,)}),
    ("C3.26a", S467, {"I": (8,), "J": (8,)}),
    ("C3.26b", S467, {"I": (8,), "J": (8,)}),
    ("P3.27", S4511, {"I": (4, 5), "J": (4, 5), "K": (4, 5)}),
]


@pytest.mark.parametrize("pid, S, args", CASES, ids=[c[0] for c in CASES])
def test_checker_agrees_with_oracle(pid, S, args):
    inst = InstanceSpec(S, **{k: (ideal(S, v) if k != "x" else v) for k, v in args.items()})
    out = check_proposition(pid, inst)
    x, hyps, concl, _, _ = evaluate(pid, S.generators, args.get("I"), args.get("J"), args.get("K"), args.get("x"))
    assert out.hypotheses == hyps
    assert out.conclusion == concl
    if out.violation:
        ok, problems = verify_certificate(out.certificate())
        assert ok, problems


def test_all_ids_have_cases():
    assert {c[0] for c in CASES} == set(PROPOSITION_IDS)


def test_forged_certificate_is_rejected():
    out = check_proposition("P3.22", InstanceSpec(S467, I=ideal(S467, [7, 8]), J=ideal(S467, [4]), x=4))
    cert = out.certificate()
    ok, _ = verify_certificate(cert)
    assert ok
    cert["conclusion"] = {k: (not v) for k, v in cert["conclusion"].items()}
    ok, problems = verify_certificate(cert)
    assert not ok and problems
