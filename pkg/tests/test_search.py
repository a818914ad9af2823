import json

import pytest

from sgpcalc.certify import verify_certificate
from sgpcalc.corpus import SearchConfig
from sgpcalc.errors import BackendDisagreement
from sgpcalc import search
from sgpcalc.search import SEARCHABLE, corpus_properties, dumps_report, run_search


@pytest.fixture(scope="module")
def small_report():
    return run_search(SearchConfig(max_genus=5))


def test_report_shape(small_report):
    rep = small_report
    assert rep["schema_version"] == 1 and rep["witness_search"] == "monomial"
    assert list(rep["outcomes"]) == list(SEARCHABLE)
    for o in rep["outcomes"].values():
        assert set(o) == {"instances_checked", "hypotheses_held", "violation_count",
                          "violations_by_semigroup", "violations", "violations_listed"}
        assert o["hypotheses_held"] <= o["instances_checked"]
        assert o["violation_count"] == sum(o["violations_by_semigroup"].values())
        assert o["violations_listed"] == len(o["violations"]) <= o["violation_count"]


def test_pinned_instance_is_listed(small_report):
    listed = [v["instance"] for v in small_report["outcomes"]["P3.22"]["violations"]]
    assert {"semigroup": [4, 6, 7], "I": [7, 8], "J": [4], "x": 4} in listed


def test_sound_criteria_have_no_violations(small_report):
    for p in ("P3.11", "T3.5", "P2.3g", "L2.13", "C3.8a", "P3.18", "P3.19", "P3.27"):
        assert small_report["outcomes"][p]["violation_count"] == 0, p


def test_listed_certificates_verify(small_report):
    for o in small_report["outcomes"].values():
        for cert in o["violations"]:
            ok, problems = verify_certificate(cert)
            assert ok, (cert["instance"], problems)


def test_prop_filter_and_determinism():
    cfg = SearchConfig(max_genus=4, props=("P3.22", "C3.24"))
    a = dumps_report(run_search(cfg))
    b = dumps_report(run_search(SearchConfig(max_genus=4, props=("P3.22", "C3.24"), jobs=3)))
    assert a == b
    assert set(json.loads(a)["outcomes"]) == {"P3.22", "C3.24"}


def test_backends_give_same_report():
    cfg = SearchConfig(max_genus=3)
    assert run_search(cfg, "numba") == run_search(cfg, "numpy")


def test_replay_mismatch_raises(monkeypatch):
    # pretend the fast scan flagged an instance the object-level checker clears
    real = search.check_proposition

    def lying(prop, inst):
        out = real(prop, inst)
        out.conclusion = {k: True for k in out.conclusion}
        out.conclusion_holds = True
        return out

    monkeypatch.setattr(search, "check_proposition", lying)
    with pytest.raises(BackendDisagreement):
        run_search(SearchConfig(max_genus=5, props=("P3.22",)))


def test_property_sweep_small():
    props = corpus_properties(SearchConfig(max_genus=5))
    for name, rec in props.items():
        assert rec["violations"] == 0, (name, rec["first_counterexample"])
    assert all(rec["checked"] > 0 for rec in props.values())
