import json
import subprocess
import sys

import pytest

from sgpcalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", "<4,6,7>", "--json")
    assert code == 0
    doc = json.loads(out)
    inv, sg = doc["invariants"], doc["semigroup"]
    assert (inv["e"], inv["eli"], inv["ulr"], inv["gll_mono"], inv["index"], inv["gr_cm"]) == (4, 3, 2, 3, 3, True)
    assert sg["type"] == 1 and sg["symmetric"] is True and sg["frobenius"] == 9
    assert doc["schema_version"] == 1 and out.endswith("\n")


def test_invariants_non_gorenstein_has_no_index(capsys):
    code, out, _ = run(capsys, "invariants", "<4,5,11>", "--json")
    doc = json.loads(out)
    assert code == 0 and "index" not in doc["invariants"]
    assert doc["semigroup"]["nearly_gorenstein"] is True


def test_invariants_table(capsys):
    code, out, _ = run(capsys, "invariants", "<4,6,7>")
    assert code == 0 and "eli" in out and "{" not in out


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "<4,5,11>", "(8,9,15,16,22)", "--json", "--witness", "9")
    doc = json.loads(out)
    assert code == 0
    assert doc["classification"]["elias"] is True
    assert doc["ideal"]["generators"] == [8, 9, 15]
    assert doc["classification"]["evidence"]["colon_criteria"] == [{"x": 9, "holds": True}]


def test_check_violation_is_data(capsys):
    code, out, _ = run(capsys, "check", "P3.22", "<4,6,7>", "--I", "(7,8)", "--J", "(4)", "--x", "4", "--json")
    assert code == 0
    (o,) = json.loads(out)["outcomes"]
    assert o["hypotheses_hold"] and not o["conclusion_holds"] and "certificate" in o


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "<4,5,11>", "--upto", "5", "--json")
    assert code == 0
    assert json.loads(out)["hilbert"]["colength_m_power"] == [0, 1, 4, 7, 11, 15]


def test_hilbert_widens_window(capsys):
    code, out, _ = run(capsys, "hilbert", "<3,5>", "--upto", "60", "--json")
    h = json.loads(out)["hilbert"]
    assert code == 0 and h["hilbert_function"][-1] == 3


def test_search_small(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "search", "--max-genus", "3", "--props", "P3.11,P3.22", "--out", str(path))
    assert code == 0 and "P3.22" in out
    doc = json.loads(path.read_text())
    assert set(doc["outcomes"]) == {"P3.11", "P3.22"}


@pytest.mark.parametrize("argv, code", [
    (["bogus"], 1),
    ([], 1),
    (["hilbert", "<4,6,7>"], 1),
    (["hilbert", "<4,6,7>", "--upto", "-1"], 1),
    (["search", "--props", "P9.9"], 1),
    (["search", "--jobs", "0"], 1),
    (["invariants", "<4,6"], 2),
    (["invariants", "<4,6>"], 2),
    (["check", "X9", "<4,6,7>"], 2),
    (["classify", "<4,6,7>", "(-1,4)"], 3),
    (["classify", "<4,6,7>", "(0)"], 3),
    (["check", "T2.20", "<4,5,11>", "--x", "4"], 3),
    (["check", "P3.22", "<4,6,7>", "--I", "(7,8)"], 3),
    (["classify", "<4,6,7>", "(7,8)", "--witness", "5"], 3),
])
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert err


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sgpcalc.cli", "invariants", "<4,6>"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "gcd" in proc.stderr
