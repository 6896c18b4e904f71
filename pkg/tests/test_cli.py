import csv
import io
import json
import subprocess
import sys
from math import gcd

import pytest

from twisted_torus import classify, new_params
from twisted_torus.census import CSV_HEADER
from twisted_torus.cli import main
from twisted_torus.report import classification_dict


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_classify_hyperbolic():
    assert run("classify", "8", "2", "3", "4") == (0, "Hyperbolic\n")


def test_classify_torus_link():
    code, text = run("classify", "6", "2", "6", "5")
    assert code == 0
    assert text.splitlines()[0] == "TorusLink T(6,32)"


def test_classify_out_of_range(capsys):
    code, text = run("classify", "8", "2", "11", "4")
    assert code == 2
    assert text == ""
    err = capsys.readouterr().err
    assert len(err.strip().splitlines()) == 1
    assert "r <= p + q" in err


def test_classify_undetermined_exits_zero():
    code, text = run("classify", "8", "2", "5", "2")
    assert code == 0
    assert text.startswith("Undetermined small-twist")


@pytest.mark.parametrize("t", [(8, 2, 3, 4), (10, 4, 9, 5), (6, 3, 4, 7), (2, 8, 2, 3), (5, 3, 2, 4)])
def test_classify_json_matches_library(t):
    code, text = run("classify", *map(str, t), "--json")
    assert code == 0
    report = json.loads(text)
    assert report["classification"] == classification_dict(classify(new_params(*t)))
    assert run("classify", *map(str, t), "--json")[1] == text


def test_classify_json_sorted_keys():
    text = run("classify", "10", "4", "9", "5", "--json")[1]
    assert text == json.dumps(json.loads(text), sort_keys=True, separators=(",", ": ")) + "\n"


def test_braid_word_output():
    assert run("braid", "2", "2", "2", "1", "--format", "braid-word") == (0, "2 | 1 1 1 1\n")


def test_braid_pd_output():
    code, text = run("braid", "4", "2", "3", "1", "--format", "pd")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 12
    assert all(line.startswith("X[") for line in lines)


def test_braid_unsupported(capsys):
    assert run("braid", "6", "4", "7", "2")[0] == 2
    assert "r > p" in capsys.readouterr().err


def test_invariants_text():
    code, text = run("invariants", "8", "2", "5", "4")
    assert code == 0
    assert "components: 2" in text
    assert "linking number: 4" in text
    assert "twist-region split: (3,2)" in text
    assert "T-link: T((5,20),(8,2))" in text


def test_invariants_companions():
    text = run("invariants", "10", "4", "9", "5")[1]
    assert "core: T(2,11), cable: T(2,45)" in text
    report = json.loads(run("invariants", "10", "4", "9", "5", "--json")[1])
    assert report["companions"]["torus_core"] == {"a": 2, "b": 11, "trivial": False}
    assert report["companions"]["cabled_component"]["b"] == 45


def test_invariants_knot_case():
    text = run("invariants", "5", "3", "2", "4")[1]
    assert "components: 1" in text
    assert "twisted torus knot" in text


def test_invariants_discrepancy_annotated():
    report = json.loads(run("invariants", "6", "3", "4", "7", "--json")[1])
    assert report["linking_number"] == 4
    assert report["linking_number_parallel"] == 2
    assert report["linking_discrepancy"] is True


def test_census_csv_header_and_known_rows():
    code, text = run("census", "--p-max", "4", "--q-max", "4", "--s-set", "4")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert tuple(csv.reader(io.StringIO(text)).__next__()) == CSV_HEADER
    by_key = {(r["p"], r["q"], r["r"], r["s"]): r for r in rows}
    for r in ("3", "5"):
        row = by_key["4", "2", r, "4"]
        assert row["verdict"] == "not-hyperbolic"
        assert row["obstruction"] == "adjacent-count"
    assert row["check_components"] == ""


def test_census_sorted():
    text = run("census", "--p-max", "6", "--q-max", "6", "--s-set", "4,-4,5")[1]
    keys = [tuple(int(r[k]) for k in "pqrs") for r in csv.DictReader(io.StringIO(text))]
    assert keys == sorted(keys)
    assert len(keys) == len(set(keys))


def test_census_verify():
    code, text = run("census", "--p-max", "8", "--q-max", "8", "--s-set", "4", "--verify")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    checked = [r for r in rows if r["check_components"]]
    assert checked
    for r in rows:
        p, q, rr = int(r["p"]), int(r["q"]), int(r["r"])
        assert bool(r["check_components"]) == (rr <= p and gcd(p, q) >= 2)
        if r["check_components"]:
            assert r["check_components"] == r["check_linking"] == r["check_split"] == "true"


def test_census_json():
    code, text = run("census", "--p-max", "4", "--q-max", "2", "--format", "json", "--verify")
    assert code == 0
    rows = [json.loads(line) for line in text.splitlines()]
    assert rows[0]["p"] == 2
    assert all("classification" in r for r in rows)


def test_census_rejects_zero_twist(capsys):
    with pytest.raises(SystemExit) as e:
        run("census", "--s-set", "0")
    assert e.value.code == 2


def test_census_rejects_small_bound():
    with pytest.raises(SystemExit) as e:
        run("census", "--p-max", "1")
    assert e.value.code == 2


def test_census_verify_failure_exits_one(monkeypatch):
    import twisted_torus.census as census
    from twisted_torus.census import OracleChecks
    monkeypatch.setattr(census, "oracle_checks", lambda params: OracleChecks(True, False, True))
    code, _ = run("census", "--p-max", "4", "--q-max", "4", "--verify")
    assert code == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twisted_torus", "classify", "8", "2", "3", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "Hyperbolic\n"
