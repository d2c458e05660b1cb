import io
import json
import subprocess
import sys

import pytest

from anticomm.cli import run


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def test_count_four_two():
    code, text = call("count", "--n", "4", "--k", "2")
    rep = json.loads(text)
    assert code == 0
    assert rep["schema"] == 1
    assert rep["results"]["count"] == "5" == rep["results"]["closed_form"]
    assert all(c["equal"] for c in rep["oracle_comparisons"])


def test_dual_degree_four_two():
    code, text = call("dual-degree", "--n", "4", "--a", "2")
    res = json.loads(text)["results"]
    assert code == 0
    assert res["kleiman"] == res["bracket"] == res["closed_form"] == res["cubic_formula"] == "24"


def test_bgg():
    code, text = call("bgg", "--n", "5")
    assert code == 0 and json.loads(text)["results"]["normalization"] == "1"


@pytest.mark.parametrize("argv", [("count", "--n", "4", "--k", "3"), ("dual-degree", "--n", "4", "--a", "1", "--b", "2")])
def test_invalid_parameters_exit_two(argv):
    code, text = call(*argv)
    assert code == 2
    assert "error" in json.loads(text)["results"]


def test_unknown_flag():
    with pytest.raises(SystemExit) as info:
        call("count", "--n", "4", "--k", "2", "--bogus")
    assert info.value.code == 2


def test_enumerate_matches_formula():
    code, text = call("--no-timings", "enumerate", "--n", "4", "--k", "2", "--zero-trace")
    rep = json.loads(text)
    assert code == 0
    assert rep["results"]["count"] == "5"
    assert rep["oracle_comparisons"][0]["equal"]


def test_enumerate_zero_trace_off_has_no_comparison():
    code, text = call("enumerate", "--n", "4", "--k", "2")
    assert code == 0
    assert json.loads(text)["oracle_comparisons"] == []


def test_pentahedral():
    code, text = call("pentahedral", "--seed", "1")
    rep = json.loads(text)
    assert code == 0
    assert rep["results"]["passed"] and rep["seeds"] == [1]


def test_crosscheck_quick():
    code, text = call("crosscheck", "--quick")
    rep = json.loads(text)
    assert code == 0
    assert rep["oracle_comparisons"] and all(c["equal"] for c in rep["oracle_comparisons"])


def test_deterministic_without_timings():
    argv = ("--no-timings", "enumerate", "--n", "5", "--k", "3", "--zero-trace", "--seed", "3")
    assert call(*argv) == call(*argv)


def test_algebra_round_trip(tmp_path):
    path = tmp_path / "a.json"
    code, text = call("algebra", "gen", "--n", "5", "--k", "3", "--seed", "4", "--zero-trace", "--out", str(path))
    assert code == 0
    made = json.loads(text)["results"]["algebra"]
    code, text = call("algebra", "show", str(path))
    shown = json.loads(text)["results"]
    assert code == 0
    assert shown["algebra"] == made and shown["zero_trace"]


def test_missing_file_exit_two(tmp_path):
    code, _ = call("algebra", "show", str(tmp_path / "nope.json"))
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "anticomm", "--no-timings", "count", "--n", "5", "--k", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["count"] == "11"
