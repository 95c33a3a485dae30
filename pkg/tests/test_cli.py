import json

import pytest
from click.testing import CliRunner

from conftest import network_file

from app.cli import main


def run(*args):
    return CliRunner().invoke(main, [str(a) for a in args])


def run_json(*args):
    result = run(*args)
    assert result.exit_code == 0, result.stderr
    return json.loads(result.stdout)


def test_validate_reports_every_check():
    document = run_json("validate", network_file("y123.net"))
    assert document["valid"] is True
    assert [c["name"] for c in document["checks"]] == [
        "partition",
        "noncrossing",
        "conductances",
        "edges",
        "rotation-system",
        "planarity",
        "outer-face",
        "gluing",
    ]


def test_lambda_of_the_star():
    document = run_json("lambda", network_file("y123.net"))
    assert document["lambda"] == {
        "{1},{2},{3}": "6",
        "{1},{2,3}": "6",
        "{1,2},{3}": "2",
        "{1,2,3}": "6",
        "{1,3},{2}": "3",
    }


def test_response_and_resistance_of_the_star():
    assert run_json("response", network_file("y123.net"))["matrix"] == [
        ["-5/6", "1/3", "1/2"],
        ["1/3", "-4/3", "1"],
        ["1/2", "1", "-3/2"],
    ]
    r = run_json("resistance", network_file("y123.net"))["matrix"]
    assert (r[0][1], r[0][2], r[1][2]) == ("3/2", "4/3", "5/6")
    assert run_json("lstar", network_file("y123.net"))["matrix"][0] == ["-3/2", "1/2", "1"]


def test_plucker_with_isotropy_check():
    document = run_json("plucker", network_file("y123.net"), "--check-isotropy")
    assert document["kappa"] == "zero"
    assert document["coordinates"]["1,2,2~,3~"] == "9"
    assert document["coordinates"]["1,1~,2~,3~"] == "6"


def test_isotropy_and_nonnegativity():
    assert run_json("isotropy", network_file("cactus-6.net")) == {"kappa_vanishes": True, "isotropic": True}
    assert run_json("tnn", network_file("y123.net")) == {"totally_nonnegative": True}


def test_chart_and_extract():
    chart = run_json("chart", network_file("y123.net"), "--from", "response")
    assert chart["chart"] == "not-shorted"
    assert chart["matrix"][0] == ["0", "1", "0", "-1", "0", "1"]
    extracted = run_json("extract", network_file("y123.net"), "--chart", "connected")
    assert extracted["matrix"][1] == ["1/2", "-5/6", "1/3"]


def test_equivalence_of_star_and_triangle():
    document = run_json("equiv", network_file("y123.net"), network_file("delta-1-half-third.net"))
    assert document == {"equivalent": True, "factor": "6"}


def test_ydelta_output_is_a_valid_equivalent_network(tmp_path):
    out = tmp_path / "triangle.net"
    result = run("ydelta", network_file("y123.net"), "--site", "v", "--direction", "ytod", "-o", out)
    assert result.exit_code == 0, result.stderr
    assert run("validate", out).exit_code == 0
    assert run_json("equiv", network_file("y123.net"), out)["equivalent"] is True


def test_double_dual_is_written_and_reread(tmp_path):
    once, twice = tmp_path / "once.net", tmp_path / "twice.net"
    assert run("dual", network_file("cactus-6.net"), "-o", once).exit_code == 0
    assert run("dual", once, "-o", twice).exit_code == 0
    assert run_json("validate", twice)["valid"] is True


def test_medial_and_minimal():
    assert run_json("medial", network_file("cactus-6.net"))["pairs"] == [
        [1, 7], [2, 6], [3, 12], [4, 5], [8, 10], [9, 11]
    ]
    assert run_json("minimal", network_file("cactus-6.net")) == {"minimal": True}


@pytest.mark.parametrize("n,dimension", [(2, 2), (3, 5)])
def test_kernel_dimension(n, dimension):
    assert run_json("kernel-dim", "--n", n) == {"n": n, "dimension": dimension}


def test_compact_output_is_one_line():
    result = run("--compact", "tnn", network_file("y123.net"))
    assert result.stdout == '{"totally_nonnegative":true}\n'


def test_output_is_deterministic():
    first = run("plucker", network_file("cactus-6.net")).stdout
    assert run("plucker", network_file("cactus-6.net")).stdout == first


# -----------------------------
# Exit codes
# -----------------------------

def test_unreadable_file_exits_with_one(tmp_path):
    bad = tmp_path / "bad.net"
    bad.write_text("{not json", encoding="utf-8")
    assert run("lambda", bad).exit_code == 1
    assert run("lambda", tmp_path / "missing.net").exit_code == 1


def test_invalid_network_exits_with_one(tmp_path):
    data = json.loads(network_file("y123.net").read_text(encoding="utf-8"))
    data["edges"][0]["conductance"] = "-1"
    bad = tmp_path / "negative.net"
    bad.write_text(json.dumps(data), encoding="utf-8")
    result = run("validate", bad)
    assert result.exit_code == 1
    assert json.loads(result.stdout)["valid"] is False
    assert run("lambda", bad).exit_code == 1


def test_precondition_violation_exits_with_two():
    result = run("resistance", network_file("disconnected-3.net"))
    assert result.exit_code == 2
    assert "connected" in result.stderr
    assert run("extract", network_file("shorted-12.net")).exit_code == 2


def test_resistance_chart_of_a_shorted_network():
    chart = run_json("chart", network_file("shorted-12.net"), "--from", "resistance")
    assert chart["chart"] == "connected"
    assert chart["matrix"][0] == ["1", "0", "-1", "0", "1", "0"]
    assert run("chart", network_file("shorted-12.net"), "--from", "response").exit_code == 2
