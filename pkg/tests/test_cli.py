import json

import jsonschema
import pytest

import jetforge
from jetforge.cli import run_command

LEWY_PDO = """\
dim 3 order 1
d[1,0,0] + i*d[0,1,0] + (-2*i*x1 + 2*x2)*d[0,0,1]
"""


@pytest.fixture(scope="module")
def schema():
    return json.loads(jetforge.schema_path().read_text())


@pytest.fixture()
def lewy_file(tmp_path):
    path = tmp_path / "lewy.pdo"
    path.write_text(LEWY_PDO)
    return str(path)


def run_json(capsys, argv):
    code = run_command(["--output", "json", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_symbol_report(capsys, schema, lewy_file):
    code, report = run_json(capsys, ["symbol", "--op", lewy_file])
    assert code == 0
    jsonschema.validate(report, schema)
    assert report["dim"] == 3 and report["order"] == 1
    assert report["total"] == report["principal"]


def test_prolong_report(capsys, schema):
    code, report = run_json(
        capsys, ["prolong", "--op", "x1^2*d[1]", "--level", "2"]
    )
    assert code == 0
    jsonschema.validate(report, schema)
    betas = [tuple(c["beta"]) for c in report["components"]]
    assert betas == [(0,), (1,), (2,)]
    assert report["components"][2]["symbol"] == "2*d[1] + 4*x1*d[2] + x1^2*d[3]"


def test_vanish_single_point(capsys, schema):
    code, report = run_json(
        capsys, ["vanish", "--op", "x1^2*d[1]", "--point", "0"]
    )
    assert code == 0
    jsonschema.validate(report, schema)
    assert report["order"] == {"exactly": 1}


def test_vanish_grid(capsys, schema):
    code, report = run_json(
        capsys,
        [
            "vanish", "--op", "x1^2*d[1]",
            "--point", "-1", "--point", "0", "--point", "1",
        ],
    )
    assert code == 0
    jsonschema.validate(report, schema)
    orders = [r["order"] for r in report["reports"]]
    assert orders == ["not_vanishing", {"exactly": 1}, "not_vanishing"]


def test_rank_report(capsys, schema, lewy_file):
    code, report = run_json(
        capsys, ["rank", "--op", lewy_file, "--point", "0,0,0", "--level", "1"]
    )
    assert code == 0
    jsonschema.validate(report, schema)
    assert report["rank"] == 4 and report["full"] is True


def test_solve_success(capsys, schema, lewy_file):
    code, report = run_json(
        capsys,
        [
            "solve", "--op", lewy_file,
            "--point", "0,0,0", "--order", "2", "--rhs", "x1",
        ],
    )
    assert code == 0
    jsonschema.validate(report, schema)
    assert report["status"] == "solved"
    assert report["post_check"] == "exact"
    assert report["polynomial"]
    assert report["pivots"]


def test_solve_unsolvable_exit_one(capsys, schema):
    code, report = run_json(
        capsys,
        ["solve", "--op", "x1*d[1]", "--point", "0", "--order", "0", "--rhs", "1"],
    )
    assert code == 1
    jsonschema.validate(report, schema)
    assert report["status"] == "unsolvable"


def test_solve_multi(capsys, schema, tmp_path):
    points = tmp_path / "points.txt"
    points.write_text("0\n1\n")
    code, report = run_json(
        capsys,
        [
            "solve-multi", "--op", "d[1]",
            "--points-file", str(points), "--order", "0", "--rhs", "1",
        ],
    )
    assert code == 0
    jsonschema.validate(report, schema)
    assert report["status"] == "solved"
    assert report["post_check"] == "exact"


def test_pcp_witness(capsys, schema, lewy_file):
    code, report = run_json(
        capsys, ["pcp", "--op", lewy_file, "--point", "0,0,0", "--rhs", "1"]
    )
    assert code == 0
    jsonschema.validate(report, schema)
    assert report["status"] == "witness"
    hits = [
        e for e in report["jet"]["entries"] if e["re"] != "0" or e["im"] != "0"
    ]
    assert hits == [{"alpha": [1, 0, 0], "re": "1", "im": "0"}]


def test_pcp_no_witness_exit_one(capsys, schema):
    code, report = run_json(
        capsys, ["pcp", "--op", "y[1]^2", "--point", "0", "--rhs", "-1"]
    )
    assert code == 1
    jsonschema.validate(report, schema)
    assert report["status"] == "no_witness"
    assert "0 real root" in report["note"]


def test_check_quick(capsys, schema):
    code, report = run_json(capsys, ["check", "--seed", "1", "--quick"])
    assert code == 0
    jsonschema.validate(report, schema)
    assert report["all_passed"] is True
    assert len(report["suites"]) == 9


def test_parse_error_exit_two(capsys):
    code = run_command(["vanish", "--op", "d[1", "--point", "0"])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_usage_error_exit_two(capsys):
    assert run_command(["vanish"]) == 2
    assert run_command(["no-such-command"]) == 2


def test_prolong_cap_enforced(capsys, monkeypatch):
    monkeypatch.setenv("JETFORGE_MAX_PROLONG", "3")
    code = run_command(["prolong", "--op", "d[1]", "--level", "4"])
    assert code == 2
    assert "JETFORGE_MAX_PROLONG" in capsys.readouterr().err
    monkeypatch.setenv("JETFORGE_MAX_PROLONG", "5")
    assert run_command(["prolong", "--op", "d[1]", "--level", "4"]) == 0
    capsys.readouterr()


def test_default_cap_is_eight(capsys, monkeypatch):
    monkeypatch.delenv("JETFORGE_MAX_PROLONG", raising=False)
    assert run_command(["prolong", "--op", "d[1]", "--level", "9"]) == 2
    capsys.readouterr()


def test_text_output_default(capsys):
    code = run_command(["vanish", "--op", "x1^2*d[1]", "--point", "0"])
    assert code == 0
    out = capsys.readouterr().out
    assert "vanishes to order exactly 1" in out


def test_solve_text_output(capsys):
    code = run_command(
        ["solve", "--op", "d[1]", "--point", "0", "--order", "0", "--rhs", "1"]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "solution: x1" in out
    assert "post-check: exact" in out
