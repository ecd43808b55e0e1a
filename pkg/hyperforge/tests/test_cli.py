#!/usr/bin/env python3
"""
End-to-end tests of the command line interface
"""

import json

import pytest

from .. import cli
from ..algebra import conventions
from ..common.config import DEFAULT_FIXTURE, FIXTURES_DIR, THREADS_ENV_VAR

R4 = str(DEFAULT_FIXTURE)


def fixture(name: str) -> str:
    return str(FIXTURES_DIR / name)


@pytest.fixture(autouse=True)
def serial(monkeypatch):
    monkeypatch.setenv(THREADS_ENV_VAR, "0")


def run_json(capsys, *argv):
    code = cli.main([*argv, "--json"])
    return code, json.loads(capsys.readouterr().out)


class TestHelp:

    def test_no_arguments(self):
        assert cli.main([]) == 0

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["--version"])
        assert info.value.code == 0
        assert "hyperforge" in capsys.readouterr().out


class TestValidate:

    def test_r4_basis(self):
        assert cli.main(["validate", R4, "-q"]) == 0

    def test_so3(self):
        assert cli.main(["validate", fixture("so3_point.json"), "-q"]) == 0

    def test_broken_jacobi(self, capsys):
        code, document = run_json(capsys, "validate", fixture("broken_jacobi.json"))
        assert code == 1
        assert document["passed"] is False
        assert document["checks"][0]["name"] == "{mu, mu} = 0"
        assert not document["checks"][0]["passed"]

    def test_degenerate_forms(self, capsys):
        code, document = run_json(capsys, "validate", fixture("degenerate_form.json"))
        assert code == 1
        failed = {c["name"] for c in document["checks"] if not c["passed"]}
        assert failed == {"flat nondegenerate", "twisted closed", "twisted nondegenerate"}


class TestClassify:

    def test_hypersymplectic(self, capsys):
        code, document = run_json(capsys, "classify", R4, "--triple", "omega1,omega2,omega3")
        assert code == 0
        report = document["reports"][0]
        assert report["class"] == "Hypersymplectic"
        assert report["epsilon"] == [-1, -1, -1]
        assert document["conventions"]["fingerprint"] == conventions.EXPECTED_FINGERPRINT

    def test_repeated_form(self, capsys):
        code = cli.main(["classify", fixture("positive_product.json"), "--triple", "omega1,omega1,omega2", "--json"])
        captured = capsys.readouterr()
        assert code == 0
        assert json.loads(captured.out)["reports"][0]["class"] == "PositiveProduct"
        assert "repeats a form" in captured.err

    def test_unknown_form(self):
        assert cli.main(["classify", R4, "--triple", "omega1,omega2,omega9", "-q"]) == 2

    def test_wrong_arity(self):
        assert cli.main(["classify", R4, "--triple", "omega1,omega2", "-q"]) == 2

    def test_bad_expression(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({
            "base": {"dim": 2, "vars": ["x", "y"]},
            "rank": 2,
            "anchor": [[1, 0], [0, 1]],
            "forms": {"a": [[0, "x +* y"], ["-x", 0]], "b": [[0, 1], [-1, 0]], "c": [[0, 2], [-2, 0]]},
        }))
        assert cli.main(["classify", str(path), "--triple", "a,b,c"]) == 2
        assert "^" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert cli.main(["validate", str(tmp_path / "absent.json"), "-q"]) == 2


class TestNonIntegrable:
    """Anchor rho(e2) = x d/dx with [e1, e2] = 0 breaks {mu, mu} = 0"""

    @pytest.fixture
    def path(self, tmp_path):
        target = tmp_path / "twisted_anchor.json"
        target.write_text(json.dumps({
            "base": {"dim": 1, "vars": ["x"]},
            "rank": 2,
            "anchor": [["1", "x"]],
            "forms": {"a": [[0, 1], [-1, 0]], "b": [[0, 1], [-1, 0]], "c": [[0, -1], [1, 0]]},
        }))
        return str(target)

    def test_validate_reports_jacobi(self, path, capsys):
        code, document = run_json(capsys, "validate", path)
        assert code == 1
        assert document["checks"][0]["name"] == "{mu, mu} = 0"
        assert document["checks"][0]["passed"] is False

    @pytest.mark.parametrize("argv", [
        ["classify", "--triple", "a,b,c"],
        ["selftest", "--triple", "a,b,c"],
        ["enumerate"],
    ])
    def test_commands_refuse(self, path, argv, capsys):
        assert cli.main([argv[0], path, *argv[1:], "-q"]) == 1
        assert "{mu, mu} = 0" in capsys.readouterr().err


class TestEnumerate:

    def test_golden_counts(self, capsys):
        code, document = run_json(capsys, "enumerate", R4, "-q")
        assert code == 0
        assert len(document["reports"]) == 20
        assert document["summary"]["Hypersymplectic"] == 2
        assert document["summary"]["ParaHypersymplectic"] == 18
        assert document["excluded"] == []
        assert all(c["passed"] for r in document["reports"] for c in r["suite"])

    def test_exclusions(self, capsys):
        code, document = run_json(capsys, "enumerate", fixture("degenerate_form.json"), "-q")
        assert code == 0
        assert [r["triple"] for r in document["reports"]] == [["omega1", "omega2", "omega3"]]
        reasons = {entry["form"]: entry["reason"] for entry in document["excluded"]}
        assert reasons == {"flat": "degenerate (det = 0)", "twisted": "not closed (d omega != 0)"}

    def test_too_few_forms(self):
        assert cli.main(["enumerate", fixture("positive_product.json"), "-q"]) == 2

    def test_output_file(self, tmp_path):
        target = tmp_path / "out" / "so3.json"
        assert cli.main(["validate", fixture("so3_point.json"), "-q", "-o", str(target)]) == 0
        document = json.loads(target.read_text())
        assert document["input"]["file"] == "so3_point.json"
        assert document["passed"] is True

    def test_report_independent_of_threads(self, monkeypatch, capsys):
        outputs = []
        for threads in ("0", "4"):
            monkeypatch.setenv(THREADS_ENV_VAR, threads)
            assert cli.main(["enumerate", R4, "--json", "-q"]) == 0
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]
        assert json.loads(outputs[0])["summary"]["Hypersymplectic"] == 2

    def test_invalid_thread_setting(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV_VAR, "many")
        assert cli.main(["enumerate", R4, "-q"]) == 2


class TestSelftest:

    def test_passes(self):
        assert cli.main(["selftest", R4, "--triple", "omega1,omega2,omega3", "-q"]) == 0

    def test_json_carries_calibration(self, capsys):
        code, document = run_json(capsys, "selftest", R4, "--triple", "omega4,omega5,omega6", "-q")
        assert code == 0
        assert all(probe["passed"] for probe in document["calibration"])

    def test_fingerprint_mismatch(self, monkeypatch):
        monkeypatch.setattr(conventions, "EXPECTED_FINGERPRINT", "0" * 64)
        assert cli.main(["selftest", R4, "--triple", "omega1,omega2,omega3", "-q"]) == 1


class TestSearch:

    def test_finds_positive_product(self, capsys):
        code, document = run_json(capsys, "search", "-q")
        assert code == 0
        assert document["search"]["found"] is True
        assert document["search"]["triple"] == ["omega1", "omega1", "omega2"]
        assert document["reports"][0]["class"] == "PositiveProduct"
