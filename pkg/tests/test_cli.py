import json

import pytest

from zeta_relations.commands import BasisCommand, CheckCommand, EXIT_OK, EXIT_USAGE
from zeta_relations.main import main
from zeta_relations.models import RunConfig, SequenceSpec
from zeta_relations.tools import ReportGenerator
from zeta_relations.utils import Config


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestBasisCommand:
    def test_text(self, capsys):
        code, out = run_cli(capsys, "basis", "-m", "1")
        assert code == EXIT_OK
        assert "−2Φ₂ + Φ₂* + Ψ₂* = 0" in out
        assert out.startswith("V_1: dim 1")

    def test_zeta_style(self, capsys):
        code, out = run_cli(capsys, "basis", "-m", "1", "--style", "zeta-fibonacci")
        assert code == EXIT_OK
        assert "−2ζ_F(2) + ζ_F*(2) + 5ζ_L*(2) = 0" in out

    def test_json(self, capsys):
        code, out = run_cli(capsys, "basis", "-m", "4", "--format", "json")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["dim"] == 4
        assert doc["zero_pattern_ok"] is True
        assert all(len(v) == 16 for v in doc["vectors"])

    def test_deterministic(self, capsys):
        _, first = run_cli(capsys, "basis", "-m", "3", "--format", "json")
        _, second = run_cli(capsys, "basis", "-m", "3", "--format", "json")
        assert first == second

    def test_latex(self, capsys):
        code, out = run_cli(capsys, "basis", "-m", "1", "--format", "latex")
        assert code == EXIT_OK
        assert "\\begin{align*}" in out
        assert "\\Phi^{*}_{2}" in out

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "reports" / "basis.json"
        code, out = run_cli(capsys, "basis", "-m", "2", "--format", "json", "--out", str(target))
        assert code == EXIT_OK
        assert out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["m"] == 2

    def test_bad_m(self, capsys):
        code, _ = run_cli(capsys, "basis", "-m", "0")
        assert code == EXIT_USAGE

    def test_unknown_format(self):
        with pytest.raises(SystemExit) as exc:
            main(["basis", "--format", "yaml"])
        assert exc.value.code == 2


class TestOtherCommands:
    def test_matrix_dump(self, capsys):
        code, out = run_cli(capsys, "matrix", "dump", "-m", "2", "--scalar", "--format", "json")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["cols"] == 8
        assert doc["scalar"]["row_labels"][-1] == "X^4*k^4"

    def test_matrix_text(self, capsys):
        code, out = run_cli(capsys, "matrix", "dump", "-m", "2")
        assert code == EXIT_OK
        assert out.startswith("relation matrix m=2 (5x8)")

    def test_series_c(self, capsys):
        code, out = run_cli(capsys, "series", "--family", "c", "--max-j", "2", "--format", "json")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["coefficients"]["1"] == ["1/15", "-1/15", "1/15"]

    def test_series_text(self, capsys):
        code, out = run_cli(capsys, "series", "--family", "a", "--max-j", "2")
        assert code == EXIT_OK
        assert out.splitlines() == ["a_0 = 1/3", "a_1 = 1/15", "a_2 = 2/189"]

    def test_series_needs_depth(self, capsys):
        code, _ = run_cli(capsys, "series", "--family", "d", "--max-j", "0")
        assert code == EXIT_USAGE

    def test_aux(self, capsys):
        code, out = run_cli(capsys, "aux", "--max-j", "3", "--format", "json")
        doc = json.loads(out)
        assert code == EXIT_OK
        assert doc["xi_kernel"]["1"] == ["-7", "8", "1", "0"]
        assert doc["lambda_minus"]["1"] == ["1"]
        assert all(doc["closed_forms"].values())

    def test_verify(self, capsys):
        code, out = run_cli(capsys, "verify", "-m", "2")
        assert code == EXIT_OK
        assert "all relations pass" in out

    def test_check_fib8(self, capsys):
        code, out = run_cli(capsys, "check", "fib8", "--precision", "50", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)["passed"] is True

    def test_check_lemma54(self, capsys):
        code, out = run_cli(capsys, "check", "lemma54", "--points", "3", "--precision", "40")
        assert code == EXIT_OK
        assert out.rstrip().endswith("passed")

    def test_undefined_sequence(self, capsys):
        code, _ = run_cli(capsys, "verify", "-m", "1", "--sequence", "nosuch")
        assert code == EXIT_USAGE


class TestCommandObjects:
    def test_basis_response(self):
        result = BasisCommand(RunConfig(command="basis", m=2)).run()
        assert result["success"]
        assert result["document"]["dim"] == 2
        assert result["context"]["dual_path_checked"] is True

    def test_check_without_name(self):
        result = CheckCommand(RunConfig(command="check")).run()
        assert not result["success"]
        assert result["exit_code"] == EXIT_USAGE


class TestSupport:
    def test_sequence_spec_strips(self):
        assert SequenceSpec(selector=" pell ").selector == "pell"
        with pytest.raises(ValueError):
            SequenceSpec(selector="   ")

    def test_render_missing_template(self):
        with pytest.raises(ValueError):
            ReportGenerator().render("nosuch", {}, "text")

    def test_config_from_environment(self, monkeypatch):
        monkeypatch.setenv("RZR_GUARD_DIGITS", "15")
        monkeypatch.setenv("RZR_PROGRESS", "true")
        config = Config()
        assert config.guard_digits == 15
        assert config.progress
        assert config.validate()

    def test_invalid_config(self, monkeypatch):
        monkeypatch.setenv("RZR_POLE_THRESHOLD", "nope")
        assert not Config().validate()
