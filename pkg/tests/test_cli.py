"""
Tests for the bms3 command line: verbs, output forms and exit codes.
"""

import io
import json
from unittest.mock import patch

import pytest
import structlog
from pydantic import ValidationError

from src.algebra.superalgebra import CentralConvention, Sector
from src.cli.commands import Command, render_report, run
from src.main import main
from src.schemas.reports import Counterexample, ProbeReport
from src.services.sweeps import sweep_super_jacobi


def invoke(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.strip()


class TestValueVerbs:
    """bracket, act, psi and sigma print values."""

    def test_bracket(self, capsys):
        code, out = invoke(capsys, "bracket", "L[2]", "L[-2]", "--sector", "R")
        assert code == 0
        assert out == "-4*L[0] + 1/2*C1"

    def test_bracket_printed_convention(self, capsys):
        _, out = invoke(
            capsys, "bracket", "G[1/2]", "G[-1/2]", "--convention", "printed"
        )
        assert out == "2*W[0] + 1/24*C2"

    def test_bracket_consistent_convention_has_no_centre_at_half(self, capsys):
        _, out = invoke(capsys, "bracket", "G[1/2]", "G[-1/2]")
        assert out == "2*W[0]"

    def test_act(self, capsys):
        code, out = invoke(
            capsys,
            "act", "G[0]", "even: 0 ; odd: 1",
            "--sector", "R", "--lambda", "1", "--alpha", "1", "--h", "0",
        )
        assert code == 0
        assert out == "even: u ; odd: 0"

    def test_act_json(self, capsys):
        _, out = invoke(
            capsys, "act", "W[1]", "1", "--lambda", "2", "--alpha", "1", "--h", "t", "--json"
        )
        assert json.loads(out) == {"result": "even: 2*u - 2 ; odd: 0"}

    def test_psi(self, capsys):
        _, out = invoke(
            capsys,
            "psi", "even: 0 ; odd: 1",
            "--lambda", "4", "--sqrt-lambda", "2", "--alpha", "1", "--h", "t",
        )
        assert out == "even: 0 ; odd: sqrt2"

    def test_psi_inverse(self, capsys):
        _, out = invoke(
            capsys,
            "psi", "even: 0 ; odd: sqrt2", "--inverse",
            "--lambda", "4", "--sqrt-lambda", "2", "--alpha", "1", "--h", "t",
        )
        assert out == "even: 0 ; odd: 1"

    def test_sigma(self, capsys):
        _, out = invoke(capsys, "sigma", "L[0]")
        assert out == "1/2*L[0] - 1/16*C1"


class TestReportVerbs:
    """verify, probe, extract and faults print reports."""

    def test_verify_jacobi_passes(self, capsys):
        code, out = invoke(capsys, "verify", "jacobi", "--sector", "R", "--bound", "1")
        assert code == 0
        assert out.startswith("super_jacobi: PASSED (checked 1331)")

    def test_verify_jacobi_printed_fails(self, capsys):
        code, out = invoke(
            capsys, "verify", "jacobi", "--bound", "1", "--convention", "printed", "--json"
        )
        assert code == 1
        report = json.loads(out)
        assert report["passed"] is False
        assert set(report["counterexample"]["inputs"]) == {"x", "y", "z"}
        assert report["version"] == "1"

    def test_verify_transport(self, capsys):
        code, out = invoke(
            capsys, "verify", "transport", "--h", "t^2", "--alpha", "1", "--bound", "2", "--json"
        )
        assert code == 0
        assert json.loads(out)["checked"] == 5

    def test_extract(self, capsys):
        code, out = invoke(
            capsys, "extract", "--lambda", "2", "--alpha", "1", "--h", "t", "--json"
        )
        assert code == 0
        assert json.loads(out)["data"] == {"lambda": "2", "alpha": "1", "h": "t"}

    def test_quotient_target(self, capsys):
        code, out = invoke(
            capsys,
            "probe", "quotient",
            "--lambda", "1", "--alpha", "0", "--h", "2",
            "--i", "0", "--bound", "2", "--s-deg", "4", "--json",
        )
        assert code == 0
        assert json.loads(out)["data"]["closure_dimensions"] == {"1": 5, "s": 5}

    def test_filtration_target(self, capsys):
        code, out = invoke(
            capsys,
            "probe", "filtration",
            "--lambda", "3", "--alpha", "0", "--h", "t + 1",
            "--k", "2", "--bound", "1", "--max-e1", "2", "--max-e2", "1",
        )
        assert code == 0
        assert out.splitlines()[0].startswith("filtration: PASSED")

    def test_faults_list(self, capsys):
        code, out = invoke(capsys, "faults", "--list")
        assert code == 0
        assert len(out.splitlines()) == 12
        assert out.splitlines()[0].startswith("l-even-drift\t")

    def test_single_fault(self, capsys):
        code, out = invoke(capsys, "faults", "--fault", "gg-centerless", "--json")
        assert code == 0
        assert json.loads(out)["name"] == "fault:gg-centerless"


class TestRejectedInput:
    """Usage and input errors exit 2."""

    def test_parse_error(self, capsys):
        code, out = invoke(capsys, "bracket", "L[1", "L[2]", "--json")
        assert code == 2
        payload = json.loads(out)
        assert payload["error"] == "INPUT_001"
        assert payload["details"]["position"] == 3

    def test_missing_sqrt_lambda(self, capsys):
        code, out = invoke(
            capsys, "act", "G[1/2]", "1", "--sector", "NS", "--lambda", "2", "--json"
        )
        assert code == 2
        assert json.loads(out)["error"] == "MOD_001"

    @pytest.mark.parametrize(
        "argv",
        [
            ("psi", "even: 0 ; odd: 1", "--lambda", "4", "--alpha", "1", "--h", "t"),
            ("verify", "psi", "--lambda", "4", "--alpha", "1", "--h", "t", "--bound", "1"),
        ],
    )
    def test_psi_without_sqrt_lambda(self, capsys, argv):
        code, out = invoke(capsys, *argv, "--json")
        assert code == 2
        assert json.loads(out)["error"] == "MOD_001"

    def test_unknown_fault(self, capsys):
        code, out = invoke(capsys, "faults", "--fault", "no-such-fault")
        assert code == 2
        assert out.startswith("error:")

    def test_unknown_target(self, capsys):
        assert main(["verify", "nothing"]) == 2

    def test_invalid_window(self):
        cmd = Command(verb="probe", target="freeness", options={"max_e1": -1, "json": True})
        code, out = run(cmd)
        assert code == 2
        assert json.loads(out)["error"] == "USAGE"

    def test_command_target_validation(self):
        with pytest.raises(ValidationError):
            Command(verb="verify", target="nothing")


class TestRenderReport:
    """Text summary of a report."""

    def test_failed_report(self):
        report = ProbeReport(
            name="g0_square",
            passed=False,
            checked=3,
            counterexample=Counterexample(inputs={"v": "even: u ; odd: 0"}, lhs="0", rhs="u"),
            data={"i": 1},
        )
        assert render_report(report).splitlines() == [
            "g0_square: FAILED (checked 3)",
            "  inputs: v=even: u ; odd: 0",
            "  lhs: 0",
            "  rhs: u",
            "  i: 1",
        ]


class TestLoggingStream:
    """Logs follow the current sys.stderr after main() has configured structlog."""

    def test_logs_after_capture_ends(self, capsys):
        invoke(capsys, "sigma", "L[1]")
        replacement = io.StringIO()
        with patch("sys.stderr", replacement):
            structlog.get_logger("tests").warning("stream_swapped", step=2)
        assert "stream_swapped" in replacement.getvalue()

    def test_closed_stream_is_not_reused(self, capsys):
        """main() configured while stderr pointed at a stream that is closed afterwards."""
        stale = io.StringIO()
        with patch("sys.stderr", stale):
            invoke(capsys, "sigma", "L[1]")
        stale.close()
        report = sweep_super_jacobi(Sector.RAMOND, 1, CentralConvention.PRINTED)
        assert not report.passed
