import json
import math

import numpy as np
import pytest
from click.testing import CliRunner

from bellsv.cli import cli

SQ2 = math.sqrt(2)

CHSH_CSV = "1,1\n1,-1\n"
VP_CSV = "\n".join(
    ",".join(str(v) for v in row)
    for row in [
        [1, 1, 1, 1],
        [-1, 1, 1, 1],
        [1, -1, 1, 1],
        [-1, -1, 1, 1],
        [1, 1, -1, 1],
        [-1, 1, -1, 1],
        [1, -1, -1, 1],
        [-1, -1, -1, 1],
    ]
)


@pytest.fixture
def runner():
    return CliRunner()


def invoke_json(runner, args, stdin=None):
    result = runner.invoke(cli, args, input=stdin, catch_exceptions=False)
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["schema_version"] == 1
    return report


class TestBoundCommand:
    def test_chsh_from_stdin(self, runner):
        report = invoke_json(runner, ["bound", "-"], stdin=CHSH_CSV)
        assert report["classical"] == 2.0
        assert report["sv_bound"] == pytest.approx(2.8284271247, abs=1e-9)
        assert report["tight"] is True

    def test_chsh_from_file(self, runner, tmp_path):
        path = tmp_path / "chsh.csv"
        path.write_text(CHSH_CSV)
        report = invoke_json(runner, ["bound", str(path)])
        assert report["classical"] == 2.0


class TestClassicalCommand:
    def test_identity(self, runner):
        report = invoke_json(runner, ["classical", "-"], stdin="1,0\n0,1\n")
        assert report["classical"] == 2.0

    def test_vertesi_pal(self, runner):
        report = invoke_json(runner, ["classical", "-"], stdin=VP_CSV)
        assert report["classical"] == 12.0


class TestTightCommand:
    def test_chsh(self, runner):
        report = invoke_json(runner, ["tight", "-"], stdin=CHSH_CSV)
        assert report["tight"] is True
        assert report["degeneracy_d"] == 2
        assert report["alpha_certificate"]["rank_dprime"] == 2

    def test_infinite_axis_serialized_as_string(self, runner):
        # rank-deficient certificates are reported with "INFINITE" axes; the
        # identity matrix keeps a full-rank Gram solution, so check the
        # serialization hook directly through the witness of a 1x1 matrix
        report = invoke_json(runner, ["tight", "-"], stdin="1,0\n0,1\n")
        assert all(isinstance(a, (int, float)) for a in report["semi_axes"])


class TestDirectionsAndRealize:
    def test_directions_chsh(self, runner):
        report = invoke_json(runner, ["directions", "-"], stdin=CHSH_CSV)
        assert report["dprime"] == 2
        assert report["value"] == pytest.approx(2 * SQ2, abs=1e-9)

    def test_realize_chsh(self, runner):
        report = invoke_json(runner, ["realize", "-"], stdin=CHSH_CSV)
        assert report["bell_value"] == pytest.approx(2 * SQ2, abs=1e-9)
        expected = np.array(report["expected"])
        assert np.abs(expected - np.array([[1, 1], [1, -1]]) / SQ2).max() < 1e-9
        assert len(report["state"]) == 4


class TestSeesawAndWitness:
    def test_seesaw_fixed_dim(self, runner):
        report = invoke_json(
            runner, ["seesaw", "-", "--dim", "1", "--restarts", "16"], stdin=CHSH_CSV
        )
        assert report["value"] == pytest.approx(2.0, abs=1e-9)

    def test_witness_with_observed(self, runner):
        report = invoke_json(
            runner,
            ["witness", "-", "--dmax", "2", "--observed", "2.5", "--restarts", "8"],
            stdin=CHSH_CSV,
        )
        assert report["thresholds"]["1"] == pytest.approx(2.0, abs=1e-6)
        assert report["thresholds"]["2"] == pytest.approx(2 * SQ2, abs=1e-6)
        assert report["min_dimension"] == 2
        assert report["exceeds_modeled_dimensions"] is False


class TestRotateScan:
    def test_csv_output(self, runner):
        result = runner.invoke(
            cli,
            ["rotate-scan", "--samples", "9", "--restarts", "4"],
            catch_exceptions=False,
        )
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines[0] == "phi_rad,classical,quantum,ratio"
        assert len(lines) == 10
        for line in lines[1:]:
            phi, classical, quantum, ratio = map(float, line.split(","))
            assert quantum == pytest.approx(4.0, abs=1e-9)
            assert ratio > 1

    def test_json_output(self, runner):
        report = invoke_json(
            runner,
            ["rotate-scan", "--samples", "5", "--restarts", "4", "--output", "json"],
        )
        assert len(report["samples"]) == 5


class TestErrorHandling:
    def test_validation_error_exit_1(self, runner):
        result = runner.invoke(cli, ["classical", "-"], input="1,2\n3\n")
        assert result.exit_code == 1

    def test_missing_file_exit_1(self, runner):
        result = runner.invoke(cli, ["bound", "/nonexistent/matrix.csv"])
        assert result.exit_code == 1

    def test_no_alpha_exit_3(self, runner):
        # degenerate leading pair with incompatible row norms: diag(1, 1, eps)
        # padded so the Gram system is infeasible
        result = runner.invoke(
            cli, ["tight", "-"], input="1,0,0\n1,0,0\n0,1,0\n0,0,0.5\n"
        )
        assert result.exit_code == 3


class TestDeterminismAndRoundTrip:
    def test_byte_identical_reports(self, runner):
        args = ["bound", "-", "--seed", "42", "--restarts", "8"]
        out1 = runner.invoke(cli, args, input=VP_CSV).output
        out2 = runner.invoke(cli, args, input=VP_CSV).output
        assert out1 == out2

    def test_json_matrix_round_trip(self, runner):
        as_json = json.dumps({"rows": [[1, 1], [1, -1]]})
        r_csv = invoke_json(runner, ["bound", "-"], stdin=CHSH_CSV)
        r_json = invoke_json(runner, ["bound", "-", "--format", "json"], stdin=as_json)
        assert r_csv == r_json
