import csv
import io
import json
import sys

import pytest

from filtration.cli import EXIT_IO_ERROR, EXIT_OK, EXIT_VALIDATION_ERROR, main
from filtration.utils.render import CSV_COLUMNS
from filtration.utils.settings import get_settings
from tests.oracle import WORKED

NEGATIVE_J_FLAGS = [
    "--L", "0.1", "--df", "1", "--alpha", "0.5", "--dp", "0.38", "--rho", "100",
    "--u", "0.1", "--mu", "1.81e-5", "--T", "293",
]


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def read_csv(text):
    return list(csv.reader(io.StringIO(text)))


class TestPoint:
    def test_report(self, capsys, worked_flags):
        status, out, _ = run(capsys, "point", *worked_flags)
        assert status == EXIT_OK
        assert "73.8446 %" in out
        assert "26.1554 %" in out
        assert "Dominant mechanism: diffusion" in out

    def test_json(self, capsys, worked_flags):
        status, out, _ = run(capsys, "point", *worked_flags, "--format", "json")
        assert status == EXIT_OK
        record = json.loads(out)
        assert record["P_percent"] == pytest.approx(100 * WORKED["P"], rel=1e-6)
        assert record["E_percent"] + record["P_percent"] == pytest.approx(100.0, abs=1e-8)
        assert record["Pe"] == pytest.approx(WORKED["Pe"], rel=1e-6)
        assert record["Cc"] == pytest.approx(WORKED["Cc"], rel=1e-6)
        assert record["Re"] is None
        assert record["scenario"]["medium"]["solidity_alpha"] == 0.05

    @pytest.mark.parametrize("output", ["json", "csv", "report"])
    def test_output_is_deterministic(self, capsys, worked_flags, output):
        _, first, _ = run(capsys, "point", *worked_flags, "--format", output)
        _, second, _ = run(capsys, "point", *worked_flags, "--format", output)
        assert first == second

    def test_zero_thickness(self, capsys, worked_flags):
        status, out, _ = run(capsys, "point", *worked_flags, "--L", "0", "--format", "json")
        assert status == EXIT_OK
        record = json.loads(out)
        assert record["P_percent"] == 100.0
        assert record["E_percent"] == 0.0

    def test_csv_columns(self, capsys, worked_flags):
        _, out, _ = run(capsys, "point", *worked_flags, "--format", "csv")
        rows = read_csv(out)
        assert rows[0] == CSV_COLUMNS
        assert len(rows) == 2
        assert "\r" not in out

    @pytest.mark.parametrize("flag, value, symbol", [
        ("--alpha", "1.5", "solidity_alpha"),
        ("--alpha", "0", "solidity_alpha"),
        ("--alpha", "1", "solidity_alpha"),
        ("--dp", "0", "diameter_dp"),
        ("--dp", "-0.1", "diameter_dp"),
    ])
    def test_validation_errors(self, capsys, worked_flags, flag, value, symbol):
        status, out, err = run(capsys, "point", *worked_flags, flag, value)
        assert status == EXIT_VALIDATION_ERROR
        assert symbol in err
        assert out == ""

    def test_missing_input_is_named(self, capsys):
        status, _, err = run(capsys, "point", "--L", "1")
        assert status == EXIT_VALIDATION_ERROR
        assert "fiber_diameter_df" in err

    def test_element_geometry_gives_reynolds(self, capsys, worked_flags):
        # 0.1 m square duct: equivalent diameter 0.1 m
        status, out, _ = run(capsys, "point", *worked_flags, "--rho-fluid", "1.2",
                             "--area", "0.01", "--perimeter", "0.4", "--format", "json")
        assert status == EXIT_OK
        record = json.loads(out)
        assert record["scenario"]["medium"]["element_diameter_dF"] == pytest.approx(0.1, rel=1e-12)
        assert record["Re"] == pytest.approx(0.1 * 0.1 * 1.2 / 1.81e-5, rel=1e-12)
        # --rho-fluid overrides only the fluid side of --rho
        assert record["scenario"]["particle"]["density_rho_p"] == 1000.0

    def test_conflicting_element_inputs(self, capsys, worked_flags):
        status, _, err = run(capsys, "point", *worked_flags, "--dF", "0.1", "--area", "0.01", "--perimeter", "0.4")
        assert status == EXIT_VALIDATION_ERROR
        assert "element_diameter_dF" in err

    def test_constant_overrides(self, capsys, worked_flags):
        _, out, _ = run(capsys, "point", *worked_flags, "--cd", "0.88", "--format", "json")
        assert json.loads(out)["Stk"] == pytest.approx(2 * WORKED["Stk"], rel=1e-9)

    def test_negative_j_warning_is_verbatim(self, capsys):
        _, out, _ = run(capsys, "point", *NEGATIVE_J_FLAGS, "--format", "json")
        warnings = json.loads(out)["warnings"]
        assert len(warnings) == 1

        _, report, _ = run(capsys, "point", *NEGATIVE_J_FLAGS)
        assert warnings[0] in report

        _, table, _ = run(capsys, "point", *NEGATIVE_J_FLAGS, "--format", "csv")
        rows = read_csv(table)
        assert rows[1][CSV_COLUMNS.index("warnings")] == warnings[0]

    def test_negative_mechanism_sum_is_reported(self, capsys):
        status, out, _ = run(capsys, "point", "--L", "1", "--df", "10", "--alpha", "0.5", "--dp", "3.9",
                             "--rho-particle", "3000", "--rho-fluid", "1.2", "--u", "5", "--mu", "1.81e-5",
                             "--T", "293", "--format", "json")
        assert status == EXIT_OK
        record = json.loads(out)
        assert record["P_percent"] == sys.float_info.max
        assert record["E_percent"] == -sys.float_info.max
        assert record["sum_n"] < 0
        assert len(record["warnings"]) == 3


class TestConfigFile:
    def write(self, tmp_path, payload):
        path = tmp_path / "scenario.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    def worked_config(self):
        return {
            "thickness_L": 1, "fiber_diameter_df": 2, "solidity_alpha": 0.05,
            "viscosity_mu": 1.81e-5, "temperature_T": 293, "velocity_u": 0.1,
            "fluid_density_rho_f": 1000, "diameter_dp": 0.1, "density_rho_p": 1000,
        }

    def test_config_alone(self, capsys, tmp_path):
        path = self.write(tmp_path, self.worked_config())
        status, out, _ = run(capsys, "point", "--config", path, "--format", "json")
        assert status == EXIT_OK
        assert json.loads(out)["P_percent"] == pytest.approx(100 * WORKED["P"], rel=1e-6)

    def test_flags_override_config(self, capsys, tmp_path):
        path = self.write(tmp_path, self.worked_config())
        _, out, _ = run(capsys, "point", "--config", path, "--L", "2", "--format", "json")
        assert json.loads(out)["P_percent"] == pytest.approx(100 * WORKED["P_2L"], rel=1e-6)

    def test_config_sweep_and_constants(self, capsys, tmp_path):
        payload = self.worked_config()
        payload["constants"] = {"boltzmann_k": 1.3708e-23}
        payload["sweep"] = {"parameter": "L", "start": 1, "stop": 2, "points": 2}
        path = self.write(tmp_path, payload)
        status, out, _ = run(capsys, "sweep", "--config", path, "--points", "3", "--format", "csv")
        assert status == EXIT_OK
        assert len(read_csv(out)) == 4

    def test_unknown_field(self, capsys, tmp_path):
        payload = self.worked_config()
        payload["thickness"] = 1
        status, _, err = run(capsys, "point", "--config", self.write(tmp_path, payload))
        assert status == EXIT_VALIDATION_ERROR
        assert "thickness" in err

    def test_missing_file(self, capsys, tmp_path):
        status, _, err = run(capsys, "point", "--config", str(tmp_path / "absent.json"))
        assert status == EXIT_IO_ERROR
        assert "absent.json" in err

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        status, _, _ = run(capsys, "point", "--config", str(path))
        assert status == EXIT_IO_ERROR


class TestSweep:
    def test_thickness_sweep_squares_penetration(self, capsys, worked_flags):
        status, out, _ = run(capsys, "sweep", *worked_flags, "--param", "L", "--start", "1", "--stop", "2",
                             "--points", "2", "--format", "csv")
        assert status == EXIT_OK
        rows = read_csv(out)
        assert rows[0] == CSV_COLUMNS
        p_column = CSV_COLUMNS.index("P_percent")
        first, second = (float(row[p_column]) for row in rows[1:])
        assert first == pytest.approx(26.15, abs=5e-3)
        assert second == pytest.approx(6.84, abs=5e-3)
        assert second / 100 == pytest.approx((first / 100) ** 2, rel=1e-6)

    def test_endpoints_are_exact(self, capsys, worked_flags):
        _, out, _ = run(capsys, "sweep", *worked_flags, "--param", "dp", "--start", "0.05", "--stop", "0.3",
                        "--points", "2", "--format", "csv")
        rows = read_csv(out)
        assert [row[0] for row in rows[1:]] == ["0.05", "0.3"]

    def test_row_count(self, capsys, worked_flags):
        _, out, _ = run(capsys, "sweep", *worked_flags, "--param", "dp", "--start", "0.01", "--stop", "10",
                        "--points", "50", "--log", "--format", "csv")
        assert out.count("\n") == 51
        assert len(out.splitlines()) == 51

    def test_sweep_without_particle_diameter(self, capsys, worked_flags):
        at = worked_flags.index("--dp")
        flags = worked_flags[:at] + worked_flags[at + 2:]
        status, out, _ = run(capsys, "sweep", *flags, "--param", "dp", "--start", "0.1", "--stop", "1",
                             "--points", "5", "--format", "json")
        assert status == EXIT_OK
        assert json.loads(out)[0]["parameter_value"] == 0.1

    def test_report_table(self, capsys, worked_flags):
        status, out, _ = run(capsys, "sweep", *worked_flags, "--param", "u", "--start", "0.05", "--stop", "0.5",
                             "--points", "4")
        assert status == EXIT_OK
        assert len(out.splitlines()) == 5

    def test_failing_grid_point_reports_index(self, capsys, worked_flags):
        status, _, err = run(capsys, "sweep", *worked_flags, "--param", "alpha", "--start", "0.5", "--stop", "1.5",
                             "--points", "3")
        assert status == EXIT_VALIDATION_ERROR
        assert "grid point 1" in err

    def test_missing_sweep_spec(self, capsys, worked_flags):
        status, _, err = run(capsys, "sweep", *worked_flags)
        assert status == EXIT_VALIDATION_ERROR
        assert "sweep" in err

    def test_bad_points(self, capsys, worked_flags):
        status, _, err = run(capsys, "sweep", *worked_flags, "--param", "L", "--start", "1", "--stop", "2",
                             "--points", "1")
        assert status == EXIT_VALIDATION_ERROR
        assert "points" in err


class TestMpps:
    def test_json(self, capsys, worked_flags):
        status, out, _ = run(capsys, "mpps", *worked_flags, "--dp-lo", "0.01", "--dp-hi", "10", "--format", "json")
        assert status == EXIT_OK
        report = json.loads(out)
        assert report["dp_star"] == pytest.approx(WORKED["mpps_dp"], abs=1e-4 + 1e-5)
        assert report["bracket_lo"] <= report["dp_star"] <= report["bracket_hi"]
        assert report["boundary"] is None

    def test_refinement_is_stable(self, capsys, worked_flags):
        _, coarse, _ = run(capsys, "mpps", *worked_flags, "--tol", "1e-4", "--format", "json")
        _, fine, _ = run(capsys, "mpps", *worked_flags, "--tol", "1e-5", "--format", "json")
        assert json.loads(fine)["dp_star"] == pytest.approx(json.loads(coarse)["dp_star"], abs=1e-4)

    def test_report_and_csv(self, capsys, worked_flags):
        _, report, _ = run(capsys, "mpps", *worked_flags)
        assert "Most penetrating particle size" in report
        _, table, _ = run(capsys, "mpps", *worked_flags, "--format", "csv")
        rows = read_csv(table)
        assert rows[0] == ["dp_star", "p_max_percent", "bracket_lo", "bracket_hi", "boundary"]
        assert rows[1][4] == ""

    def test_deterministic(self, capsys, worked_flags):
        _, first, _ = run(capsys, "mpps", *worked_flags, "--format", "json")
        _, second, _ = run(capsys, "mpps", *worked_flags, "--format", "json")
        assert first == second

    @pytest.mark.parametrize("lo, hi", [("1", "0.5"), ("1", "1"), ("0", "1")])
    def test_degenerate_bracket(self, capsys, worked_flags, lo, hi):
        status, _, err = run(capsys, "mpps", *worked_flags, "--dp-lo", lo, "--dp-hi", hi)
        assert status == EXIT_VALIDATION_ERROR
        assert "dp_lo" in err


def test_unknown_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["plot"])
    assert info.value.code == 2


def test_invalid_log_level_is_a_validation_error(capsys, monkeypatch, worked_flags):
    monkeypatch.setenv("FILTRATION_LOG_LEVEL", "VERBOSE")
    get_settings.cache_clear()
    try:
        status, out, err = run(capsys, "point", *worked_flags)
    finally:
        get_settings.cache_clear()
    assert status == EXIT_VALIDATION_ERROR
    assert "log_level" in err
    assert out == ""
