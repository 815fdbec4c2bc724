import csv
import io
import json

import pytest

from hostark.cli import main
from hostark.model import ModelParams
from hostark.reference import TableId, load_reference
from hostark.spectra import nr_spin_level


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestVerify:
    def test_gev_gate_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--table", "gev",
                               "--tolerance", "1e-6")
        assert code == 0
        assert "pass 4 / fail 0" in out
        assert "verification passed" in out

    def test_gate_failure_sets_exit_one(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--table", "gev",
                               "--tolerance", "1e-12")
        assert code == 1
        assert "verification FAILED" in out

    def test_table1_never_gates(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--table", "table1")
        assert code == 0
        assert "Unreconciled" in out

    def test_all_report_includes_breakdown(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        bd = payload["pseudospin_breakdown"]
        assert 1.5 < bd["eps_discriminant_flip"] < 2.5
        assert bd["reference_breakdown_window"] == [1.81, 1.90]
        assert payload["field_free_closed_form"]["depressed_cubic_root"] == \
            pytest.approx(1.4516059, abs=1e-6)


class TestSpectrum:
    def test_pseudospin_column_matches_reference(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--symmetry", "pseudospin", "--M", "1.5",
            "--omega0", "0.4166667", "--C", "-10.3", "--eps", "0",
            "--n-max", "10", "--format", "csv",
        )
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 11
        ref = {c.row: c.value for c in load_reference(TableId.TABLE2).cells
               if c.col == "Cps=-10.3;eps=0.0"}
        for row in rows:
            expect = ref[int(row["n"])]
            assert float(row["E"]) == pytest.approx(expect, abs=5e-3)
            assert row["status"] == "Bound"
            assert row["kappa"] == "1"
            assert row["discriminant_flag"] == "CardanoComplexRegime"

    def test_unbound_cells_have_empty_energy(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--symmetry", "pseudospin", "--M", "1.5",
            "--omega0-inv", "2.4", "--C", "-10.3", "--eps", "2.0",
            "--n-max", "2",
        )
        assert code == 0
        rows = parse_csv(out)
        assert all(r["status"] == "NoPhysicalRoot" and r["E"] == "" for r in rows)

    def test_json_mirrors_csv_fields(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--symmetry", "spin", "--M", "1.0",
            "--omega0", "1.0", "--eps", "0", "--n-max", "1",
            "--format", "json",
        )
        assert code == 0
        rows = json.loads(out)["rows"]
        assert rows[0]["E"] == pytest.approx(1.4516059, abs=1e-6)
        assert set(rows[0]) == {
            "symmetry", "n", "kappa", "M", "omega0", "q", "eps", "C", "E",
            "residual", "status", "root_alt1", "root_alt2", "discriminant_flag",
        }

    def test_omega0_inv_is_exact(self, capsys):
        _, out_inv, _ = run_cli(capsys, "spectrum", "--symmetry", "spin",
                                "--M", "1.5", "--omega0-inv", "2.4",
                                "--eps", "0", "--n-max", "0")
        _, out_direct, _ = run_cli(capsys, "spectrum", "--symmetry", "spin",
                                   "--M", "1.5", "--omega0", repr(1 / 2.4),
                                   "--eps", "0", "--n-max", "0")
        assert out_inv == out_direct


class TestPotential:
    def test_minimum_matches_shift(self, capsys):
        code, out, _ = run_cli(
            capsys, "potential", "--M", "1.5", "--omega0", "0.4166667",
            "--eps", "2", "--r-max", "15", "--samples", "600",
        )
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 600
        vmin = min(float(r["V"]) for r in rows)
        assert vmin == pytest.approx(-7.68, abs=1e-3)

    def test_byte_identical_reruns(self, capsys):
        argv = ("potential", "--M", "1.0", "--omega0", "1.0", "--eps", "0.5")
        _, first, _ = run_cli(capsys, *argv)
        _, second, _ = run_cli(capsys, *argv)
        assert first == second


class TestFigure2:
    def test_matches_nr_ladder(self, capsys):
        code, out, _ = run_cli(
            capsys, "figure2", "--M", "1.5", "--omega0-inv", "2.4",
            "--eps", "0,0.5,1.0,2.0", "--n-max", "10",
        )
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 44
        for row in rows:
            p = ModelParams(M=1.5, omega0=1 / 2.4, eps=float(row["eps"]))
            assert float(row["E"]) == nr_spin_level(p, int(row["n"]))


class TestWavefunction:
    def test_spin_upper_csv(self, capsys):
        code, out, _ = run_cli(
            capsys, "wavefunction", "--kind", "F", "--M", "1.5",
            "--omega0-inv", "2.4", "--eps", "0.5", "--n", "0",
            "--r-max", "40", "--samples", "201",
        )
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 201
        assert rows[0]["kind"] == "UpperF"
        assert all(r["normalized"] == "1" for r in rows)
        assert all(float(r["value_imag"]) == 0.0 for r in rows)

    def test_pseudospin_lower_is_real_after_phase(self, capsys):
        code, out, _ = run_cli(
            capsys, "wavefunction", "--kind", "Gps", "--M", "1.5",
            "--omega0-inv", "2.4", "--C", "-10.3", "--eps", "0",
            "--n", "1", "--samples", "101",
        )
        assert code == 0
        rows = parse_csv(out)
        assert rows[0]["kind"] == "PseudoLowerG"
        peak = max(abs(float(r["value_real"])) for r in rows)
        assert all(abs(float(r["value_imag"])) <= 1e-12 * peak for r in rows)

    def test_raw_mode(self, capsys):
        code, out, _ = run_cli(
            capsys, "wavefunction", "--kind", "R", "--M", "1.5",
            "--omega0-inv", "2.4", "--n", "2", "--no-normalize",
            "--samples", "51",
        )
        assert code == 0
        assert all(r["normalized"] == "0" for r in parse_csv(out))


class TestNuCheck:
    def test_reduction_dump(self, capsys):
        code, out, _ = run_cli(capsys, "nu-check")
        assert code == 0
        payload = json.loads(out)
        spin_first = payload["spin"]["branches"][0]
        assert spin_first["admissible"] is True
        assert spin_first["k"] == pytest.approx([0.0, 0.0], abs=1e-12)
        assert spin_first["tau_slope"] == pytest.approx([-4.0, 0.0])
        pseudo_first = payload["pseudospin"]["branches"][0]
        assert pseudo_first["k"] == pytest.approx([-1.5, 0.0], abs=1e-12)
        assert pseudo_first["tau_slope"] == pytest.approx([0.0, -2.0])


class TestErrors:
    def test_unknown_flag_exits_two(self, capsys):
        code, _, _ = run_cli(capsys, "spectrum", "--symmetry", "spin",
                             "--M", "1", "--omega0", "1", "--bogus", "1")
        assert code == 2

    def test_missing_subcommand_exits_two(self, capsys):
        assert run_cli(capsys)[0] == 2

    def test_invalid_params_single_line_diagnostic(self, capsys):
        code, out, err = run_cli(capsys, "spectrum", "--symmetry", "spin",
                                 "--M", "-1", "--omega0", "1", "--eps", "0")
        assert code == 2
        assert out == ""
        assert err.startswith("error: ")
        assert err.count("\n") == 1

    def test_omega0_and_inverse_conflict(self, capsys):
        code, _, err = run_cli(capsys, "spectrum", "--symmetry", "spin",
                               "--M", "1", "--omega0", "1",
                               "--omega0-inv", "2.4", "--eps", "0")
        assert code == 2
        assert "not both" in err

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "curve.csv"
        code, out, _ = run_cli(capsys, "potential", "--M", "1", "--omega0", "1",
                               "--output", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("r,V\n")
