"""Command-line interface: formats, exit codes, determinism."""

import math

import pytest

from steklov_shell import cli
from steklov_shell import shell_spectrum as sp
from steklov_shell.verify import check_w2_vanishes


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSpectrumCommand:
    def test_first_nonzero_row(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--dim", "2", "--a", "0.5", "--kmax", "5")
        assert code == 0
        lines = [l for l in out.splitlines() if not l.startswith("#")]
        first_nonzero = lines[2].split()
        assert float(first_nonzero[0]) == pytest.approx(0.4384471871911697, rel=1e-12)
        assert first_nonzero[1:] == ["1", "lower", "2"]

    def test_csv_contract(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--dim", "2", "--a", "0.5", "--kmax", "3", "--format", "csv"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("# manifest: command=spectrum")
        header = next(l for l in lines if not l.startswith("#"))
        assert header == "value,k,branch,multiplicity"
        assert out.endswith("\n")

    def test_validation_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "spectrum", "--dim", "2", "--a", "1.2", "--kmax", "3")
        assert code == 2
        assert "inner radius must lie in (0,1)" in err


class TestBoundCommand:
    def test_steklov_breakdown(self, capsys):
        code, out, _ = run_cli(capsys, "bound", "--dim", "3", "--a", "0.4", "--d", "0.2")
        assert code == 0
        fields = dict(
            line.split() for line in out.splitlines()
            if not line.startswith("#") and len(line.split()) == 2 and line.split()[0] != "field"
        )
        assert abs(float(fields["w2"])) < 1e-10
        assert float(fields["bound"]) < sp.sigma1_closed_form(3, 0.4)

    def test_concentric_anchor(self, capsys):
        code, out, _ = run_cli(
            capsys, "bound", "--dim", "2", "--a", "0.5", "--d", "0", "--format", "csv"
        )
        assert code == 0
        data = out.splitlines()[-1].split(",")
        header = [l for l in out.splitlines() if not l.startswith("#")][0].split(",")
        bound = float(data[header.index("bound")])
        assert bound == pytest.approx(sp.sigma1_closed_form(2, 0.5), abs=1e-9)

    def test_mixed_problem_anchor(self, capsys):
        code, out, _ = run_cli(
            capsys, "bound", "--problem", "dirichlet-steklov", "--dim", "2",
            "--a", "0.5", "--d", "0", "--format", "csv",
        )
        assert code == 0
        header = [l for l in out.splitlines() if not l.startswith("#")][0].split(",")
        data = out.splitlines()[-1].split(",")
        assert float(data[header.index("bound")]) == pytest.approx(1 / math.log(2), abs=1e-9)


class TestSolveCommand:
    def test_moderate_offset(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "--a", "0.5", "--d", "0.3", "--order", "24")
        assert code == 0
        sigma1 = float(next(l for l in out.splitlines() if l.startswith("# sigma1=")).split("=")[1])
        residual = float(next(l for l in out.splitlines() if l.startswith("# residual=")).split("=")[1])
        assert sigma1 < sp.sigma1_closed_form(2, 0.5)
        assert residual < 1e-6

    def test_concentric_matches_closed_form(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "--a", "0.5", "--d", "0")
        assert code == 0
        sigma1 = float(next(l for l in out.splitlines() if l.startswith("# sigma1=")).split("=")[1])
        assert sigma1 == pytest.approx(sp.sigma1_closed_form(2, 0.5), abs=1e-8)

    def test_ill_conditioned_exit_code(self, capsys):
        code, _, err = run_cli(
            capsys, "solve", "--a", "0.5", "--d", "0.3", "--order", "200", "--points", "1600"
        )
        assert code == 3
        assert "numerical failure" in err


class TestSweepCommand:
    def test_monotone_bound_column(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--problem", "steklov", "--dim", "2", "--a", "0.5",
            "--d-steps", "8", "--no-solver", "--format", "csv",
        )
        assert code == 0
        rows = [l.split(",") for l in out.splitlines() if not l.startswith("#")][1:]
        bounds = [float(r[1]) for r in rows]
        assert all(b2 < b1 for b1, b2 in zip(bounds, bounds[1:]))

    def test_ratio_interior_argmax(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--problem", "ratio", "--dim", "3",
            "--eps-steps", "50", "--format", "csv",
        )
        assert code == 0
        star = float(next(l for l in out.splitlines() if l.startswith("# eps_star=")).split("=")[1])
        assert 0 < star < 1

    def test_empty_grid_rejected(self, capsys):
        code, _, err = run_cli(
            capsys, "sweep", "--problem", "steklov", "--dim", "2", "--a", "0.5",
            "--d-steps", "0", "--no-solver",
        )
        assert code == 2

    def test_solver_flags_validated_before_sweep(self, capsys):
        code, _, _ = run_cli(
            capsys, "sweep", "--problem", "steklov", "--dim", "2", "--a", "0.5",
            "--d-steps", "4", "--order", "2",
        )
        assert code == 2

    def test_full_precision_round_trip(self, capsys):
        code, out, _ = run_cli(
            capsys, "bound", "--dim", "2", "--a", "0.5", "--d", "0.3", "--format", "csv"
        )
        assert code == 0
        from steklov_shell import rayleigh
        from steklov_shell.geometry import ShellConfig

        header = [l for l in out.splitlines() if not l.startswith("#")][0].split(",")
        data = out.splitlines()[-1].split(",")
        printed = float(data[header.index("bound")])
        assert printed == rayleigh.steklov_bound(ShellConfig(2, 0.5, 0.3)).bound

    def test_out_file_and_byte_determinism(self, capsys, tmp_path):
        paths = [tmp_path / "s1.csv", tmp_path / "s2.csv"]
        for p in paths:
            code, _, _ = run_cli(
                capsys, "sweep", "--problem", "dirichlet-steklov", "--dim", "3",
                "--a", "0.4", "--d-steps", "5", "--format", "csv", "--out", str(p),
            )
            assert code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()
        text = paths[0].read_text()
        assert text.startswith("# manifest: command=sweep")
        assert "d,bound,closed_form" in text

    def test_jobs_do_not_change_bytes(self, capsys, tmp_path):
        out = []
        for jobs in ("1", "2"):
            p = tmp_path / f"jobs{jobs}.csv"
            code, _, _ = run_cli(
                capsys, "sweep", "--problem", "steklov", "--dim", "4", "--a", "0.3",
                "--d-steps", "4", "--format", "csv", "--jobs", jobs, "--out", str(p),
            )
            assert code == 0
            out.append(p.read_bytes())
        assert out[0] == out[1]


class TestVerifyCommand:
    def test_subset_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--level", "fast", "--checks", "wallis")
        assert code == 0
        assert "PASS wallis_recursion_consistency" in out

    def test_fault_injection_fails_named_check(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--level", "fast", "--checks", "w2_vanishes",
            "--inject-fault", "w2-sign",
        )
        assert code == 1
        assert "FAIL w2_vanishes" in out

    def test_fault_hook_direct(self):
        assert check_w2_vanishes(None).passed
        assert not check_w2_vanishes("w2-sign").passed


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0
