"""Command-line interface: outputs, exit codes, determinism."""

import json

import pytest

from qcoherent.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_norm(self, capsys):
        code, out, _ = run(capsys, "eval", "norm", "--q", "0.5", "--x", "1")
        assert code == 0
        assert float(out.split()[0]) == pytest.approx(1.5894873526875811, rel=1e-10)

    def test_classical_mandel_is_zero(self, capsys):
        code, out, _ = run(capsys, "eval", "mandel", "--q", "1", "--x", "2")
        assert code == 0
        assert float(out.split()[0]) == 0.0

    def test_metric_at_origin(self, capsys):
        code, out, _ = run(capsys, "eval", "metric", "--q", "0.7", "--x", "0")
        assert code == 0
        assert float(out.split()[0]) == pytest.approx(0.7, abs=1e-8)

    def test_pn_requires_n(self, capsys):
        code, _, err = run(capsys, "eval", "pn", "--q", "0.7", "--x", "1")
        assert code == 2
        assert "--n" in err

    def test_rho(self, capsys):
        code, out, _ = run(capsys, "eval", "rho", "--q", "0.5", "--n", "1")
        assert code == 0
        assert float(out.split()[0]) == pytest.approx(1.5, rel=1e-13)

    def test_varx_with_complex_label(self, capsys):
        code, out, _ = run(capsys, "eval", "varx", "--q", "0.7", "--z-re", "1", "--z-im", "0")
        assert code == 0
        assert float(out.split()[0]) == pytest.approx(0.44701100583449879, rel=1e-10)

    def test_unknown_quantity_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "nosuch", "--q", "0.5", "--x", "1"])
        assert exc.value.code == 2

    def test_invalid_q(self, capsys):
        code, _, err = run(capsys, "eval", "norm", "--q", "1.5", "--x", "1")
        assert code == 2
        assert "deformation" in err

    def test_nonconvergence_exit(self, capsys):
        # q this close to 1 needs far more product factors than the cap allows
        code, _, err = run(capsys, "eval", "norm", "--q", "0.99999", "--x", "10")
        assert code == 3
        assert "factors" in err


class TestFigure:
    def test_writes_file(self, capsys, tmp_path):
        out = tmp_path / "fig6.csv"
        code, msg, _ = run(capsys, "figure", "6", "--out", str(out), "--points", "11")
        assert code == 0
        assert out.exists()
        assert "figure 6" in msg

    def test_deterministic(self, capsys, tmp_path):
        p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
        run(capsys, "figure", "3", "--out", str(p1), "--points", "11")
        run(capsys, "figure", "3", "--out", str(p2), "--points", "11")
        assert p1.read_bytes() == p2.read_bytes()

    def test_q_list_override(self, capsys, tmp_path):
        out = tmp_path / "fig2.csv"
        code, _, _ = run(capsys, "figure", "2", "--out", str(out), "--points", "5",
                         "--q-list", "0.6,0.5")
        assert code == 0
        header = out.read_text().splitlines()[0]
        assert header == "x,norm[q=0.6],norm[q=0.5]"

    def test_unwritable_path(self, capsys, tmp_path):
        code, _, err = run(capsys, "figure", "2", "--out", str(tmp_path / "nodir" / "f.csv"))
        assert code == 4
        assert "cannot write" in err


class TestVerify:
    def test_moments_single_q(self, capsys):
        code, out, _ = run(capsys, "verify", "moments", "--q-list", "0.8")
        assert code == 0
        assert "[PASS]" in out
        assert "FAIL" not in out

    def test_carleman(self, capsys):
        code, out, _ = run(capsys, "verify", "carleman")
        assert code == 0
        assert out.count("[PASS]") == 4

    def test_tol_overrides_moment_bound(self, capsys):
        # an impossibly tight bound must flip the suite to FAIL / exit 1
        code, out, _ = run(capsys, "verify", "moments", "--q-list", "0.8", "--tol", "1e-16")
        assert code == 1
        assert "[FAIL]" in out

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "verify", "carleman", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["all_passed"] is True
        assert all("name" in c for c in payload["checks"])

    def test_fock_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "fock")
        assert code == 0


class TestSample:
    def test_runs_and_reports(self, capsys):
        code, out, _ = run(capsys, "sample", "--q", "0.7", "--x", "2", "--draws", "50000",
                           "--seed", "4")
        assert code == 0
        assert "rng=numpy-PCG64" in out
        assert "[PASS]" in out

    def test_deterministic_output(self, capsys):
        args = ("sample", "--q", "0.7", "--x", "2", "--draws", "20000", "--seed", "9")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_draws_floor(self, capsys):
        code, _, err = run(capsys, "sample", "--q", "0.7", "--x", "2", "--draws", "10")
        assert code == 2
        assert "draws" in err
