import json

import pytest
from mpmath import mp, mpf, mpmathify, sqrt

from dfreud.cli import main
from dfreud.verification import VerificationReport


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestBeta:
    def test_hankel_gaussian_halves(self, capsys):
        # s=0, alpha=0, N=1: rows n, n/2
        code, out, _ = run_cli(capsys, "beta", "--method", "hankel", "--s", "0",
                               "--alpha", "0", "--N", "1", "--n-max", "5")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,beta_n"
        values = [mpmathify(line.split(",")[1]) for line in lines[1:]]
        with mp.workdps(40):
            for n, v in enumerate(values):
                assert abs(v - mpf(n) / 2) < mpf(10) ** -30

    def test_dpi_at_s0_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "beta", "--method", "dpi", "--s", "0")
        assert code == 2
        assert "error" in err

    def test_largen_lew_quarles_row(self, capsys):
        code, out, _ = run_cli(capsys, "beta", "--method", "largen", "--s", "1",
                               "--alpha", "0", "--N", "1", "--n-max", "10000",
                               "--digits", "40")
        assert code == 0
        last = out.strip().splitlines()[-1].split(",")
        assert last[0] == "10000"
        with mp.workdps(40):
            ratio = mpmathify(last[1]) / 100
            assert abs(ratio - mpf("0.2886751")) < mpf(10) ** -3

    def test_dpi_route_json(self, capsys):
        code, out, _ = run_cli(capsys, "beta", "--method", "dpi", "--s", "0.5",
                               "--alpha", "1", "--N", "1", "--n-max", "6",
                               "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["columns"] == ["n", "beta_n"]
        assert len(doc["rows"]) == 7


class TestMoments:
    def test_csv_header_and_zeros(self, capsys):
        code, out, _ = run_cli(capsys, "moments", "--s", "0.5", "--alpha", "1",
                               "--N", "1", "--max-order", "6")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "j,mu_j"
        assert lines[2].split(",")[1] == "0.0"   # mu_1 exactly zero

    def test_quadrature_source_agrees(self, capsys):
        code, out_c, _ = run_cli(capsys, "moments", "--s", "0.5", "--alpha", "1",
                                 "--max-order", "4", "--digits", "40")
        code2, out_q, _ = run_cli(capsys, "moments", "--s", "0.5", "--alpha", "1",
                                  "--max-order", "4", "--digits", "40",
                                  "--source", "quad")
        assert code == code2 == 0
        with mp.workdps(45):
            for lc, lq in zip(out_c.strip().splitlines()[1:],
                              out_q.strip().splitlines()[1:]):
                vc, vq = mpmathify(lc.split(",")[1]), mpmathify(lq.split(",")[1])
                assert abs(vc - vq) <= mpf(10) ** -25 * max(abs(vc), 1)


class TestHankelDet:
    def test_rows(self, capsys):
        code, out, _ = run_cli(capsys, "hankel-det", "--s", "0", "--alpha", "0",
                               "--N", "1", "--n", "3", "--digits", "40")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "j,h_j,log_D_{j+1}"
        with mp.workdps(40):
            from mpmath import pi, log
            final = mpmathify(lines[-1].split(",")[2])
            assert abs(final - log(pi ** mpf(1.5) / 4)) < mpf(10) ** -25


class TestPolyOde:
    def test_residual_columns_small(self, capsys):
        code, out, _ = run_cli(capsys, "poly-ode", "--s", "0.5", "--alpha", "2",
                               "--N", "1", "--n-max", "4", "--z-grid", "0.9,1.7",
                               "--digits", "60")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,z,lowering,S1,S2,S2prime,ode_rel"
        with mp.workdps(40):
            for line in lines[1:]:
                cells = line.split(",")
                assert all(abs(mpmathify(c)) < mpf(10) ** -20 for c in cells[2:])


class TestLogdet:
    def test_dlogds(self, capsys):
        code, out, _ = run_cli(capsys, "logdet", "--quantity", "dlogds",
                               "--s", "0.5", "--alpha", "1", "--N", "2",
                               "--n-max", "4", "--digits", "40")
        assert code == 0
        assert out.splitlines()[0] == "n,dlogD_ds"

    def test_display_terms(self, capsys):
        code, out, _ = run_cli(capsys, "logdet", "--quantity", "D0", "--alpha",
                               "1", "--r", "1", "--n-max", "4", "--digits", "40")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[1].split(",")[1] == "odd"
        assert lines[2].split(",")[1] == "even"


class TestSensitivity:
    def test_long_format(self, capsys):
        code, out, _ = run_cli(capsys, "sensitivity", "--s", "0.5", "--alpha", "3",
                               "--N", "1", "--epsilons", "0,1e-3", "--n-max", "25",
                               "--digits", "120")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "epsilon,n,beta_n,first_failure_index"
        clean = [l for l in lines[1:] if l.startswith("0,")]
        bumped = [l for l in lines[1:] if l.startswith("1e-3,")]
        assert len(clean) == 26
        assert all(l.rsplit(",", 1)[1] == "" for l in clean)       # no failure
        assert all(l.rsplit(",", 1)[1] != "" for l in bumped)      # finite index

    def test_s0_rejected(self, capsys):
        code, _, err = run_cli(capsys, "sensitivity", "--s", "0")
        assert code == 2


class TestSweep:
    def test_grid(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--alpha", "1", "--N", "1",
                               "--s-from", "0.2", "--s-to", "1", "--steps", "3",
                               "--n-list", "1,2", "--digits", "40")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "s,n,beta_n"
        assert len(lines) == 1 + 3 * 2

    def test_empty_n_list(self, capsys):
        code, _, err = run_cli(capsys, "sweep", "--n-list", "")
        assert code == 2


class TestVerify:
    def test_ode_suite_roundtrip(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        code, _, _ = run_cli(capsys, "verify", "--suite", "ode",
                             "--out", str(out_path))
        assert code == 0
        text = out_path.read_text()
        report = VerificationReport.from_json(text)
        assert report.suite == "ode"
        assert report.all_passed
        # lossless round trip
        assert VerificationReport.from_json(report.to_json()).checks == report.checks

    def test_exit_code_reflects_failure(self, capsys, monkeypatch):
        import dfreud.verification as verification
        from dfreud.verification import Check

        def failing(digits=None):
            return [Check.build("x", "always fails", 1, 0)]

        monkeypatch.setitem(verification.SUITES, "ode", (failing,))
        code, out, _ = run_cli(capsys, "verify", "--suite", "ode")
        assert code == 1


class TestPrecisionCap:
    def test_env_cap_triggers_failure_exit(self, capsys, monkeypatch):
        monkeypatch.setenv("DFREUD_MAX_DIGITS", "50")
        code, _, err = run_cli(capsys, "beta", "--method", "hankel", "--s", "0.5",
                               "--alpha", "1", "--N", "1", "--n-max", "25",
                               "--digits", "60")
        assert code == 1
        assert "failed" in err
