import subprocess
import sys

import pytest

from wigner_spectrum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_report_calogero(capsys):
    code, out, _ = run(capsys, "report", "--pot", "ip(beta=1)", "--g", "1e4", "--eps", "3", "--alpha", "0.5,1,2")
    assert code == 0
    line = [l for l in out.splitlines() if l.startswith("S_vN")][0]
    assert "x=1.19737188992143" in line


def test_report_gaussian_critical(capsys):
    code, out, _ = run(capsys, "report", "--pot", "gr(sigma=10)", "--g", "82.43606353500641", "--eps", "3", "--csv")
    assert code == 0
    rows = [l.split(",") for l in out.splitlines() if not l.startswith("#")][1:]
    assert rows and all(r[1] == "1.0000000000000000e+00" for r in rows)


def test_report_isotropic(capsys):
    code, out, err = run(capsys, "report", "--pot", "ip(beta=1)", "--g", "1e4", "--eps", "1")
    assert code == 2
    assert "isotropic trap: entropies diverge; see asymptote command" in err
    assert "Traceback" not in err


def test_report_domain_errors(capsys):
    assert run(capsys, "report", "--pot", "gr(sigma=10)", "--g", "10", "--eps", "3")[0] == 2
    assert run(capsys, "report", "--pot", "zz(beta=1)", "--g", "10", "--eps", "3")[0] == 2
    assert run(capsys, "report", "--pot", "ip(beta=1)", "--eps", "3")[0] == 2
    assert run(capsys, "report", "--pot", "ip(beta=1)", "--g", "1e4", "--eps", "3", "--alpha", "-1")[0] == 2


def test_report_low_g_warns(capsys):
    code, _, err = run(capsys, "report", "--pot", "ip(beta=1)", "--g", "10", "--eps", "3")
    assert code == 0 and "validity gate" in err


def test_numeric_error_exit_code(capsys):
    # a truncation failure is a numeric (non-domain) error
    code, _, err = run(
        capsys, "spectrum", "--pot", "ip(beta=1)", "--g", "1e4", "--eps", "1.0000000001", "--tail-bound", "1e-15"
    )
    assert code == 3
    assert "index cap" in err


def test_csv_byte_identical(tmp_path):
    args = ["report", "--pot", "sip(beta=1,gamma=0.5)", "--g", "1e4", "--eps", "2,3", "--csv"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["-o", str(a)]) == 0
    assert main(args + ["-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert b"\r" not in a.read_bytes()


def test_sweep_preset_byte_identical(tmp_path, monkeypatch):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    monkeypatch.setenv("WIGNER_SPECTRUM_THREADS", "1")
    assert main(["sweep", "--preset", "fig7", "-o", str(a)]) == 0
    monkeypatch.setenv("WIGNER_SPECTRUM_THREADS", "0")
    assert main(["sweep", "--preset", "fig7", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_sweep_custom(capsys):
    code, out, _ = run(
        capsys, "sweep", "--pot", "il()", "--g-range", "1e2", "1e6", "5", "--eps-range", "1.5", "3", "4", "--alpha", "1,inf"
    )
    assert code == 0
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert lines[0].startswith("g,eps1,x0,")
    assert len(lines) == 1 + 20


def test_sweep_all_failed(capsys):
    code, _, err = run(capsys, "sweep", "--pot", "gr(sigma=10)", "--g-range", "1", "10", "3", "--eps", "3")
    assert code == 4
    assert "no sweep point" in err


def test_sweep_bad_threads(capsys, monkeypatch):
    monkeypatch.setenv("WIGNER_SPECTRUM_THREADS", "many")
    code, _, err = run(capsys, "sweep", "--preset", "fig4")
    assert code == 2 and "WIGNER_SPECTRUM_THREADS" in err


def test_oracle_calogero(capsys):
    code, out, err = run(capsys, "oracle", "--pot", "ip(beta=1)", "--g", "1e4", "--eps", "3")
    assert code == 0
    assert "oracle: PASS" in err
    row = [l for l in out.splitlines() if l.startswith("svd_vs_closed_form")][0]
    assert float(row.split(",")[3]) < 1e-8
    assert row.endswith("PASS")


def test_oracle_gaussian_rank_two(capsys):
    code, out, _ = run(capsys, "oracle", "--pot", "gr(sigma=10)", "--g", "82.43606353500641", "--eps", "3")
    assert code == 0
    assert "# note = rank-2 x-support detected" in out


def test_oracle_gate(capsys):
    code, _, err = run(capsys, "oracle", "--pot", "ip(beta=1)", "--g", "10", "--eps", "3")
    assert code == 2 and "--force" in err
    code, out, err = run(capsys, "oracle", "--pot", "ip(beta=1)", "--g", "10", "--eps", "3", "--force")
    assert code == 0
    assert "thresholds not asserted" in err
    assert "PASS" not in out and "FAIL" not in out


def test_oracle_failure_exit_code(capsys, monkeypatch):
    # the resolution gate rejects grids coarse enough to miss a threshold, so tighten one instead
    from wigner_spectrum import oracle

    monkeypatch.setitem(oracle.THRESHOLDS, "fd_x_zero_point", 1e-6)
    code, out, err = run(capsys, "oracle", "--pot", "ip(beta=1)", "--g", "1e4", "--eps", "3")
    assert code == 5
    assert "oracle: FAIL" in err and "fd_x_zero_point" in err
    assert [l for l in out.splitlines() if l.startswith("fd_x_zero_point")][0].endswith("FAIL")


def test_asymptote(capsys):
    code, out, _ = run(capsys, "asymptote", "--eps", "1.001,1.1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "eps,S_y_vN,asymptote,difference"
    assert lines[1].split(",")[2].startswith("2.49144607")
    assert run(capsys, "asymptote", "--eps", "1.5")[0] == 2


def test_spectrum_dump(capsys):
    code, out, _ = run(capsys, "spectrum", "--pot", "ip(beta=1)", "--g", "1e8", "--eps", "1000", "--tail-bound", "1e-6")
    assert code == 0
    body = [l for l in out.splitlines() if not l.startswith("#")]
    assert body[0] == "l,ltilde1,parity,occupancy"
    assert body[1].startswith("0,0,+,4.852")
    assert "# captured_mass = " in out


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# calogero\npot = ip(beta=1)\ng = 1e4\neps = 3   # trailing comment\ncsv = true\n")
    code, out, _ = run(capsys, "report", "--config", str(cfg))
    assert code == 0 and "# eps = 3.0000000000000000e+00" in out
    code, out, _ = run(capsys, "report", "--config", str(cfg), "--eps", "5")
    assert code == 0 and "# eps = 5.0000000000000000e+00" in out


def test_config_errors(tmp_path, capsys):
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour = blue\n")
    assert run(capsys, "report", "--config", str(bad))[0] == 2
    bad.write_text("just words\n")
    assert run(capsys, "report", "--config", str(bad))[0] == 2
    assert run(capsys, "report", "--config", str(tmp_path / "missing.cfg"))[0] == 2


def test_usage_error(capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys)[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wigner_spectrum", "asymptote", "--eps", "1.01"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("eps,")


@pytest.mark.parametrize("cmd", ["report", "sweep", "oracle", "asymptote", "spectrum"])
def test_help(cmd, capsys):
    assert main([cmd, "--help"]) == 0
    assert "--config" in capsys.readouterr().out
