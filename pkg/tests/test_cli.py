"""Command-line behavior: output shapes, trailers, exit codes, determinism."""

import io
import subprocess
import sys
from importlib import resources

import pytest

from flagcert.cli import main
from flagcert.graphs import emit_paircode, to_graph6, turan

K221_CODE = "2 2 2 1 1 2 2 2 2 2"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _bundled_text(name):
    return (resources.files("flagcert") / "certs" / name).read_text()


# ---------------------------------------------------------------------------
# enumerate / density


def test_enumerate_order_three(capsys):
    code, out, _ = run(capsys, "enumerate", "--order", "3")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 5 and lines[-1] == "count=4"
    assert "1 1 1" in lines and "2 2 2" in lines


def test_enumerate_graph6(capsys):
    code, out, _ = run(capsys, "enumerate", "--order", "5", "--graph6")
    lines = out.splitlines()
    assert code == 0 and lines[-1] == "count=34"
    # order-5 graph6: one order byte, two data bytes
    assert all(len(l) == 3 and l[0] == "D" for l in lines[:-1])


def test_enumerate_rejects_large_order(capsys):
    code, _, err = run(capsys, "enumerate", "--order", "8")
    assert code == 2 and err.startswith("error:")


def test_density_edge_in_turan(capsys):
    code, out, _ = run(
        capsys, "density", "--h", "2", "--g", emit_paircode(turan(3, 6))
    )
    assert code == 0
    assert "count=12" in out
    assert "density=4/5" in out
    assert "density_approx=0.800000000" in out


def test_density_graph6_host(capsys):
    code, out, _ = run(
        capsys, "density", "--h", K221_CODE, "--g", to_graph6(turan(3, 6))
    )
    assert code == 0 and "count=6" in out and "density=1" in out


def test_density_pattern_larger_than_host(capsys):
    code, _, err = run(capsys, "density", "--h", K221_CODE, "--g", "2")
    assert code == 2 and "error:" in err


# ---------------------------------------------------------------------------
# verify


def test_verify_lemma074(capsys):
    code, out, _ = run(capsys, "verify", "--cert", "lemma074.cert")
    assert code == 0
    assert "verdict=PASS" in out
    assert "at most 44.947" in out
    assert "max_coefficient=13167847077677/292968750000" in out
    assert "zero_set_size=" in out


def test_verify_parametric_default_base(capsys):
    code, out, _ = run(capsys, "verify", "--cert", "appendixA.cert")
    assert code == 0
    assert "verdict=PASS" in out and "k0=5" in out
    assert "zero_set_size=8" in out


def test_verify_parametric_low_base_fails(capsys):
    code, out, _ = run(
        capsys, "verify", "--cert", "appendixA.cert", "--k0", "4"
    )
    assert code == 1
    assert "verdict=FAIL" in out
    assert "63*k^6" in out


def test_verify_against_goldens(capsys):
    code, out, _ = run(
        capsys, "verify", "--cert", "lemma074.cert", "--golden", "appendixB.golden"
    )
    assert code == 0 and "golden_mismatches=0" in out

    code, out, _ = run(
        capsys, "verify", "--cert", "appendixA.cert", "--golden", "appendixC.golden"
    )
    assert code == 0 and "golden_mismatches=0" in out


def test_verify_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(_bundled_text("k3.cert")))
    code, out, _ = run(capsys, "verify", "--cert", "-")
    assert code == 0 and "verdict=PASS" in out


def test_verify_rejects_double_stdin(capsys):
    code, _, err = run(capsys, "verify", "--cert", "-", "--golden", "-")
    assert code == 2 and "standard input" in err


def test_verify_k0_on_numeric_certificate(capsys):
    code, _, err = run(capsys, "verify", "--cert", "k3.cert", "--k0", "5")
    assert code == 2 and "parametric" in err


def test_verify_missing_file(capsys):
    code, _, err = run(capsys, "verify", "--cert", "no-such.cert")
    assert code == 2 and "not a bundled name" in err


# ---------------------------------------------------------------------------
# profile


def test_profile_stdout_csv(capsys):
    code, out, _ = run(
        capsys, "profile", "--from", "0", "--to", "1", "--step", "0.005"
    )
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "e,value"
    assert len(lines) == 1 + 202  # grid plus the inserted 2/3 breakpoint
    assert "0.666667,0.370370" in lines
    assert "0.750000,0.351562" in lines


def test_profile_out_file(capsys, tmp_path):
    target = tmp_path / "curve.csv"
    code, out, _ = run(
        capsys,
        "profile",
        "--from", "0", "--to", "1", "--step", "0.005",
        "--out", str(target),
    )
    assert code == 0
    assert "points=202" in out
    text = target.read_text()
    assert text.startswith("e,value\n") and "0.666667,0.370370\n" in text


def test_profile_bad_step(capsys):
    code, _, err = run(capsys, "profile", "--from", "0", "--to", "1", "--step", "0")
    assert code == 2 and "error:" in err


# ---------------------------------------------------------------------------
# oracle


def test_oracle_single_edge_count(capsys):
    code, out, _ = run(
        capsys, "oracle", "--h", K221_CODE, "--n", "5", "--edges", "8"
    )
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "n,edges,max_count,density,maximizers"
    assert lines[1].startswith("5,8,1,1,")
    assert "max_count=1" in out and "density=1" in out


def test_oracle_full_table(capsys):
    code, out, _ = run(capsys, "oracle", "--h", K221_CODE, "--n", "5")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 1 + 11 + 2  # header, edge counts 0..10, trailers
    assert "max_count=1" in out


def test_oracle_order_guard(capsys):
    code, _, err = run(capsys, "oracle", "--h", K221_CODE, "--n", "10")
    assert code == 2 and "error:" in err


# ---------------------------------------------------------------------------
# scan


def test_scan_passes(capsys):
    code, out, _ = run(capsys, "scan", "--k", "3,7/2", "--nmax", "10")
    assert code == 0
    assert "verdict=PASS" in out
    assert "violations=0" in out
    assert "triples_checked=" in out and "tight_points=" in out


def test_scan_rejects_small_k(capsys):
    code, _, err = run(capsys, "scan", "--k", "2", "--nmax", "10")
    assert code == 2 and "error:" in err


def test_scan_rejects_garbage_k(capsys):
    code, _, err = run(capsys, "scan", "--k", "3,owl", "--nmax", "10")
    assert code == 2 and "comma-separated" in err


# ---------------------------------------------------------------------------
# environment, argparse plumbing, determinism


def test_threads_env_controls_workers(capsys, monkeypatch):
    monkeypatch.setenv("FLAGCERT_THREADS", "2")
    code, out, _ = run(capsys, "scan", "--k", "3", "--nmax", "12")
    assert code == 0 and "verdict=PASS" in out


def test_threads_env_garbage_rejected(capsys, monkeypatch):
    monkeypatch.setenv("FLAGCERT_THREADS", "many")
    code, _, err = run(capsys, "scan", "--k", "3", "--nmax", "5")
    assert code == 2 and "FLAGCERT_THREADS" in err


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["polish"])
    assert exc.value.code == 2


def test_missing_required_flag_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate"])
    assert exc.value.code == 2


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "--cert", "lemma074.cert")
    _, second, _ = run(capsys, "verify", "--cert", "lemma074.cert")
    assert first == second
    _, t1, _ = run(capsys, "oracle", "--h", K221_CODE, "--n", "6")
    _, t2, _ = run(capsys, "oracle", "--h", K221_CODE, "--n", "6")
    assert t1 == t2


def test_console_script_installed():
    proc = subprocess.run(
        ["flagcert", "enumerate", "--order", "2"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "count=2"
