"""Command-line contract: subcommands, exit codes, JSON output."""

import json
import subprocess
import sys

import pytest

from spectool.cli import main

CLI = [sys.executable, "-m", "spectool.cli"]


def run_cli(args, stdin_text=""):
    return subprocess.run(CLI + args, input=stdin_text, text=True,
                          capture_output=True)


def test_gen_complete_3_is_Bw():
    result = run_cli(["gen", "--family", "complete", "--params", "3"])
    assert result.returncode == 0
    assert result.stdout.strip() == "Bw"


def test_gen_bipartite():
    result = run_cli(["gen", "--family", "bipartite", "--params", "2,3"])
    assert result.returncode == 0
    from spectool.families import complete_bipartite
    from spectool.graph6 import from_graph6

    assert from_graph6(result.stdout.strip()) == complete_bipartite(2, 3)


def test_gen_bad_params_exit3():
    assert run_cli(["gen", "--family", "cycle", "--params", "2"]).returncode == 3
    assert run_cli(["gen", "--family", "complete", "--params", "x"]).returncode == 3


def test_analyze_k3_from_stdin():
    result = run_cli(["analyze", "--json"], stdin_text="Bw\n")
    assert result.returncode == 0
    reports = json.loads(result.stdout)
    assert len(reports) == 1
    rep = reports[0]
    assert rep["lambda1"] == pytest.approx(2.0, abs=1e-9)
    assert rep["triangles"]["brute"] == 1
    assert rep["spectral_mantel"]["kind"] == "has_triangle"


def test_analyze_pipe_composition():
    gen = run_cli(["gen", "--family", "cycle", "--params", "5"])
    result = run_cli(["analyze", "--json"], stdin_text=gen.stdout)
    rep = json.loads(result.stdout)[0]
    assert rep["lambda1"] == pytest.approx(2.0, abs=1e-9)


def test_analyze_cycles_flag_k33():
    gen = run_cli(["gen", "--family", "bipartite", "--params", "3,3"])
    result = run_cli(["analyze", "--json", "--cycles", "6"],
                     stdin_text=gen.stdout)
    rep = json.loads(result.stdout)[0]
    assert rep["cycles"]["present"] == [4, 6]


def test_analyze_walks_flag():
    result = run_cli(["analyze", "--json", "--walks", "3"], stdin_text="Bw\n")
    rep = json.loads(result.stdout)[0]
    assert rep["walks"]["totals"] == ["3", "6", "12", "24"]


def test_analyze_parse_error_exit2():
    result = run_cli(["analyze"], stdin_text="Bw\n\x02bad\n")
    assert result.returncode == 2
    assert "line 2" in result.stderr


def test_analyze_table_output():
    result = run_cli(["analyze"], stdin_text="Bw\n")
    assert result.returncode == 0
    assert "lambda1" in result.stdout


def test_verify_spectral_mantel_small():
    result = run_cli(["verify", "--theorem", "spectral-mantel",
                      "--max-n", "5", "--json"])
    assert result.returncode == 0
    report = json.loads(result.stdout)
    assert report["totals"]["spectral-mantel"]["violated"] == 0
    assert "runtime_ms" not in report


def test_verify_jobs_deterministic_json():
    args = ["verify", "--theorem", "stanley,hong", "--max-n", "5", "--json"]
    rep1 = run_cli(args + ["--jobs", "1"])
    rep2 = run_cli(args + ["--jobs", "4"])
    assert rep1.stdout == rep2.stdout


def test_verify_max_n_9_exit3():
    assert run_cli(["verify", "--max-n", "9"]).returncode == 3


def test_verify_n8_needs_long_run_flag():
    assert run_cli(["verify", "--max-n", "8", "--theorem", "mantel"]
                   ).returncode == 3


def test_verify_unknown_theorem_exit3():
    assert run_cli(["verify", "--theorem", "nonsense"]).returncode == 3


def test_fuzz_deterministic_byte_identical():
    args = ["fuzz", "--dist", "gnp:12,0.4", "--count", "60", "--seed", "7",
            "--theorem", "stanley,thm11,lemma3", "--json"]
    rep1 = run_cli(args)
    rep2 = run_cli(args)
    assert rep1.returncode == 0
    assert rep1.stdout == rep2.stdout


def test_fuzz_bad_distribution_exit3():
    assert run_cli(["fuzz", "--dist", "gnp:30,1.5"]).returncode == 3


def test_env_var_sets_default_jobs(monkeypatch):
    monkeypatch.setenv("SPECTOOL_JOBS", "3")
    from spectool.cli import build_parser

    args = build_parser().parse_args(["verify", "--max-n", "4"])
    assert args.jobs == 3


def test_main_callable_directly(capsys):
    code = main(["gen", "--family", "star", "--params", "5"])
    assert code == 0
    out = capsys.readouterr().out.strip()
    from spectool.families import star
    from spectool.graph6 import from_graph6

    assert from_graph6(out) == star(5)
