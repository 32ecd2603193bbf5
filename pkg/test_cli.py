#!/usr/bin/env python3
"""
CLI Regression Tests
Tests command-line interface functionality
"""

import sys
import subprocess
import tempfile
from pathlib import Path

import yaml

ROOT = Path(__file__).parent
sys.path.insert(0, str(ROOT))


def _run(*args, timeout=120):
    return subprocess.run(
        [sys.executable, "main.py", *args],
        capture_output=True,
        text=True,
        timeout=timeout,
        cwd=ROOT,
    )


def test_cli_help():
    """Help lists every subcommand"""
    result = _run("--help", timeout=30)
    assert result.returncode == 0, result.stderr
    assert "intransitivity" in result.stdout
    for command in ("table1", "timeseries", "scatter", "substrate", "plot"):
        assert command in result.stdout, f"missing subcommand {command}"


def test_cli_without_arguments_fails():
    result = _run(timeout=30)
    assert result.returncode != 0
    assert "Usage" in result.stdout + result.stderr


def test_cli_unknown_subcommand_fails():
    result = _run("tournament", timeout=30)
    assert result.returncode != 0


def test_cli_table1():
    with tempfile.TemporaryDirectory() as tmp:
        result = _run("table1", "--output-dir", tmp)
        assert result.returncode == 0, result.stdout + result.stderr
        out = Path(tmp)
        for name in ("table1.csv", "table1.md", "manifest.yaml"):
            assert (out / name).exists(), f"{name} not written"
        assert "| #1 | 1600 | 4 | 1630 | 3 | 1642 |" in (out / "table1.md").read_text(encoding="utf-8")
        manifest = yaml.safe_load((out / "manifest.yaml").read_text(encoding="utf-8"))
        assert manifest["command"] == "table1"
        assert manifest["duration_seconds"] >= 0


def test_cli_timeseries_reproducible():
    with tempfile.TemporaryDirectory() as tmp:
        args = ["timeseries", "--n-players", "5", "--p-rand", "0.2", "--instances", "12", "--discard", "2", "--seed", "11"]
        first = _run(*args, "--output-dir", str(Path(tmp) / "a"))
        second = _run(*args, "--output-dir", str(Path(tmp) / "b"))
        assert first.returncode == 0 and second.returncode == 0, first.stdout + first.stderr
        a = (Path(tmp) / "a" / "timeseries.csv").read_bytes()
        b = (Path(tmp) / "b" / "timeseries.csv").read_bytes()
        assert a == b
        assert a.splitlines()[0] == b"k,player,sc,rt,gp,rank_sc,rank_rt,rank_gp"


def test_cli_timeseries_from_manifest():
    with tempfile.TemporaryDirectory() as tmp:
        first = _run("timeseries", "--n-players", "4", "--instances", "6", "--seed", "3", "--output-dir", str(Path(tmp) / "a"))
        assert first.returncode == 0, first.stdout + first.stderr
        # Re-running from the manifest reproduces the run; only the output directory changes
        second = _run("timeseries", "--config", str(Path(tmp) / "a" / "manifest.yaml"), "--output-dir", str(Path(tmp) / "b"))
        assert second.returncode == 0, second.stdout + second.stderr
        assert (Path(tmp) / "a" / "timeseries.csv").read_bytes() == (Path(tmp) / "b" / "timeseries.csv").read_bytes()


def test_cli_invalid_config_names_key():
    with tempfile.TemporaryDirectory() as tmp:
        config = Path(tmp) / "bad.yaml"
        config.write_text("n_players: 5\nplayers_count: 9\n", encoding="utf-8")
        result = _run("timeseries", "--config", str(config), "--output-dir", tmp, timeout=30)
        assert result.returncode != 0
        assert "players_count" in result.stdout + result.stderr
        result = _run("timeseries", "--p-rand", "1.5", "--output-dir", tmp, timeout=30)
        assert result.returncode != 0
        assert "p_rand" in result.stdout + result.stderr


def test_cli_scatter_and_plot():
    with tempfile.TemporaryDirectory() as tmp:
        result = _run("scatter", "--fast", "--players", "4,5", "--p-rand-levels", "0.1,0.5",
                      "--reps", "3", "--instances", "10", "--discard", "2", "--output-dir", tmp)
        assert result.returncode == 0, result.stdout + result.stderr
        out = Path(tmp)
        for name in ("scatter.csv", "scatter_summary.csv", "scatter_players.csv", "manifest.yaml"):
            assert (out / name).exists(), f"{name} not written"
        assert len((out / "scatter.csv").read_text(encoding="utf-8").splitlines()) == 1 + 2 * 2 * 3

        plot = _run("plot", "--input", str(out / "scatter.csv"), "--x", "itx_norm", "--y", "crd_sc_gp",
                    "--output-dir", str(out / "plots"))
        assert plot.returncode == 0, plot.stdout + plot.stderr
        assert (out / "plots" / "scatter_crd_sc_gp_vs_itx_norm.svg").exists()

        views = _run("plot", "--input", str(out / "scatter.csv"), "--all-views", "--output-dir", str(out / "views"))
        assert views.returncode == 0, views.stdout + views.stderr
        assert len(list((out / "views").glob("*.svg"))) == 9

        bad = _run("plot", "--input", str(out / "scatter.csv"), "--x", "itx_norm", "--y", "nope",
                   "--output-dir", str(out / "plots"), timeout=30)
        assert bad.returncode == 2
        assert "nope" in bad.stdout + bad.stderr


def test_cli_substrate():
    with tempfile.TemporaryDirectory() as tmp:
        result = _run("substrate", "--landscape", "sphere", "--population-size", "10", "--mu", "3",
                      "--samples", "50", "--seed", "2", "--output-dir", tmp)
        assert result.returncode == 0, result.stdout + result.stderr
        lines = (Path(tmp) / "substrate.csv").read_text(encoding="utf-8").splitlines()
        assert lines[0] == "index,s,f_obj,f_sub,f_sub_mean,f_sub_expected"
        assert len(lines) == 11


def test_cli_runner_in_process():
    """Same entry point driven in-process through click's test runner"""
    from click.testing import CliRunner
    from main import main

    runner = CliRunner()
    result = runner.invoke(main, [])
    assert result.exit_code == 2
    assert "Usage" in result.output

    with tempfile.TemporaryDirectory() as tmp:
        result = runner.invoke(main, ["table1", "--output-dir", tmp])
        assert result.exit_code == 0, result.output
        assert "1642" in result.output
        assert (Path(tmp) / "table1.csv").exists()

        result = runner.invoke(main, ["timeseries", "--n-players", "2", "--output-dir", tmp])
        assert result.exit_code != 0
        assert "n_players" in result.output


TESTS = [
    ("Help Command", test_cli_help),
    ("No Arguments", test_cli_without_arguments_fails),
    ("Unknown Subcommand", test_cli_unknown_subcommand_fails),
    ("Worked Example", test_cli_table1),
    ("Timeseries Reproducible", test_cli_timeseries_reproducible),
    ("Timeseries From Manifest", test_cli_timeseries_from_manifest),
    ("Invalid Config", test_cli_invalid_config_names_key),
    ("Scatter And Plot", test_cli_scatter_and_plot),
    ("Substrate", test_cli_substrate),
    ("In-Process Runner", test_cli_runner_in_process),
]


if __name__ == "__main__":
    print("\n" + "="*60)
    print("CLI REGRESSION TESTS")
    print("="*60)

    passed = 0
    failed = 0

    for test_name, test_func in TESTS:
        try:
            test_func()
            print(f"✅ PASS: {test_name}")
            passed += 1
        except Exception as e:
            print(f"❌ FAIL: {test_name} - {str(e)}")
            failed += 1

    print("\n" + "="*60)
    print("CLI TEST SUMMARY")
    print("="*60)
    print(f"✅ Passed: {passed}")
    print(f"❌ Failed: {failed}")
    print("="*60)

    sys.exit(0 if failed == 0 else 1)
