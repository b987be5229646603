import json
import os
import subprocess
import sys

import pytest

from adlv import cli


def run_cli(args, env_extra=None):
    env = dict(os.environ)
    env.pop(cli.CACHE_ENV, None)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run([sys.executable, "-m", "adlv.cli", *args],
                          capture_output=True, text=True, env=env)
    return proc


def test_semimodules_fixture():
    proc = run_cli(["semimodules", "--mu", "1,1,0,0,0"])
    assert proc.returncode == 0
    records = json.loads(proc.stdout)
    assert len(records) == 2
    assert sorted(r["dim"] for r in records) == [0, 1]
    assert all(r["cyclic"] for r in records)


def test_semimodules_rank7():
    proc = run_cli(["semimodules", "--mu", "1,1,1,0,0,0,0"])
    records = json.loads(proc.stdout)
    assert len(records) == 5
    assert sorted(r["dim"] for r in records) == [0, 1, 2, 2, 3]


def test_semimodules_zero():
    proc = run_cli(["semimodules", "--mu", "0,0,0"])
    records = json.loads(proc.stdout)
    assert len(records) == 1 and records[0]["dim"] == 0


def test_crystal_fixtures():
    proc = run_cli(["crystal", "--mu", "1,1,0,0,0"])
    records = json.loads(proc.stdout)
    assert len(records) == 1 and records[0]["cyclic"]
    assert records[0]["b"] == [[3], [5]]
    proc = run_cli(["crystal", "--mu", "2,0,0"])
    records = json.loads(proc.stdout)
    assert all(r["cyclic"] for r in records)
    proc = run_cli(["crystal", "--mu", "3,3,1,0"])
    records = json.loads(proc.stdout)
    assert any(not r["cyclic"] for r in records)


def test_adm_and_lp():
    proc = run_cli(["adm", "--mu", "1,1,0,0,0"])
    records = json.loads(proc.stdout)
    assert sum(r["nonempty"] for r in records) == 2
    assert {r["finite_part_cycle_type"] == [5] for r in records if r["nonempty"]} == {True}
    proc = run_cli(["lp", "--n", "5", "--w", "tau^2"])
    record = json.loads(proc.stdout)
    assert len(record["lp"]) == 120
    assert record["coxeter_witness"] is not None


def test_classpoly():
    proc = run_cli(["classpoly", "--n", "5", "--m", "2", "--w", "s0*s4*tau^2"])
    record = json.loads(proc.stdout)
    assert record["F_as_q_polynomial"] == [0, 1]
    assert record["dim"] == 1 and record["top_components"] == 1


def test_compare_single_and_sweep():
    proc = run_cli(["compare", "--mu", "1,1,0,0,0", "--format", "csv"])
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert lines[0].startswith("n,mu,")
    assert "true,true,true,true,true" in lines[1]
    proc = run_cli(["compare", "--max-n", "3", "--max-mu1", "3", "--format", "csv"])
    assert proc.returncode == 0
    rows = proc.stdout.strip().splitlines()[1:]
    assert all(",true,true," in r or ",false,false," in r for r in rows)


def test_usage_errors():
    assert run_cli(["semimodules", "--mu", "1,1,0,0"]).returncode == 2   # gcd
    assert run_cli(["semimodules", "--mu", "0,1"]).returncode == 2       # order
    assert run_cli(["lp", "--n", "5"]).returncode == 2
    assert run_cli(["compare"]).returncode == 2
    assert run_cli(["compare", "--max-n", "99", "--max-mu1", "1"]).returncode == 2
    assert run_cli(["nonsense"]).returncode == 2


def test_determinism_and_cache(tmp_path):
    cache = tmp_path / "cache"
    env = {cli.CACHE_ENV: str(cache)}
    args = ["classpoly", "--n", "7", "--m", "3", "--w", "s0*s6*s5*s1*tau^3",
            "--seed", "5"]
    first = run_cli(args, env)
    assert first.returncode == 0
    files = list(cache.glob("*.json"))
    assert len(files) == 1
    second = run_cli(args, env)
    assert second.stdout == first.stdout
    uncached = run_cli(args)
    assert uncached.stdout == first.stdout


def test_out_flag(tmp_path):
    out = tmp_path / "strata.json"
    proc = run_cli(["semimodules", "--mu", "1,1,0,0,0", "--out", str(out)])
    assert proc.returncode == 0
    assert json.loads(out.read_text())
