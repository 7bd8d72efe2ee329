import os
import subprocess

import pytest

import charp


def test_version():
    assert charp.version() == "0.1.0"


def test_list_has_frozen_ids():
    ids = {s["id"] for s in charp.list_scenarios()}
    assert {"decalage", "alpha-sl2-f4", "witt-identity", "weights-1", "borel-3"} <= ids
    comb = {s["id"] for s in charp.list_scenarios("combinatorics")}
    assert {f"weights-{c}" for c in range(1, 5)} | {f"borel-{c}" for c in range(1, 4)} <= comb


def test_examples():
    r = charp.run("decalage", p=3, dim=3)
    assert r["pass"] and not r["skipped"]
    assert r["computed"]["nonzero_degrees"] == [3]
    assert r["computed"]["nonzero_dims"] == [1]
    assert r["expected"]["nonzero_degrees"]["provenance"] == "paper"
    assert charp.run("alpha-sl2-f4")["computed"]["nonzero"] is True
    assert charp.run("witt-identity", p=5)["pass"]


def test_budget_and_errors():
    r = charp.run("sym-cohomology", profile="fast", p=5, dim=2)
    assert r["skipped"] and not r["pass"]
    assert charp.run("sym-cohomology", profile="full", p=5, dim=2)["pass"]
    with pytest.raises(ValueError):
        charp.run("no-such-scenario")
    with pytest.raises(ValueError):
        charp.run("decalage", q=9)


def test_p2_counterexample():
    w = charp.weights_claim(3, 2, 2)
    assert not w["holds"] and w["solutions"] == 1 and w["certified"]
    assert charp.weights_claim(3, 3, 2)["holds"]
    assert not charp.borel_claim(1, 2)["holds"]
    assert charp.quadratic_field(2)["N"] == 5


def test_run_all_combinatorics():
    reports, code = charp.run_all("combinatorics")
    assert code == 0
    assert [r["id"] for r in reports] == sorted(r["id"] for r in reports)
    assert all(r["pass"] for r in reports)


CLI = os.environ.get("CHARP_CLI")


@pytest.mark.skipif(not CLI, reason="CHARP_CLI not set")
def test_cli_exit_codes(tmp_path):
    out = tmp_path / "r.json"
    ok = subprocess.run([CLI, "run", "decalage", "--p", "3", "--dim", "3", "--out", str(out)])
    assert ok.returncode == 0 and out.exists()
    assert subprocess.run([CLI, "run", "weights-3", "--p", "2"], capture_output=True).returncode == 1
    assert subprocess.run([CLI, "run", "no-such"], capture_output=True).returncode == 2
    assert subprocess.run([CLI, "frobnicate"], capture_output=True).returncode == 2
    env = dict(os.environ, CHARP_BUDGET_PROFILE="bogus")
    assert subprocess.run([CLI, "list"], env=env, capture_output=True).returncode == 0
    assert subprocess.run([CLI, "run", "decalage"], env=env, capture_output=True).returncode == 2
    cfg = tmp_path / "budget.toml"
    cfg.write_text("[budget]\nmax_level = 8\n")
    full = subprocess.run([CLI, "run", "sym-cohomology", "--p", "5", "--dim", "2", "--config", str(cfg), "--json"],
                          capture_output=True, text=True)
    assert full.returncode == 0 and '"skipped": false' in full.stdout
