import json
import shutil
import subprocess
import sys

import pytest

from prerigid import schemas, suite
from prerigid.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


@pytest.mark.parametrize("argv", [
    ["finrel", "--max-size", "2"],
    ["finvect", "--max-dim", "3"],
    ["fam"],
    ["maf"],
    ["famrel"],
    ["diagram"],
    ["graded"],
    ["pomonoid", "validate", "klein4.json"],
    ["pomonoid", "laws", "z3.json"],
    ["parse", "free", "lexicon_english.json"],
    ["parse", "finite", "finite_chain.json"],
    ["lift", "lax"],
    ["lift", "barop", "bialgebra_kz2.json"],
    ["witness", "not-closed"],
    ["witness", "decimals"],
])
def test_passing_verbs_exit_zero(capsys, argv):
    code, report = run_json(capsys, *argv)
    assert code == 0, report
    assert report["status"] == "pass"
    assert report["schema_version"] == "1"
    assert all({"claim", "anchor", "status", "test_set"} <= set(c) for c in report["checks"])


def test_classify_sets_pregroup_flags(capsys):
    code, report = run_json(capsys, "pomonoid", "classify", "fixtures/z2.json")
    assert code == 0
    flags = report["checks"][0]["details"]["classification"]
    assert flags["is_pregroup"] and flags["is_residuated"] and flags["is_contractive"]


def test_tambara_degree_four(capsys):
    code, report = run_json(capsys, "tambara", "--degree", "4")
    assert code == 0
    assert report["checks"][0]["details"]["cumulative"] == 9


@pytest.mark.parametrize("argv", [
    ["finvect", "negative/braiding_corrupt.json"],
    ["pomonoid", "validate", "negative/pomonoid_nonassoc.json"],
    ["pomonoid", "laws", "negative/proto_inverses_corrupt.json"],
    ["lift", "barop", "negative/bialgebra_double_delta.json"],
    ["parse", "free", "lexicon_english.json", "likes", "John"],
    ["witness", "decimals", "--degree", "1"],
])
def test_negative_controls_exit_one(capsys, argv):
    code, report = run_json(capsys, *argv)
    assert code == 1
    failed = [c for c in report["checks"] if c["status"] == "fail"]
    assert failed and all("witness" in c for c in failed)


def test_corrupt_braiding_witness_is_hexagon(capsys):
    _, report = run_json(capsys, "finvect", "negative/braiding_corrupt.json")
    failed = next(c for c in report["checks"] if c["status"] == "fail")
    assert "hexagon" in failed["witness"]["case"]


def test_missing_file_exits_two(capsys):
    code, _, err = run(capsys, "pomonoid", "validate", "nowhere.json")
    assert code == 2 and "schema error" in err


def test_bad_arguments_exit_two(capsys):
    assert run(capsys, "pomonoid", "frobnicate", "z2.json")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_corrupted_fixture_directory(capsys, tmp_path, monkeypatch):
    for p in schemas.fixture_root().glob("*.json"):
        shutil.copy(p, tmp_path / p.name)
    doc = json.loads((tmp_path / "z2.json").read_text())
    del doc["leq"]
    (tmp_path / "broken.json").write_text(json.dumps(doc))
    monkeypatch.setenv("PRERIGID_FIXTURES", str(tmp_path))
    code, _, err = run(capsys, "all")
    assert code == 2
    assert "broken.json#/" in err and "'leq' is a required property" in err


def test_json_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["all", "--only", "1", "3", "12", "--out", str(a)])
    main(["all", "--only", "1", "3", "12", "--out", str(b)])
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    report = json.loads(a.read_text())
    assert [c["criterion"] for c in report["checks"]] == [1, 3, 12]
    assert "out" not in report["command"]


def test_seed_changes_samples_not_verdicts(capsys):
    verdicts = []
    for seed in ("0", "1", "2"):
        _, report = run_json(capsys, "all", "--only", "3", "4", "7", "11", "--seed", seed)
        verdicts.append([(c["criterion"], c["status"]) for c in report["checks"]])
        assert report["seed"] == int(seed)
    assert verdicts[0] == verdicts[1] == verdicts[2]


def test_text_format_has_one_line_per_check(capsys):
    code, out, _ = run(capsys, "all", "--only", "1", "2")
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.startswith(("PASS  [", "FAIL  ["))]
    assert len(lines) == 2
    assert out.splitlines()[-1] == "PASS  2 checks, seed 0"


def test_process_pool_matches_serial():
    opt = suite.Options()
    pooled = suite.run_criteria(0, opt, only=[1, 2, 9], workers=2)
    serial = suite.run_criteria(0, opt, only=[1, 2, 9], workers=1)
    assert [o.report for o in pooled] == [o.report for o in serial]
    assert all(o.passed for o in pooled)


def test_console_script_runs():
    exe = shutil.which("prerigid")
    cmd = [exe] if exe else [sys.executable, "-m", "prerigid.cli"]
    res = subprocess.run(cmd + ["maf", "--format", "json"], capture_output=True, text=True, timeout=60)
    assert res.returncode == 0
    assert json.loads(res.stdout)["status"] == "pass"


def test_all_honours_bounds(capsys):
    code, report = run_json(capsys, "all", "--only", "10", "--degree", "5")
    assert code == 0
    assert report["checks"][0]["details"]["cumulative"] == 11
