import json
import subprocess
import sys
from dataclasses import replace

from quartic_qseries.catalog import identity, parser, registry
from quartic_qseries.cli import main


def run(argv, capsys, catalog=None):
    code = main(argv, catalog=catalog)
    out, err = capsys.readouterr()
    return code, out, err


def test_list(capsys):
    code, out, _ = run(["--list"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == len(registry()) + 1
    assert any(line.startswith("thm-4u2") and "quartic and quadratic" in line for line in lines)


def test_list_subcommand(capsys):
    assert run(["list"], capsys)[1] == run(["--list"], capsys)[1]


def test_verify_thm_4u2(capsys):
    code, out, _ = run(["verify", "--id", "thm-4u2", "--mode", "exact", "--trials", "25",
                        "--seed", "7", "--nmax", "4", "--mmax", "4"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"] == {"pass": 625, "fail": 0, "resampled": doc["summary"]["resampled"]}
    rec = doc["records"][0]
    assert set(rec) >= {"id", "paper_anchor", "mode", "binding", "n", "m", "delta", "status",
                        "residual", "poles_resampled", "elapsed_ms"}
    assert rec["residual"] == "0" and rec["status"] == "pass"
    assert "seeds" in rec["binding"]
    assert doc["schema_version"] and doc["artifact_version"]


def test_numeric_residual_is_decimal_string(capsys):
    code, out, _ = run(["verify", "--id", "stanton-rr", "--trials", "1", "--seed", "0"], capsys)
    assert code == 0
    res = json.loads(out)["records"][0]["residual"]
    assert isinstance(res, str)
    float(res)


def test_unknown_id_suggests(capsys):
    code, _, err = run(["verify", "--id", "thm-4u5"], capsys)
    assert code == 2
    assert "thm-4u" in err


def test_empty_glob(capsys):
    code, out, err = run(["verify", "--id", "zzz-*"], capsys)
    assert code == 2 and out == "" and "matches no identity" in err


def test_incompatible_mode(capsys):
    assert run(["verify", "--id", "stanton-rr", "--mode", "exact"], capsys)[0] == 2
    assert run(["verify", "--id", "thm-4u2", "--mode", "elliptic"], capsys)[0] == 2


def test_bad_flags(capsys):
    assert run(["verify", "--id", "thm-4u2", "--trials", "0"], capsys)[0] == 2
    assert run(["verify", "--id", "stanton-rr", "--precision", "40"], capsys)[0] == 2
    assert run(["verify", "--id", "ell-1", "--p", "1.5"], capsys)[0] == 2
    assert run(["verify"], capsys)[0] == 2
    assert run([], capsys)[0] == 2


def test_sweep_requires_seed(capsys):
    assert run(["sweep", "--id", "thm-4u2"], capsys)[0] == 2


def test_env_precision(capsys, monkeypatch):
    monkeypatch.setenv("QSERIES_PRECISION", "80")
    code, out, _ = run(["verify", "--id", "qbd-limit", "--trials", "1"], capsys)
    assert code == 0 and json.loads(out)["config"]["precision"] == 80
    monkeypatch.setenv("QSERIES_PRECISION", "lots")
    assert run(["verify", "--id", "qbd-limit", "--trials", "1"], capsys)[0] == 2


def test_determinism_and_output_file(capsys, tmp_path):
    argv = ["sweep", "--id", "thm-4v*,cor-nuova", "--trials", "2", "--seed", "5"]
    first = tmp_path / "a.json"
    assert run(argv + ["--output", str(first)], capsys) == (0, "", "")
    code, out, _ = run(argv, capsys)
    assert code == 0 and out == first.read_text()
    blocks = json.loads(out)["aggregates"]
    assert [b["id"] for b in blocks] == ["thm-4v2", "thm-4v3", "thm-4v4", "cor-nuova"]


def test_text_format(capsys):
    code, out, _ = run(["verify", "--id", "cor-nuova", "--trials", "1", "--format", "text"], capsys)
    assert code == 0
    header, rule, *rows, total = out.splitlines()
    assert header.split()[:2] == ["id", "mode"]
    assert set(rule) <= {"-", " "}
    assert len(rows) == 5 and all(r.startswith("cor-nuova") for r in rows)
    assert total == "pass=5 fail=0 resampled=0"


def test_sweep_chu_48d(capsys):
    code, out, _ = run(["sweep", "--id", "cor-chu-48d", "--nmax", "5", "--seed", "3"], capsys)
    assert code == 0
    (block,) = json.loads(out)["aggregates"]
    assert block["instances"] == 25 * 6 and block["fail"] == 0


def test_sweep_ell_1(capsys):
    code, out, _ = run(["sweep", "--id", "ell-1", "--p", "0.05", "--mmax", "6", "--seed", "9",
                        "--trials", "3"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["aggregates"][0]["instances"] == 21 and doc["config"]["p"] == "0.05"


def test_corrupted_fixture_exits_1(capsys):
    good = identity("cor-nuova")
    bad = replace(good, rhs=parser()("{3/2}"))
    code, out, _ = run(["verify", "--id", "cor-nuova", "--trials", "1", "--mmax", "2"], capsys,
                       catalog=[bad])
    assert code == 1
    fails = json.loads(out)["aggregates"][0]["failures"]
    assert fails and fails[0]["detail"]["error"] == "Mismatch"
    assert fails[0]["detail"]["lhs"] != fails[0]["detail"]["rhs"]


def test_module_entry_point():
    cmd = [sys.executable, "-m", "quartic_qseries", "verify", "--id", "cor-*", "--seed", "1",
           "--trials", "1"]
    a = subprocess.run(cmd, capture_output=True, text=True, timeout=600)
    b = subprocess.run(cmd, capture_output=True, text=True, timeout=600)
    assert a.returncode == 0 and a.stdout == b.stdout
