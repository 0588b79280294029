from __future__ import annotations

import csv
import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from queenarmy.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def block_file(tmp_path):
    path = tmp_path / "block.json"
    path.write_text(json.dumps({"n": 11, "queens": [[x, y] for x in (1, 2, 3) for y in (1, 2, 3)]}))
    return path


def test_construct_nine(capsys):
    code, out, _ = run(capsys, "construct", "--k", "9", "--n", "11")
    obj = json.loads(out)
    assert code == 0 and len(obj["queens"]) == 9 and obj["stats"]["covered"] == 89
    assert obj["stats"]["m_star"] == 10


def test_tables_row_18(capsys):
    code, out, _ = run(capsys, "tables", "--max-m", "20")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and next(r for r in rows if r["m"] == "18")["G"] == "28"


def test_tables_mstar(capsys):
    code, out, _ = run(capsys, "tables", "--max-m", "28", "--kind", "mstar")
    assert code == 0 and out.splitlines()[-1] == "28,18"


def test_render_ascii(capsys, block_file):
    code, out, _ = run(capsys, "render", str(block_file), "--format", "ascii")
    rows = out.splitlines()
    assert code == 0 and len(rows) == 11
    assert out.count("Q") == 9 and "#" in out and "." in out


def test_render_svg_to_file(capsys, block_file, tmp_path):
    target = tmp_path / "b.svg"
    code, _, _ = run(capsys, "render", str(block_file), "--format", "svg", "--cell-size", "10", "-o", str(target))
    assert code == 0 and ET.parse(target).getroot().get("width") == "110"


@pytest.mark.parametrize("k, n", [(1, 8), (7, 12), (9, 11), (28, 25), (13, 30)])
def test_construct_analyze_round_trip(capsys, tmp_path, k, n):
    _, out, _ = run(capsys, "construct", "--k", str(k), "--n", str(n))
    built = json.loads(out)
    path = tmp_path / "p.json"
    path.write_text(out)
    code, out, _ = run(capsys, "analyze", str(path), "--certificate", "--rings")
    report = json.loads(out)
    assert code == 0
    assert report["k"] == built["stats"]["k"] == k
    assert report["covered"] == built["stats"]["covered"]
    assert report["lines"] == built["stats"]["lines"]
    assert report["certificate"]["total_length"] >= report["certificate"]["n_times_M"]


def test_search(capsys):
    code, out, _ = run(capsys, "--threads", "2", "search", "--k", "1", "--n", "5")
    obj = json.loads(out)
    assert code == 0 and obj["optimum"] == 13 and obj["threads"] == 2


@pytest.mark.parametrize("suite", ["lemma2", "konig", "eq1"])
def test_verify_passes(capsys, suite):
    code, out, err = run(capsys, "verify", "--suite", suite, "--seed", "1")
    assert code == 0 and json.loads(out)["passed"] is True and "PASS" in err


@pytest.mark.parametrize(
    "argv, code",
    [
        (["construct", "--k", "9", "--n", "11", "--bogus"], 1),
        (["verify", "--suite", "nope"], 1),
        (["frobnicate"], 1),
        ([], 1),
        (["construct", "--k", "30", "--n", "5"], 2),
        (["tables", "--max-m", "1"], 2),
        (["search", "--k", "4", "--n", "8", "--budget", "100"], 3),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_bad_placement_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "analyze", str(bad))[0] == 2
    assert run(capsys, "analyze", str(tmp_path / "missing.json"))[0] == 2


def test_verify_violation_exit(capsys, monkeypatch):
    from queenarmy import cli
    from queenarmy.verify import Check

    monkeypatch.setattr(cli, "run_suite", lambda name, seed: [Check(name, "forced", False, "x")])
    code, out, err = run(capsys, "verify", "--suite", "formulas")
    assert code == 4 and json.loads(out)["passed"] is False and "FAIL" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "queenarmy", "construct", "--k", "1", "--n", "5"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["stats"]["covered"] == 13
