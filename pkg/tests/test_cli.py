import json
from pathlib import Path

import pytest

from lderlab import catalog as cat
from lderlab.cli import main
from lderlab.io import dump_algebra

GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "lder_mat2_order3_all.json": ["lder", "@mat2", "--order", "3", "--arrangement", "all"],
    "lder_dorofeev_order4_left.json": ["lder", "@dorofeev", "--order", "4", "--arrangement", "left"],
    "lder_heisenberg_f.txt": ["lder", "@heisenberg", "--order", "3", "--arrangement", "((xx)x)", "--format", "text"],
    "analyze_heisenberg.json": ["analyze", "@heisenberg", "--max-order", "3"],
    "analyze_dorofeev.txt": ["analyze", "@dorofeev", "--max-order", "4", "--format", "text"],
    "analyze_D4.json": ["analyze", "@D4"],
    "verify_ord_lemma.json": ["verify", "ord-lemma"],
    "verify_ncj.txt": ["verify", "ncj-thm", "--format", "text"],
}


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("golden", sorted(CASES))
def test_golden_output(golden, capsys):
    code, out, _ = run(CASES[golden], capsys)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_documented_dimensions(capsys):
    for argv, dim in ((["lder", "@mat2", "--order", "3", "--arrangement", "all"], 3),
                      (["lder", "@dorofeev", "--order", "4"], 25),
                      (["lder", "@sl2", "--order", "2"], 3)):
        code, out, _ = run(argv, capsys)
        assert code == 0 and json.loads(out)["result"]["dim"] == dim


def test_analyze_reports_flags_without_failing(capsys):
    code, out, _ = run(["analyze", "@dorofeev", "--max-order", "4"], capsys)
    report = json.loads(out)
    assert code == 0
    assert report["summary"]["fail"] == 0 and report["summary"]["flag"] == 2
    assert report["result"]["chains"]["right_power"]["dims"] == [5, 3, 1, 0]
    ids = {d["id"] for d in report["discrepancies"]}
    assert "dorofeev-right_nilpotency_index" in ids


def test_file_input_matches_catalog(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(dump_algebra(cat.zinbiel2()))
    _, from_file, _ = run(["lder", str(path), "--order", "2"], capsys)
    _, from_catalog, _ = run(["lder", "@zinbiel2", "--order", "2"], capsys)
    a, b = json.loads(from_file), json.loads(from_catalog)
    assert a["result"] == b["result"]


@pytest.mark.parametrize("argv", [
    ["analyze", "@nope"],
    ["analyze", "@m7", "--max-order", "9"],
    ["lder", "@heisenberg", "--order", "7"],
    ["lder", "@D4"],
    ["lder", "@heisenberg", "--arrangement", "(xx"],
    ["verify", "no-such-suite"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    assert out == ""
    assert err


def test_bad_document(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 1, "table": [[["0.5"]]]}')
    code, _, err = run(["analyze", str(path)], capsys)
    assert code == 2 and "table[0][0]" in err


def test_catalog_and_export(capsys):
    code, out, _ = run(["catalog"], capsys)
    assert code == 0 and "m7" in out.split() and "D5" in out.split()
    code, out, _ = run(["export", "@heisenberg"], capsys)
    assert code == 0 and json.loads(out)["name"] == "heisenberg"
