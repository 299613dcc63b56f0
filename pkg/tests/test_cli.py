import json
import subprocess
import sys


from blockingsets.cli import main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert parse_range("1..4") == [1, 2, 3, 4]
    assert parse_range("1,3,7..8") == [1, 3, 7, 8]


def test_bounds_plane(capsys):
    code, out, _ = run(capsys, "bounds", "--plane", "--n", "4", "--t", "1..4")
    rows = json.loads(out)
    assert code == 0
    assert [r["bound"] for r in rows[:2]] == [9, 14]
    marked = [r["t"] for r in rows if r["equality_case"]]
    assert marked == [1, 2, 4]


def test_bounds_other_kinds(capsys):
    assert json.loads(run(capsys, "bounds", "--semiarc", "--n", "4", "--s", "1")[1])[0]["bound"] == 9
    rows = json.loads(run(capsys, "bounds", "--symmetric-design", "--v", "21", "--k", "5", "--lambda", "1")[1])
    assert rows[0]["bound"] == 9
    code, out, _ = run(capsys, "bounds", "--plane", "--n", "3", "--t", "2", "--format", "csv")
    assert code == 0 and out.splitlines()[0].startswith("n,t,bound")
    code, out, _ = run(capsys, "bounds", "--hyperplane", "--dim", "3", "--q", "3", "--t", "1", "--format", "pretty")
    assert code == 0 and "10" in out


def test_construct_and_verify(capsys, tmp_path):
    out_file = tmp_path / "b.json"
    code, out, _ = run(capsys, "construct", "hermitian-tfold", "--q", "4", "--t", "2", "--out", str(out_file))
    rep = json.loads(out)
    assert code == 0
    assert (rep["size"], rep["minimal"], rep["slack"]) == (12, True, 2.0)
    code, out, _ = run(capsys, "verify", "--in", str(out_file), "--t", "2")
    assert code == 0 and json.loads(out)["size"] == 12

    code, out, _ = run(capsys, "construct", "pavese", "--q", "9")
    assert code == 0 and json.loads(out)["size"] == 36
    code, out, _ = run(capsys, "construct", "plane-minus-point", "--q", "3")
    rep = json.loads(out)
    assert code == 0 and rep["size"] == 12 and rep["slack"] == 0 and rep["equality_case"] == "PlaneMinusPoint"


def test_verify_exit_codes(capsys, tmp_path):
    bc = tmp_path / "bc.json"
    run(capsys, "construct", "baer-complement", "--q", "4", "--out", str(bc))
    code, out, _ = run(capsys, "verify", "--in", str(bc), "--t", "2")
    assert code == 0 and json.loads(out)["equality_case"] == "BaerComplement"
    h = tmp_path / "h.json"
    run(capsys, "construct", "hermitian-curve", "--q", "4", "--out", str(h))
    code, out, _ = run(capsys, "verify", "--in", str(h), "--t", "2")
    assert code == 1 and json.loads(out)["blocking"] is False
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify", "--in", str(bad), "--t", "1")[0] == 2


def test_construct_usage_errors(capsys):
    assert run(capsys, "construct", "pavese", "--q", "5")[0] == 2
    assert run(capsys, "construct", "nonsense", "--q", "4")[0] == 2
    assert run(capsys, "construct", "hermitian-tfold", "--q", "4")[0] == 2
    assert run(capsys, "construct", "hermitian-curve", "--q", "256")[0] == 2
    assert run(capsys)[0] == 2


def test_design_check(capsys, tmp_path):
    code, out, _ = run(capsys, "design-check", "--pg", "2", "2", "1", "--mode", "exhaustive")
    rep = json.loads(out)
    assert code == 0 and rep["pairs"] == 16384 and rep["violations"] == 0
    assert rep["regularity_failures"] == 0
    code, out, _ = run(capsys, "design-check", "--pg", "2", "3", "1", "--mode", "random", "10000")
    assert code == 0 and json.loads(out)["violations"] == 0
    bad = tmp_path / "nc.json"
    bad.write_text(json.dumps({"v": 4, "blocks": [[0, 1, 2], [0, 1, 3]]}))
    assert run(capsys, "design-check", "--in", str(bad), "--mode", "random", "10")[0] == 2


def test_search(capsys):
    code, out, err = run(capsys, "search", "--pg", "2", "2", "--t", "1", "--mode", "exhaustive", "--threads", "1")
    assert code == 0 and json.loads(out)["best_size"] == 3 and "part" in err
    code, out, _ = run(capsys, "search", "--pg", "2", "3", "--t", "2", "--mode", "exhaustive", "--threads", "1")
    assert json.loads(out)["best_size"] == 9


def test_search_output_is_byte_identical(capsys):
    args = ["search", "--pg", "2", "5", "--t", "2", "--mode", "heuristic", "--seed", "7", "--budget", "1000"]
    a = run(capsys, *args, "--threads", "1")[1]
    b = run(capsys, *args, "--threads", "2")[1]
    assert a == b


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "blockingsets.cli", "bounds", "--plane", "--n", "9", "--t", "6"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)[0]["bound"] == 78
