import io
import json

import pytest

from cayleypow import bench
from cayleypow.cli import main
from cayleypow.matpower import Matrix


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_power_fibonacci():
    code, text = run("power", "--inline", "1,1;1,0", "-n", "10")
    assert code == 0
    assert "b_0..b_(k-1) = 34 55" in text
    assert "[[89,55],[55,34]]" in text


def test_power_json_and_fallback():
    code, text = run("power", "--inline", "2,1;0,3", "-n", "0", "--json")
    row = json.loads(text)
    assert code == 0 and row["method"] == "binary-fallback" and row["b"] is None
    assert row["matrix"] == [["1", "0"], ["0", "1"]]
    _, text = run("power", "--inline", "2,1;0,3", "-n", "1")
    assert "square-and-multiply" in text


def test_power_entry_reads_complete_homogeneous(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(Matrix([[6, 1, 0], [-11, 0, 1], [6, 0, 0]]).to_json())
    code, text = run("power", "--matrix", str(path), "-n", "5", "--entry", "1,2")
    assert code == 0 and text.strip().endswith("= 301")  # h_4(1, 2, 3)


@pytest.mark.parametrize("argv", [
    ("power", "--inline", "1,2;3", "-n", "2"),
    ("power", "--inline", "1,x;0,1", "-n", "2"),
    ("power", "--matrix", "/nonexistent.json", "-n", "2"),
    ("power", "--inline", "1,1;1,0", "-n", "-1"),
    ("power", "--inline", "1,1;1,0", "-n", "3", "--entry", "3,1"),
    ("power", "-n", "3"),
])
def test_power_bad_input_exits_2(argv):
    assert run(*argv)[0] == 2


def test_malformed_matrix_file(tmp_path):
    path = tmp_path / "m.json"
    path.write_text('{"k": 3, "entries": [["1"]]}')
    assert run("power", "--matrix", str(path), "-n", "4")[0] == 2


def test_fib():
    assert run("fib", "-k", "3", "-n", "7")[1].split() == "1 1 2 4 7 13 24 44".split()
    assert run("fib", "-k", "1", "-n", "5")[1].split() == ["1"] * 6
    code, text = run("fib", "-k", "2", "-n", "6", "--check")
    assert code == 0 and "pass" in text
    assert run("fib", "-k", "0", "-n", "6")[0] == 2


def test_verify_bernstein_and_json_schema():
    code, text = run("verify", "--suite", "bernstein", "--nmax", "300", "--json")
    assert code == 0
    rows = [json.loads(line) for line in text.splitlines()]
    assert all(list(r) == ["id", "params", "status", "lhs", "rhs", "note", "seed"] for r in rows)
    zeros = next(r for r in rows if r["id"] == "bernstein-zeros")
    assert zeros["lhs"] == "3 12" and zeros["status"] == "pass"


def test_verify_is_deterministic():
    argv = ("verify", "--suite", "theorem1", "--trials", "3", "--seed", "7", "--json")
    first, second = run(*argv), run(*argv)
    assert first == second and first[0] == 0
    other = run("verify", "--suite", "theorem1", "--trials", "3", "--seed", "8", "--json")
    assert other[1] != first[1]


def test_verify_corollaries_has_adjudication_note():
    code, text = run("verify", "--suite", "corollaries", "--trials", "2")
    assert code == 0 and "residual 11" in text


def test_verify_errors():
    assert run("verify", "--suite", "nope")[0] == 2
    assert run("verify", "--trials", "0")[0] == 2
    assert run("verify", "--seed", "abc")[0] == 2


def test_bench_table_and_errors():
    code, text = run("bench", "-k", "2", "--nmax", "50", "--reps", "1")
    assert code == 0
    assert [line.split()[0] for line in text.splitlines()[3:]] == ["naive", "binary", "recurrence"]
    assert run("bench", "-k", "3", "--nmax", "2")[0] == 2
    assert run("bench", "-k", "9", "--nmax", "20")[0] == 2
    assert run("bench", "-k", "2", "--nmax", "20", "--reps", "0")[0] == 2


def test_bench_disagreement_exits_1(monkeypatch, capsys):
    def broken(A, n):
        M, c = bench.binary(A, n)
        return M.scale(2), c

    monkeypatch.setitem(bench.STRATEGIES, "broken", broken)
    code, text = run("bench", "-k", "2", "--nmax", "10", "--reps", "1")
    assert code == 1 and text == ""
    assert "strategies disagree" in capsys.readouterr().err


@pytest.mark.parametrize("nmax,zeros", [(100, "3 12"), (13, "3 12"), (5, "3")])
def test_bernstein_command(nmax, zeros):
    code, text = run("bernstein", "--nmax", str(nmax), "--thue-bound", "50")
    assert code == 0
    assert text.splitlines()[0].endswith(f": {zeros}")
    assert "(-1,1) (0,1) (1,0) (1,1) (4,-3)" in text


def test_bernstein_bad_args():
    assert run("bernstein", "--nmax", "4")[0] == 2
    assert run("bernstein", "--thue-bound", "0")[0] == 2


def test_report_dir_writes_files_and_figures(tmp_path):
    for argv, stem in [
        (("verify", "--suite", "corollaries", "--trials", "1"), "verify"),
        (("bench", "-k", "2", "--nmax", "30", "--reps", "1", "--sweep"), "bench"),
        (("bernstein", "--nmax", "60"), "bernstein"),
        (("power", "--inline", "1,1;1,0", "-n", "4"), "power"),
    ]:
        assert run(*argv, "--report-dir", str(tmp_path))[0] == 0
        assert (tmp_path / f"{stem}.jsonl").stat().st_size > 0
        assert (tmp_path / f"{stem}.csv").read_text().count("\n") >= 2
    for stem in ("verify", "bench", "bernstein"):
        assert (tmp_path / f"{stem}.png").read_bytes()[:4] == b"\x89PNG"
