import pytest

from cayleypow import bench
from cayleypow.matpower import Matrix, pow_binary


def test_strategies_agree_and_count():
    A = Matrix([[1, 2, 0], [-3, 1, 4], [2, 2, -1]])
    for n in (0, 1, 2, 3, 7, 40):
        results = bench.agree(A, n)
        assert all(m == pow_binary(A, n) for m in results.values())
    _, naive = bench.naive(A, 40)
    _, binary = bench.binary(A, 40)
    assert naive == 40 * 27 and binary < naive


def test_gate_runs_twenty_cases():
    assert bench.gate(3, 60) == 20


def test_table_has_one_row_per_strategy():
    records = bench.run_bench(2, 50, reps=1)
    assert [r.strategy for r in records] == ["naive", "binary", "recurrence"]
    assert all(r.n == 50 and r.k == 2 and r.seconds >= 0 for r in records)


def test_sweep_grid():
    pts = bench.sweep_points(3, 200)
    assert pts[0] == 3 and pts[-1] == 200 and pts == sorted(set(pts))


@pytest.mark.parametrize("k,nmax,reps", [(1, 10, 1), (9, 20, 1), (3, 2, 1), (3, 10, 0)])
def test_argument_validation(k, nmax, reps):
    with pytest.raises(ValueError):
        bench.run_bench(k, nmax, reps)


def test_disagreement_blocks_timing(monkeypatch):
    def broken(A, n):
        M, c = bench.binary(A, n)
        return M + Matrix.identity(A.k), c

    monkeypatch.setitem(bench.STRATEGIES, "broken", broken)
    with pytest.raises(bench.StrategyDisagreement) as exc:
        bench.run_bench(2, 10, reps=1)
    assert "broken" in str(exc.value)
