"""Timing of three ways to compute A^n, gated on exact agreement.

Strategies:

* ``naive``      n - 1 successive matrix products
* ``binary``     square-and-multiply
* ``recurrence`` characteristic coefficients, the order-k recursion a(m)
                 and reconstruction from I, A, ..., A^(k-1)

Multiplication counts are scalar multiplications: k^3 per matrix product,
k^2 per matrix scaling, plus the scalar work of the recursion.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from typing import Callable

from .matpower import Matrix, PowerDecomposition, char_coeffs, low_powers
from .suites import DEFAULT_SEED, rand_int_matrix, rng_for
from .symfun import a_seq


class StrategyDisagreement(RuntimeError):
    def __init__(self, k: int, n: int, results: dict[str, Matrix]):
        self.k, self.n, self.results = k, n, results
        lines = [f"strategies disagree for k={k}, n={n}:"]
        lines += [f"  {name}: {m!r}" for name, m in results.items()]
        super().__init__("\n".join(lines))


@dataclass(frozen=True)
class BenchRecord:
    strategy: str
    k: int
    n: int
    seconds: float
    mults: int

    def as_dict(self) -> dict:
        return asdict(self)


def naive(A: Matrix, n: int) -> tuple[Matrix, int]:
    result = Matrix.identity(A.k)
    count = 0
    for _ in range(n):
        result = result.matmul(A)
        count += A.k**3
    return result, count


def binary(A: Matrix, n: int) -> tuple[Matrix, int]:
    result = Matrix.identity(A.k)
    base = A
    count = 0
    while n:
        if n & 1:
            result = result.matmul(base)
            count += A.k**3
        n >>= 1
        if n:
            base = base.matmul(base)
            count += A.k**3
    return result, count


def recurrence(A: Matrix, n: int) -> tuple[Matrix, int]:
    k = A.k
    if n < k:
        return binary(A, n)
    cc = char_coeffs(A)
    count = 2 * k * k**3  # two products per Faddeev-LeVerrier step
    a = a_seq(cc.s, n)
    count += n * k
    signed = (1,) + cc.s
    b = tuple(sum((-1) ** m * signed[m] * a[n - j - m] for m in range(k - j)) for j in range(k))
    count += k * (k + 1) // 2
    powers = low_powers(A)
    count += (k - 2) * k**3 if k > 2 else 0
    result = PowerDecomposition(b, n).reconstruct(A, powers)
    count += k * k**2
    return result, count


STRATEGIES: dict[str, Callable[[Matrix, int], tuple[Matrix, int]]] = {
    "naive": naive,
    "binary": binary,
    "recurrence": recurrence,
}


def agree(A: Matrix, n: int) -> dict[str, Matrix]:
    """Run every strategy once; raise StrategyDisagreement on any mismatch."""
    results = {name: fn(A, n)[0] for name, fn in STRATEGIES.items()}
    first = next(iter(results.values()))
    if any(m != first for m in results.values()):
        raise StrategyDisagreement(A.k, n, results)
    return results


def gate(k: int, nmax: int, seed: int = DEFAULT_SEED, cases: int = 20) -> int:
    """Cross-check all strategies on ``cases`` seeded (A, n) pairs."""
    rng = rng_for(seed, f"bench-gate-k{k}")
    for _ in range(cases):
        A = rand_int_matrix(rng, k)
        agree(A, rng.randint(k, nmax))
    return cases


def time_case(A: Matrix, n: int, reps: int = 3) -> list[BenchRecord]:
    agree(A, n)
    records = []
    for name, fn in STRATEGIES.items():
        best = float("inf")
        count = 0
        for _ in range(reps):
            t0 = time.perf_counter()
            _, count = fn(A, n)
            best = min(best, time.perf_counter() - t0)
        records.append(BenchRecord(name, A.k, n, best, count))
    return records


def run_bench(k: int, nmax: int, reps: int = 3, seed: int = DEFAULT_SEED, sweep: bool = False) -> list[BenchRecord]:
    """Gate, then time every strategy at n = nmax (or on a sweep up to nmax)."""
    if not 2 <= k <= 8:
        raise ValueError("k must lie in [2, 8]")
    if nmax < k:
        raise ValueError("nmax must be at least k")
    if reps < 1:
        raise ValueError("reps must be at least 1")
    gate(k, nmax, seed)
    A = rand_int_matrix(rng_for(seed, f"bench-k{k}"), k)
    ns = sweep_points(k, nmax) if sweep else [nmax]
    records = []
    for n in ns:
        records.extend(time_case(A, n, reps))
    return records


def sweep_points(k: int, nmax: int, count: int = 8) -> list[int]:
    pts = {k, nmax}
    for i in range(1, count - 1):
        pts.add(round(k * (nmax / k) ** (i / (count - 1))))
    return sorted(p for p in pts if k <= p <= nmax)
