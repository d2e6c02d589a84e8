"""Matplotlib figures written next to the delimited CLI output."""

from __future__ import annotations

from collections import Counter, defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STATUS_COLORS = {"pass": "#4c9a5f", "fail": "#c44e52", "skipped-precondition": "#999999"}
STRATEGY_MARKERS = {"naive": "o", "binary": "s", "recurrence": "^"}


def _style():
    plt.rcParams.update({
        "font.size": 9,
        "axes.labelsize": 9,
        "legend.fontsize": 8,
        "axes.spines.top": False,
        "axes.spines.right": False,
        "figure.dpi": 110,
    })


def bench_figure(records, path: Path) -> Path:
    """Wall time and multiplication count versus n, one line per strategy."""
    _style()
    by_strategy = defaultdict(list)
    for r in records:
        by_strategy[r.strategy].append(r)
    fig, (ax_t, ax_m) = plt.subplots(1, 2, figsize=(8, 3.2))
    for name, recs in by_strategy.items():
        recs = sorted(recs, key=lambda r: r.n)
        ns = [r.n for r in recs]
        marker = STRATEGY_MARKERS.get(name, "x")
        ax_t.plot(ns, [r.seconds * 1e3 for r in recs], marker=marker, label=name)
        ax_m.plot(ns, [r.mults for r in recs], marker=marker, label=name)
    k = records[0].k if records else "?"
    ax_t.set(xlabel="n", ylabel="best wall time [ms]", title=f"A^n, k={k}")
    ax_m.set(xlabel="n", ylabel="scalar multiplications", title="operation count")
    for ax in (ax_t, ax_m):
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def bernstein_figure(state, path: Path, show: int = 60) -> Path:
    """f(n) for small n with its zeros marked."""
    _style()
    top = min(len(state.f) - 1, show)
    ns = list(range(top + 1))
    vals = [state.f[n] for n in ns]
    fig, ax = plt.subplots(figsize=(6, 3))
    ax.axhline(0, color="black", lw=0.6)
    ax.plot(ns, vals, color="#4c72b0", lw=1, marker=".", ms=4)
    zeros = [z for z in state.zeros if z <= top]
    ax.plot(zeros, [0] * len(zeros), "o", mfc="none", mec="#c44e52", ms=9, label="zeros")
    for z in zeros:
        ax.annotate(f"n={z}", (z, 0), textcoords="offset points", xytext=(4, 8), fontsize=8)
    ax.set_yscale("symlog", linthresh=10)
    ax.set(xlabel="n", ylabel="f(n)", title="f(n) = sum_j (-1)^j C(n-2j, j)")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def verify_figure(reports, path: Path) -> Path:
    """Horizontal stacked bars of report status per identity id."""
    _style()
    counts: dict[str, Counter] = defaultdict(Counter)
    for r in reports:
        counts[r.id][r.status] += 1
    names = sorted(counts)
    fig, ax = plt.subplots(figsize=(6, 0.25 * len(names) + 1))
    left = [0] * len(names)
    for status, color in STATUS_COLORS.items():
        widths = [counts[n][status] for n in names]
        ax.barh(names, widths, left=left, color=color, label=status)
        left = [a + b for a, b in zip(left, widths)]
    ax.set_xscale("symlog", linthresh=1)
    ax.set_xlabel("reports")
    ax.invert_yaxis()
    ax.legend(frameon=False, loc="lower right")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
