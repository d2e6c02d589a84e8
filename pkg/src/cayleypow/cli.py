"""``cayleypow`` command line: powers, k-step Fibonacci, suites, Bernstein, bench.

Exit codes: 0 success, 1 identity failure or strategy disagreement, 2 usage
or input error. ``--json`` switches to line-delimited JSON; ``--report-dir``
additionally writes JSONL/CSV files and a PNG figure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .exactnum import format_rational
from .matpower import Matrix, char_coeffs, pow_binary, thm2_coeffs
from .report import FAIL, render_value
from .suites import DEFAULT_SEED, SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    matrix: str | None = None
    inline: str | None = None
    n: int | None = None
    k: int | None = None
    entry: tuple[int, int] | None = None
    suite: str = "all"
    seed: int = DEFAULT_SEED
    trials: int | None = None
    nmax: int | None = None
    thue_bound: int = 50
    reps: int = 3
    check: bool = False
    sweep: bool = False
    json: bool = False
    report_dir: Path | None = None


def _int(text: str) -> int:
    """Decimal or 0x-prefixed integer."""
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _entry(text: str) -> tuple[int, int]:
    try:
        i, j = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected i,j, got {text!r}") from None
    return i, j


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cayleypow", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def output_flags(p):
        p.add_argument("--json", action="store_true", help="line-delimited JSON output")
        p.add_argument("--report-dir", type=Path, help="also write JSONL, CSV and a PNG figure here")

    p = sub.add_parser("power", help="A^n via the characteristic recursion")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrix", metavar="FILE", help='JSON {"k": .., "entries": [[..]]}')
    src.add_argument("--inline", metavar="STR", help='rows split by ";", entries by ","')
    p.add_argument("-n", "--power", dest="n", type=_int, required=True)
    p.add_argument("--entry", type=_entry, metavar="i,j", help="print only this 1-based entry")
    output_flags(p)

    p = sub.add_parser("fib", help="k-step Fibonacci numbers F_k(0..n)")
    p.add_argument("-k", type=_int, required=True)
    p.add_argument("-n", "--power", dest="n", type=_int, required=True)
    p.add_argument("--check", action="store_true", help="compare against the multinomial formula")
    output_flags(p)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("--suite", default="all", help=f"one of: all, {', '.join(SUITES)}")
    p.add_argument("--seed", type=_int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=_int)
    p.add_argument("--nmax", type=_int, help="Bernstein scan limit")
    output_flags(p)

    p = sub.add_parser("bench", help="time naive, binary and recurrence powers")
    p.add_argument("-k", type=_int, default=3)
    p.add_argument("--nmax", type=_int, default=200)
    p.add_argument("--reps", type=_int, default=3)
    p.add_argument("--seed", type=_int, default=DEFAULT_SEED)
    p.add_argument("--sweep", action="store_true", help="time a grid of n up to nmax")
    output_flags(p)

    p = sub.add_parser("bernstein", help="zeros of f(n) and the linked Thue solutions")
    p.add_argument("--nmax", type=_int, default=100)
    p.add_argument("--thue-bound", type=_int, default=50)
    output_flags(p)
    return parser


def parse_config(argv: Sequence[str] | None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(**vars(ns))


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

def _emit_json(rows, out):
    for row in rows:
        out.write(json.dumps(row, sort_keys=False, separators=(",", ":")) + "\n")


def _table(header: Sequence[str], rows: Sequence[Sequence[str]], out):
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out.write(fmt.format(*header).rstrip() + "\n")
    out.write("  ".join("-" * w for w in widths) + "\n")
    for r in rows:
        out.write(fmt.format(*map(str, r)).rstrip() + "\n")


def _write_files(report_dir: Path, stem: str, rows: list[dict]) -> None:
    report_dir.mkdir(parents=True, exist_ok=True)
    with open(report_dir / f"{stem}.jsonl", "w") as fh:
        _emit_json(rows, fh)
    if rows:
        with open(report_dir / f"{stem}.csv", "w", newline="") as fh:
            fields = list(dict.fromkeys(k for row in rows for k in row))
            writer = csv.DictWriter(fh, fieldnames=fields)
            writer.writeheader()
            for row in rows:
                writer.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in row.items()})


def _load_matrix(cfg: RunConfig) -> Matrix:
    try:
        if cfg.inline is not None:
            return Matrix.parse_inline(cfg.inline)
        text = Path(cfg.matrix).read_text()
        try:
            return Matrix.from_json(text)
        except json.JSONDecodeError:
            return Matrix.parse_inline(text)
    except OSError as exc:
        raise UsageError(f"cannot read matrix: {exc}") from None
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed matrix: {exc}") from None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_power(cfg: RunConfig, out) -> int:
    A = _load_matrix(cfg)
    n = cfg.n
    if n < 0:
        raise UsageError("n must be nonnegative")
    if cfg.entry is not None:
        i, j = cfg.entry
        if not (1 <= i <= A.k and 1 <= j <= A.k):
            raise UsageError(f"entry {i},{j} outside a {A.k}x{A.k} matrix")
    if n >= A.k:
        cc = char_coeffs(A)
        dec = thm2_coeffs(cc, n)
        result = dec.reconstruct(A)
        method, b = "closed-form", [format_rational(x) for x in dec.b]
        charpoly = [format_rational(x) for x in cc.s]
    else:
        result = pow_binary(A, n)
        method, b, charpoly = "binary-fallback", None, None
    row = {"k": A.k, "n": n, "method": method, "s": charpoly, "b": b, "matrix": result.to_json_obj()["entries"]}
    if cfg.entry is not None:
        row["entry"] = {"i": cfg.entry[0], "j": cfg.entry[1], "value": format_rational(result.entry(*cfg.entry))}
    if cfg.json:
        _emit_json([row], out)
    else:
        out.write(f"k={A.k} n={n} method={method}\n")
        if method == "binary-fallback":
            out.write(f"n < k: closed form needs n >= {A.k}, used square-and-multiply\n")
        else:
            out.write("s_1..s_k = " + " ".join(charpoly) + "\n")
            out.write("b_0..b_(k-1) = " + " ".join(b) + "\n")
        if cfg.entry is not None:
            out.write(f"A^{n}[{cfg.entry[0]},{cfg.entry[1]}] = {row['entry']['value']}\n")
        else:
            out.write(f"A^{n} = {render_value(result)}\n")
    if cfg.report_dir:
        _write_files(cfg.report_dir, "power", [row])
    return EXIT_OK


def cmd_fib(cfg: RunConfig, out) -> int:
    from .symfun import gen_fib, gen_fib_formula

    if cfg.k < 1:
        raise UsageError("k must be at least 1")
    if cfg.n < 0:
        raise UsageError("n must be nonnegative")
    seq = gen_fib(cfg.k, cfg.n)
    status = None
    if cfg.check:
        bad = [m for m, v in enumerate(seq) if gen_fib_formula(cfg.k, m) != v]
        status = "fail" if bad else "pass"
    row = {"k": cfg.k, "n": cfg.n, "values": [str(v) for v in seq], "check": status}
    if cfg.json:
        _emit_json([row], out)
    else:
        out.write(" ".join(map(str, seq)) + "\n")
        if status:
            out.write(f"check against multinomial formula: {status}\n")
    if cfg.report_dir:
        _write_files(cfg.report_dir, "fib", [row])
    return EXIT_FAIL if status == "fail" else EXIT_OK


def cmd_verify(cfg: RunConfig, out) -> int:
    if cfg.trials is not None and cfg.trials < 1:
        raise UsageError("trials must be positive")
    try:
        reports = run_suites(cfg.suite, cfg.seed, cfg.trials, cfg.nmax)
    except KeyError:
        raise UsageError(f"unknown suite {cfg.suite!r}; choose from all, {', '.join(SUITES)}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [r.to_dict() for r in reports]
    if cfg.json:
        _emit_json(rows, out)
    else:
        _table(
            ["id", "params", "status", "note"],
            [[r.id, json.dumps(r.params, sort_keys=True), r.status, r.note] for r in reports],
            out,
        )
        counts = Counter(r.status for r in reports)
        out.write(", ".join(f"{k}: {v}" for k, v in sorted(counts.items())) + f" (seed {cfg.seed:#x})\n")
    if cfg.report_dir:
        from .figures import verify_figure

        _write_files(cfg.report_dir, "verify", rows)
        verify_figure(reports, cfg.report_dir / "verify.png")
    return EXIT_FAIL if any(r.status == FAIL for r in reports) else EXIT_OK


def cmd_bench(cfg: RunConfig, out) -> int:
    from .bench import StrategyDisagreement, run_bench

    try:
        records = run_bench(cfg.k, cfg.nmax, cfg.reps, cfg.seed, sweep=cfg.sweep)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except StrategyDisagreement as exc:
        sys.stderr.write(str(exc) + "\n")
        return EXIT_FAIL
    rows = [r.as_dict() for r in records]
    if cfg.json:
        _emit_json(rows, out)
    else:
        out.write(f"all strategies agreed exactly on 20 seeded cases and every timed case (seed {cfg.seed:#x})\n")
        _table(
            ["strategy", "k", "n", "ms", "mults"],
            [[r.strategy, r.k, r.n, f"{r.seconds * 1e3:.3f}", r.mults] for r in records],
            out,
        )
    if cfg.report_dir:
        from .figures import bench_figure

        _write_files(cfg.report_dir, "bench", rows)
        bench_figure(records, cfg.report_dir / "bench.png")
    return EXIT_OK


def cmd_bernstein(cfg: RunConfig, out) -> int:
    from . import identities as ids

    if cfg.nmax < 5:
        raise UsageError("nmax must be at least 5")
    if cfg.thue_bound < 1:
        raise UsageError("thue bound must be at least 1")
    state = ids.bernstein_f(cfg.nmax)
    found = sorted(ids.thue_search(cfg.thue_bound))
    link = ids.thue_link_check(cfg.nmax, cfg.thue_bound, state)
    links = []
    for z in state.zeros:
        n = z + 2
        if n > cfg.nmax:
            continue
        x, y = ids.linked_pair(state, z)
        links.append({"zero": z, "n": n, "f(n-1)": state.value(n - 1), "f(n-3)": state.value(n - 3),
                      "pair": [x, y], "F(pair)": ids.thue_form(x, y)})
    rows = [
        {"kind": "zeros", "nmax": cfg.nmax, "values": state.zeros},
        {"kind": "thue", "bound": cfg.thue_bound, "values": [list(p) for p in found]},
    ] + [dict(kind="link", **l) for l in links] + [dict(kind="report", **link.to_dict())]
    if cfg.json:
        _emit_json(rows, out)
    else:
        out.write(f"zeros of f in [0, {cfg.nmax}]: {' '.join(map(str, state.zeros))}\n")
        out.write(f"solutions of x^3+y^3-xy^2=1 with |x|,|y| <= {cfg.thue_bound}: "
                  + " ".join(f"({x},{y})" for x, y in found) + "\n")
        if links:
            _table(
                ["zero", "n", "f(n-1)", "f(n-3)", "pair", "F(pair)"],
                [[l["zero"], l["n"], l["f(n-1)"], l["f(n-3)"], f"({l['pair'][0]},{l['pair'][1]})", l["F(pair)"]]
                 for l in links],
                out,
            )
        out.write(f"linkage check: {link.status}\n")
    if cfg.report_dir:
        from .figures import bernstein_figure

        _write_files(cfg.report_dir, "bernstein", rows)
        bernstein_figure(state, cfg.report_dir / "bernstein.png")
    return EXIT_FAIL if link.status == FAIL else EXIT_OK


COMMANDS = {
    "power": cmd_power,
    "fib": cmd_fib,
    "verify": cmd_verify,
    "bench": cmd_bench,
    "bernstein": cmd_bernstein,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[cfg.subcommand](cfg, out)
    except UsageError as exc:
        sys.stderr.write(f"cayleypow {cfg.subcommand}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
