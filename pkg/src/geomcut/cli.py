"""Command-line interface: ``geomcut {solve,gen,verify,bench}``.

Exit codes: 0 success, 2 unreadable or malformed input, 3 invariant
violation (failed audit or internal consistency check).
"""
from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time
from typing import List, Optional

from .audit import audit
from .barrier import BarrierInstance, generate_barrier, resilience
from .core import Engine, InvariantViolation
from .fileformat import (MODES, FormatError, dumps_instance, dumps_report, loads_report,
                         make_report, read_instance)
from .geometry import GraphClass, Rect, generate, random_instance, region_for_degree

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVARIANT = 3


class UsageError(Exception):
    pass


def _floats(text: str, count: int, what: str) -> List[float]:
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"{what}: expected {count} comma-separated numbers, got {text!r}") from None
    if len(vals) != count:
        raise UsageError(f"{what}: expected {count} comma-separated numbers, got {text!r}")
    return vals


def _ints(text: str, what: str) -> List[int]:
    items = [x for x in text.replace(",", " ").split() if x]
    if not items:
        raise UsageError(f"{what}: empty list")
    try:
        return [int(x) for x in items]
    except ValueError:
        raise UsageError(f"{what}: expected integers, got {text!r}") from None


def _solve(inst, oracle):
    if isinstance(inst, BarrierInstance):
        return resilience(inst, oracle)
    return Engine(inst, oracle).run()


def _as_instance(inst):
    return inst.to_instance() if isinstance(inst, BarrierInstance) else inst


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_solve(args) -> int:
    try:
        inst = read_instance(args.input)
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    start = time.perf_counter()
    try:
        result = _solve(inst, args.oracle)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    wall = (time.perf_counter() - start) * 1000.0 if args.timing else None
    report = make_report(inst, result, args.oracle, wall)
    if args.check:
        problems = audit(_as_instance(inst), result.value, result.cut, result.paths)
        if problems:
            for p in problems:
                print(f"invariant violation: {p}", file=sys.stderr)
            return EXIT_INVARIANT
    _write(args.output, dumps_report(report))
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        if args.n < (0 if args.mode == "barrier" else 2):
            raise UsageError(f"--n {args.n}: need at least 2 shapes")
        radii = tuple(_floats(args.radii, 2, "--radii")) if args.radii else (0.5, 1.5)
        if args.mode == "barrier":
            kind = args.shape
            if args.unit is not None:
                cls = GraphClass.UNIT_SQUARE if kind == "rect" else GraphClass.UNIT_DISK
            else:
                cls = GraphClass.RECT if kind == "rect" else GraphClass.DISK
            width, height = 20.0, 40.0
            if args.region:
                xlo, xhi, ylo, yhi = _floats(args.region, 4, "--region")
                width, height = xhi - xlo, yhi - ylo
            inst = generate_barrier(cls, args.n, width, height, radii, args.seed, unit=args.unit)
        else:
            cls = GraphClass(args.mode)
            unit = (1.0 if args.unit is None else args.unit) if cls.is_unit else None
            if args.region:
                xlo, xhi, ylo, yhi = _floats(args.region, 4, "--region")
                region = Rect(xlo, xhi, ylo, yhi)
            else:
                size = unit if unit is not None else sum(radii) / 2
                region = region_for_degree(cls, args.n, size, args.degree)
            inst = generate(cls, args.n, region, radii, args.seed, unit=unit)
    except (UsageError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _write(args.out, dumps_instance(inst))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        inst = read_instance(args.input)
        with open(args.result, encoding="utf-8") as fh:
            report = loads_report(fh.read())
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    plain = _as_instance(inst)
    value, cut, paths = report["value"], report["cut"], report["paths"]
    if not (isinstance(value, int) and isinstance(cut, list) and isinstance(paths, list)
            and all(isinstance(p, list) for p in paths)):
        print("error: report fields have the wrong types", file=sys.stderr)
        return EXIT_PARSE
    problems = audit(plain, value, cut, paths, explicit=True)
    for p in problems:
        print(f"verify: {p}", file=sys.stderr)
    return EXIT_INVARIANT if problems else EXIT_OK


BENCH_COLUMNS = ["mode", "n", "seed", "value", "phases", "queries", "deletions", "millis"]


def bench_rows(mode: str, sizes: List[int], seeds: List[int], oracle: str = "geo",
               degree: float = 10.0) -> List[dict]:
    rows = []
    for n in sizes:
        for seed in seeds:
            if mode == "barrier":
                # strip width grows like sqrt(n) so the density stays fixed
                side = max(4.0, (n * 3.14159 * 4.0 / degree) ** 0.5)
                inst = generate_barrier(GraphClass.DISK, n, side, side, (0.5, 1.5), seed)
            else:
                inst = random_instance(GraphClass(mode), n, seed, degree)
            start = time.perf_counter()
            result = _solve(inst, oracle)
            millis = (time.perf_counter() - start) * 1000.0
            rows.append({"mode": mode, "n": n, "seed": seed, "value": result.value,
                         "phases": result.phases, "queries": result.stats.queries,
                         "deletions": result.stats.deletions, "millis": round(millis, 3)})
    return rows


def scaling_slope(rows: List[dict]) -> float:
    """Least-squares slope of log(median millis) against log(n)."""
    import math

    by_n = {}
    for r in rows:
        by_n.setdefault(r["n"], []).append(r["millis"])
    pts = [(math.log(n), math.log(max(statistics.median(v), 1e-9))) for n, v in sorted(by_n.items())]
    if len(pts) < 2:
        raise ValueError("need at least two sizes for a slope")
    mx = sum(p[0] for p in pts) / len(pts)
    my = sum(p[1] for p in pts) / len(pts)
    return sum((x - mx) * (y - my) for x, y in pts) / sum((x - mx) ** 2 for x, _ in pts)


def cmd_bench(args) -> int:
    try:
        sizes = _ints(args.sizes, "--sizes")
        seeds = _ints(args.seeds, "--seeds")
        if any(n < 2 for n in sizes):
            raise UsageError("--sizes: every size must be at least 2")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        rows = bench_rows(args.mode, sizes, seeds, args.oracle, args.degree)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    out = sys.stdout if args.csv in (None, "-") else open(args.csv, "w", newline="", encoding="utf-8")
    try:
        writer = csv.DictWriter(out, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    if len(set(sizes)) > 1:
        print(f"log-log slope of median millis vs n: {scaling_slope(rows):.3f}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geomcut", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="minimum s-t vertex cut of an instance file")
    p.add_argument("--input", required=True)
    p.add_argument("--oracle", choices=["geo", "brute"], default="geo")
    p.add_argument("--output", default=None, help="report path (default stdout)")
    p.add_argument("--check", action="store_true", help="audit paths and cut before writing")
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="write a random instance file")
    p.add_argument("--mode", required=True, choices=MODES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--region", default=None, help="xlo,xhi,ylo,yhi")
    p.add_argument("--radii", default=None, help="lo,hi (half-sides for squares and rectangles)")
    p.add_argument("--unit", type=float, default=None)
    p.add_argument("--degree", type=float, default=10.0,
                   help="target mean degree when --region is omitted")
    p.add_argument("--shape", choices=["disk", "rect"], default="disk", help="barrier shapes")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="audit a report against its instance")
    p.add_argument("--input", required=True)
    p.add_argument("--result", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time solves over sizes and seeds, write CSV")
    p.add_argument("--mode", required=True, choices=MODES)
    p.add_argument("--sizes", required=True, help="comma-separated sizes")
    p.add_argument("--seeds", default="1", help="comma-separated seeds")
    p.add_argument("--oracle", choices=["geo", "brute"], default="geo")
    p.add_argument("--degree", type=float, default=10.0)
    p.add_argument("--csv", default=None)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
