"""Text instance files and JSON result reports.

Instance files are line oriented::

    geomcut v1
    mode disk
    n 3
    terminals 0 2
    disk 0.0 0.0 1.0
    disk 1.5 0.0 1.0
    disk 3.0 0.0 1.0

``mode`` is one of the graph class names or ``barrier``; unit classes need
``unit <size>``; barrier files give ``strip <leftX> <rightX>`` instead of
``terminals``. ``rect`` lines list ``xlo ylo xhi yhi``. An optional
``seed <S>`` records the generator seed. ``#`` starts a comment. Reals are
written with Python's shortest round-trip representation.
"""
from __future__ import annotations

import json
import math
from typing import List, Optional, Union

from .barrier import BarrierInstance
from .geometry import Disk, GraphClass, Instance, Rect

HEADER = "geomcut v1"
MODES = [c.value for c in GraphClass] + ["barrier"]

AnyInstance = Union[Instance, BarrierInstance]


class FormatError(ValueError):
    """Malformed instance or report file."""


def _num(x: float) -> str:
    return repr(float(x))


def _shape_line(shape) -> str:
    if isinstance(shape, Disk):
        return f"disk {_num(shape.x)} {_num(shape.y)} {_num(shape.r)}"
    return f"rect {_num(shape.xlo)} {_num(shape.ylo)} {_num(shape.xhi)} {_num(shape.yhi)}"


def dumps_instance(inst: AnyInstance) -> str:
    lines = [HEADER]
    if isinstance(inst, BarrierInstance):
        lines.append("mode barrier")
        if inst.unit is not None:
            lines.append(f"unit {_num(inst.unit)}")
        lines.append(f"n {len(inst.shapes)}")
        lines.append(f"strip {_num(inst.left_x)} {_num(inst.right_x)}")
    else:
        lines.append(f"mode {inst.graph_class.value}")
        if inst.unit is not None:
            lines.append(f"unit {_num(inst.unit)}")
        lines.append(f"n {inst.n}")
        lines.append(f"terminals {inst.s} {inst.t}")
    if inst.seed is not None:
        lines.append(f"seed {inst.seed}")
    lines.extend(_shape_line(sh) for sh in inst.shapes)
    return "\n".join(lines) + "\n"


def _real(tok: str, lineno: int) -> float:
    try:
        val = float(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: expected a real number, got {tok!r}") from None
    if not math.isfinite(val):
        raise FormatError(f"line {lineno}: non-finite number {tok!r}")
    return val


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: expected an integer, got {tok!r}") from None


def loads_instance(text: str) -> AnyInstance:
    mode = unit = n = terminals = strip = seed = None
    shapes: List = []
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not seen_header:
            if line != HEADER:
                raise FormatError(f"line {lineno}: expected header {HEADER!r}, got {line!r}")
            seen_header = True
            continue
        tok = line.split()
        key, args = tok[0], tok[1:]

        def arity(k):
            if len(args) != k:
                raise FormatError(f"line {lineno}: '{key}' takes {k} argument(s), got {len(args)}")

        def once(current):
            if current is not None:
                raise FormatError(f"line {lineno}: duplicate '{key}' directive")

        if key == "mode":
            arity(1)
            once(mode)
            if args[0] not in MODES:
                raise FormatError(f"line {lineno}: unknown mode {args[0]!r}")
            mode = args[0]
        elif key == "unit":
            arity(1)
            once(unit)
            unit = _real(args[0], lineno)
        elif key == "n":
            arity(1)
            once(n)
            n = _int(args[0], lineno)
            if n < 0:
                raise FormatError(f"line {lineno}: negative shape count")
        elif key == "terminals":
            arity(2)
            once(terminals)
            terminals = (_int(args[0], lineno), _int(args[1], lineno))
        elif key == "strip":
            arity(2)
            once(strip)
            strip = (_real(args[0], lineno), _real(args[1], lineno))
        elif key == "seed":
            arity(1)
            once(seed)
            seed = _int(args[0], lineno)
            if seed < 0:
                raise FormatError(f"line {lineno}: seed must be unsigned")
        elif key == "disk":
            arity(3)
            x, y, r = (_real(a, lineno) for a in args)
            try:
                shapes.append(Disk(x, y, r))
            except ValueError as exc:
                raise FormatError(f"line {lineno}: {exc}") from None
        elif key == "rect":
            arity(4)
            xlo, ylo, xhi, yhi = (_real(a, lineno) for a in args)
            try:
                shapes.append(Rect(xlo, xhi, ylo, yhi))
            except ValueError as exc:
                raise FormatError(f"line {lineno}: {exc}") from None
        else:
            raise FormatError(f"line {lineno}: unknown directive {key!r}")

    if not seen_header:
        raise FormatError("empty file: missing header")
    if mode is None:
        raise FormatError("missing 'mode' directive")
    if n is None:
        raise FormatError("missing 'n' directive")
    if len(shapes) != n:
        raise FormatError(f"'n {n}' but {len(shapes)} shape lines")
    kinds = {type(sh) for sh in shapes}
    if len(kinds) > 1:
        raise FormatError("disk and rect lines cannot be mixed")
    try:
        if mode == "barrier":
            if strip is None:
                raise FormatError("barrier mode needs a 'strip' directive")
            if terminals is not None:
                raise FormatError("barrier mode takes 'strip', not 'terminals'")
            rects = kinds == {Rect}
            if unit is not None:
                cls = GraphClass.UNIT_SQUARE if rects else GraphClass.UNIT_DISK
            else:
                cls = GraphClass.RECT if rects else GraphClass.DISK
            b = BarrierInstance(strip[0], strip[1], tuple(shapes), cls, unit=unit, seed=seed)
            b.to_instance()  # validates shapes against the class
            return b
        if terminals is None:
            raise FormatError(f"mode {mode} needs a 'terminals' directive")
        if strip is not None:
            raise FormatError("'strip' is only valid in barrier mode")
        cls = GraphClass(mode)
        if not cls.is_unit and unit is not None:
            raise FormatError(f"'unit' is not valid for mode {mode}")
        return Instance(cls, tuple(shapes), terminals[0], terminals[1], unit=unit, seed=seed)
    except FormatError:
        raise
    except (ValueError, IndexError) as exc:
        raise FormatError(str(exc)) from exc


def read_instance(path) -> AnyInstance:
    with open(path, encoding="utf-8") as fh:
        return loads_instance(fh.read())


def write_instance(path, inst: AnyInstance) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_instance(inst))


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

REPORT_FORMAT = "geomcut-report v1"


def make_report(inst: AnyInstance, result, oracle: str, wall_ms: Optional[float] = None) -> dict:
    if isinstance(inst, BarrierInstance):
        mode, n = "barrier", len(inst.shapes)
        s, t = n, n + 1
    else:
        mode, n, s, t = inst.graph_class.value, inst.n, inst.s, inst.t
    report = {
        "format": REPORT_FORMAT,
        "mode": mode,
        "n": n,
        "s": s,
        "t": t,
        "seed": inst.seed,
        "oracle": oracle,
        "value": result.value,
        "cut": list(result.cut),
        "paths": [list(p) for p in result.paths],
        "phases": result.phases,
        "lambda_t": list(result.trace),
        "oracle_stats": result.stats.as_dict(),
    }
    if isinstance(inst, BarrierInstance):
        report["strip"] = [inst.left_x, inst.right_x]
    if wall_ms is not None:
        report["wall_time_ms"] = round(wall_ms, 3)
    return report


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def loads_report(text: str) -> dict:
    try:
        report = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"report is not valid JSON: {exc}") from None
    if not isinstance(report, dict) or report.get("format") != REPORT_FORMAT:
        raise FormatError(f"not a {REPORT_FORMAT!r} document")
    for key in ("value", "cut", "paths"):
        if key not in report:
            raise FormatError(f"report lacks {key!r}")
    return report
