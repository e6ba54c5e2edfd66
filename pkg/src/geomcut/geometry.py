"""Shapes, adjacency predicates and random instance generation.

All shapes are closed, so touching shapes intersect. Predicates compare
squared distances in double precision without any epsilon.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Optional, Tuple, Union

import numpy as np


@dataclass(frozen=True)
class Disk:
    x: float
    y: float
    r: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.r)):
            raise ValueError(f"disk with non-finite value: {self}")
        if self.r < 0:
            raise ValueError(f"disk with negative radius: {self}")


@dataclass(frozen=True)
class Rect:
    """Closed axis-parallel rectangle ``[xlo, xhi] x [ylo, yhi]``."""

    xlo: float
    xhi: float
    ylo: float
    yhi: float

    def __post_init__(self):
        vals = (self.xlo, self.xhi, self.ylo, self.yhi)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError(f"rectangle with non-finite value: {self}")
        if self.xlo > self.xhi or self.ylo > self.yhi:
            raise ValueError(f"rectangle with inverted bounds: {self}")

    @property
    def cx(self) -> float:
        return 0.5 * (self.xlo + self.xhi)

    @property
    def cy(self) -> float:
        return 0.5 * (self.ylo + self.yhi)

    @classmethod
    def square(cls, cx: float, cy: float, half: float) -> "Rect":
        return cls(cx - half, cx + half, cy - half, cy + half)


@dataclass(frozen=True)
class VLine:
    """Vertical line ``x = const``; only used as a barrier terminal."""

    x: float

    def __post_init__(self):
        if not math.isfinite(self.x):
            raise ValueError(f"line with non-finite x: {self}")


Shape = Union[Disk, Rect, VLine]


class GraphClass(enum.Enum):
    UNIT_DISK = "unit-disk"
    DISK = "disk"
    TRANSMISSION = "transmission"
    UNIT_SQUARE = "unit-square"
    RECT = "rect"
    SQUARE_TRANSMISSION = "square-transmission"

    @property
    def directed(self) -> bool:
        return self in (GraphClass.TRANSMISSION, GraphClass.SQUARE_TRANSMISSION)

    @property
    def shape_type(self) -> type:
        if self in (GraphClass.UNIT_DISK, GraphClass.DISK, GraphClass.TRANSMISSION):
            return Disk
        return Rect

    @property
    def is_unit(self) -> bool:
        return self in (GraphClass.UNIT_DISK, GraphClass.UNIT_SQUARE)


class AdjacentTerminalsError(ValueError):
    """Raised when s and t are adjacent, so no vertex cut exists."""


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

def disks_intersect(a: Disk, b: Disk) -> bool:
    dx = a.x - b.x
    dy = a.y - b.y
    rs = a.r + b.r
    return dx * dx + dy * dy <= rs * rs


def contains_center(a: Disk, b: Disk) -> bool:
    """True iff disk ``a`` contains the center of ``b``."""
    dx = a.x - b.x
    dy = a.y - b.y
    return dx * dx + dy * dy <= a.r * a.r


def rects_intersect(a: Rect, b: Rect) -> bool:
    return a.xlo <= b.xhi and b.xlo <= a.xhi and a.ylo <= b.yhi and b.ylo <= a.yhi


def rect_contains_center(a: Rect, b: Rect) -> bool:
    cx = b.cx
    cy = b.cy
    return a.xlo <= cx <= a.xhi and a.ylo <= cy <= a.yhi


def line_meets(line: VLine, shape: Shape) -> bool:
    if isinstance(shape, Disk):
        return abs(shape.x - line.x) <= shape.r
    if isinstance(shape, Rect):
        return shape.xlo <= line.x <= shape.xhi
    return shape.x == line.x


def _undirected(pred):
    def edge(a, b):
        if isinstance(a, VLine):
            return line_meets(a, b)
        if isinstance(b, VLine):
            return line_meets(b, a)
        return pred(a, b)
    return edge


_PREDICATES: dict = {
    GraphClass.UNIT_DISK: _undirected(disks_intersect),
    GraphClass.DISK: _undirected(disks_intersect),
    GraphClass.TRANSMISSION: contains_center,
    GraphClass.UNIT_SQUARE: _undirected(rects_intersect),
    GraphClass.RECT: _undirected(rects_intersect),
    GraphClass.SQUARE_TRANSMISSION: rect_contains_center,
}


def edge_predicate(graph_class: GraphClass) -> Callable[[Shape, Shape], bool]:
    """Directed edge test ``pred(a, b)`` for shapes of ``graph_class``."""
    return _PREDICATES[graph_class]


# ---------------------------------------------------------------------------
# instances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Instance:
    """Shapes of one graph class plus the two terminal indices.

    Vertical lines may appear only as terminals (barrier instances) and only
    for the undirected classes.
    """

    graph_class: GraphClass
    shapes: Tuple[Shape, ...]
    s: int
    t: int
    unit: Optional[float] = None
    seed: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "shapes", tuple(self.shapes))
        n = len(self.shapes)
        if not (0 <= self.s < n and 0 <= self.t < n):
            raise IndexError(f"terminal index out of range (n={n}, s={self.s}, t={self.t})")
        if self.s == self.t:
            raise ValueError("s and t must be distinct")
        cls = self.graph_class
        if cls.is_unit:
            if self.unit is None or not self.unit > 0:
                raise ValueError(f"{cls.value} instances need a positive unit size")
        want = cls.shape_type
        for i, shape in enumerate(self.shapes):
            if isinstance(shape, VLine):
                if cls.directed:
                    raise ValueError("vertical lines are not allowed in directed classes")
                if i not in (self.s, self.t):
                    raise ValueError(f"shape {i}: vertical lines are only allowed as terminals")
                continue
            if not isinstance(shape, want):
                raise ValueError(f"shape {i}: expected {want.__name__} for {cls.value}")
            if i in (self.s, self.t):
                # terminal shapes may have any size
                continue
            if cls is GraphClass.UNIT_DISK and not math.isclose(shape.r, self.unit, rel_tol=1e-9):
                raise ValueError(f"shape {i}: radius {shape.r} differs from unit {self.unit}")
            if cls is GraphClass.UNIT_SQUARE and not (
                math.isclose(shape.xhi - shape.xlo, self.unit, rel_tol=1e-9)
                and math.isclose(shape.yhi - shape.ylo, self.unit, rel_tol=1e-9)
            ):
                raise ValueError(f"shape {i}: side differs from unit {self.unit}")
        if self.has_edge(self.s, self.t) or self.has_edge(self.t, self.s):
            raise AdjacentTerminalsError(f"terminals {self.s} and {self.t} are adjacent")

    def __len__(self) -> int:
        return len(self.shapes)

    @property
    def n(self) -> int:
        return len(self.shapes)

    @cached_property
    def predicate(self) -> Callable[[Shape, Shape], bool]:
        return edge_predicate(self.graph_class)

    def has_edge(self, u: int, v: int) -> bool:
        """Directed edge ``u -> v``; symmetric for the undirected classes."""
        n = len(self.shapes)
        if not (0 <= u < n and 0 <= v < n):
            raise IndexError(f"vertex index out of range: {u}, {v} (n={n})")
        return self.predicate(self.shapes[u], self.shapes[v])


def has_edge(inst: Instance, u: int, v: int) -> bool:
    return inst.has_edge(u, v)


# ---------------------------------------------------------------------------
# random generation
# ---------------------------------------------------------------------------

def _slack(graph_class: GraphClass, a: Shape, b: Shape) -> float:
    """Signed distance from the predicate boundary for the pair (a, b)."""
    if graph_class in (GraphClass.UNIT_DISK, GraphClass.DISK):
        return a.r + b.r - math.hypot(a.x - b.x, a.y - b.y)
    if graph_class is GraphClass.TRANSMISSION:
        return a.r - math.hypot(a.x - b.x, a.y - b.y)
    if graph_class in (GraphClass.UNIT_SQUARE, GraphClass.RECT):
        return min(b.xhi - a.xlo, a.xhi - b.xlo, b.yhi - a.ylo, a.yhi - b.ylo)
    # square transmission: a contains the center of b
    cx, cy = b.cx, b.cy
    return min(cx - a.xlo, a.xhi - cx, cy - a.ylo, a.yhi - cy)


def _shrink(shape: Shape, delta: float) -> Shape:
    if isinstance(shape, Disk):
        return Disk(shape.x, shape.y, max(shape.r - delta, 0.0))
    d = min(delta, 0.5 * (shape.xhi - shape.xlo), 0.5 * (shape.yhi - shape.ylo))
    return Rect(shape.xlo + d, shape.xhi - d, shape.ylo + d, shape.yhi - d)


def _reach(shape: Shape) -> float:
    if isinstance(shape, Disk):
        return shape.r
    return 0.5 * math.hypot(shape.xhi - shape.xlo, shape.yhi - shape.ylo)


def _center(shape: Shape) -> Tuple[float, float]:
    if isinstance(shape, Disk):
        return shape.x, shape.y
    return shape.cx, shape.cy


def _push_off_tangency(graph_class, shapes, margin, scale, fixed=()):
    """Shrink shapes whose pairwise slack is within ``margin * scale``.

    Unit classes cannot shrink individual shapes, so for them the offending
    shape is nudged sideways instead.
    """
    from scipy.spatial import cKDTree

    tol = margin * scale
    if tol <= 0 or len(shapes) < 2:
        return shapes
    shapes = list(shapes)
    for _ in range(8):
        centers = np.array([_center(sh) for sh in shapes])
        reach = max(_reach(sh) for sh in shapes)
        pairs = cKDTree(centers).query_pairs(2.0 * reach + 2.0 * tol, output_type="ndarray")
        bad = []
        for i, j in pairs:
            a, b = shapes[i], shapes[j]
            if abs(_slack(graph_class, a, b)) <= tol or abs(_slack(graph_class, b, a)) <= tol:
                bad.append(max(i, j) if max(i, j) not in fixed else min(i, j))
        if not bad:
            break
        for k in sorted(set(bad)):
            sh = shapes[k]
            if graph_class is GraphClass.UNIT_DISK:
                shapes[k] = Disk(sh.x + 4 * tol, sh.y, sh.r)
            elif graph_class is GraphClass.UNIT_SQUARE:
                shapes[k] = Rect(sh.xlo + 4 * tol, sh.xhi + 4 * tol, sh.ylo, sh.yhi)
            else:
                shapes[k] = _shrink(sh, 4 * tol)
    return shapes


def _draw_shapes(graph_class, n, region, radius_range, unit, rng):
    xs = rng.uniform(region.xlo, region.xhi, n)
    ys = rng.uniform(region.ylo, region.yhi, n)
    lo, hi = radius_range
    if graph_class is GraphClass.UNIT_DISK:
        return [Disk(float(x), float(y), unit) for x, y in zip(xs, ys)]
    if graph_class in (GraphClass.DISK, GraphClass.TRANSMISSION):
        rs = rng.uniform(lo, hi, n)
        return [Disk(float(x), float(y), float(r)) for x, y, r in zip(xs, ys, rs)]
    if graph_class is GraphClass.UNIT_SQUARE:
        half = 0.5 * unit
        return [Rect.square(float(x), float(y), half) for x, y in zip(xs, ys)]
    if graph_class is GraphClass.SQUARE_TRANSMISSION:
        hs = rng.uniform(lo, hi, n)
        return [Rect.square(float(x), float(y), float(h)) for x, y, h in zip(xs, ys, hs)]
    hw = rng.uniform(lo, hi, n)
    hh = rng.uniform(lo, hi, n)
    return [Rect(float(x - w), float(x + w), float(y - h), float(y + h))
            for x, y, w, h in zip(xs, ys, hw, hh)]


def generate(graph_class: GraphClass, n: int, region: Rect = Rect(0.0, 100.0, 0.0, 100.0),
             radius_range: Tuple[float, float] = (1.0, 5.0), seed: int = 0,
             unit: Optional[float] = None, margin: float = 1e-6,
             max_rounds: int = 1000) -> Instance:
    """Random instance with centers uniform in ``region``.

    Radii (half-sides for squares and rectangles) are uniform in
    ``radius_range``; the unit classes use ``unit`` instead, which defaults to
    the upper end of ``radius_range``. The terminals are the shapes with the
    smallest and largest center x-coordinate; the whole draw is repeated
    while they are adjacent. Output is a pure function of the arguments
    (numpy PCG64 seeded with ``seed``).
    """
    graph_class = GraphClass(graph_class)
    if n < 2:
        raise ValueError(f"need at least 2 shapes, got n={n}")
    if not (region.xhi > region.xlo and region.yhi > region.ylo):
        raise ValueError("degenerate region")
    lo, hi = radius_range
    if not (0 <= lo <= hi):
        raise ValueError(f"bad radius range {radius_range}")
    if graph_class.is_unit:
        unit = float(hi if unit is None else unit)
        if not unit > 0:
            raise ValueError("unit size must be positive")
    else:
        unit = None
    scale = unit if unit is not None else max(hi, 1e-300)
    rng = np.random.default_rng(seed)
    pred = edge_predicate(graph_class)
    for _ in range(max_rounds):
        shapes = _draw_shapes(graph_class, n, region, (lo, hi), unit, rng)
        cxs = [_center(sh)[0] for sh in shapes]
        s = int(np.argmin(cxs))
        t = int(np.argmax(cxs))
        if s == t:
            continue
        shapes = _push_off_tangency(graph_class, shapes, margin, scale)
        if pred(shapes[s], shapes[t]) or pred(shapes[t], shapes[s]):
            continue
        return Instance(graph_class, tuple(shapes), s, t, unit=unit, seed=seed)
    raise RuntimeError("could not produce non-adjacent terminals")


def region_for_degree(graph_class: GraphClass, n: int, size: float = 1.0,
                      degree: float = 10.0) -> Rect:
    """Square region in which ``n`` shapes of typical size ``size`` have
    roughly ``degree`` neighbours each on average."""
    graph_class = GraphClass(graph_class)
    # area around a shape in which another shape's centre yields an edge
    area_per_edge = {
        GraphClass.UNIT_DISK: math.pi * (2.0 * size) ** 2,
        GraphClass.DISK: math.pi * (2.0 * size) ** 2,
        GraphClass.TRANSMISSION: math.pi * size ** 2,
        GraphClass.UNIT_SQUARE: (2.0 * size) ** 2,
        GraphClass.RECT: (4.0 * size) ** 2,
        GraphClass.SQUARE_TRANSMISSION: (2.0 * size) ** 2,
    }[graph_class]
    side = math.sqrt(max(n, 2) * area_per_edge / degree)
    return Rect(0.0, side, 0.0, side)


def random_instance(graph_class: GraphClass, n: int, seed: int, degree: float = 10.0,
                    margin: float = 1e-6) -> Instance:
    """Constant-expected-degree instance: unit size 1, radii in [0.5, 1.5]."""
    graph_class = GraphClass(graph_class)
    region = region_for_degree(graph_class, n, 1.0, degree)
    return generate(graph_class, n, region, (0.5, 1.5), seed,
                    unit=1.0 if graph_class.is_unit else None, margin=margin)
