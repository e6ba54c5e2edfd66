"""Barrier resilience in a vertical strip.

A curve from far above to far below the shapes, staying inside the strip,
must cross every chain of shapes connecting the two boundary lines. The
fewest shapes it has to cross is the minimum vertex cut between the lines in
the intersection graph of the shapes plus the two lines.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from .core import CutResult, Engine
from .geometry import Disk, GraphClass, Instance, Rect, Shape, VLine
from .oracle import OracleFactory

BARRIER_CLASSES = (GraphClass.UNIT_DISK, GraphClass.DISK, GraphClass.UNIT_SQUARE, GraphClass.RECT)


@dataclass(frozen=True)
class BarrierInstance:
    left_x: float
    right_x: float
    shapes: Tuple[Shape, ...]
    graph_class: GraphClass = GraphClass.DISK
    unit: Optional[float] = None
    seed: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "shapes", tuple(self.shapes))
        object.__setattr__(self, "graph_class", GraphClass(self.graph_class))
        if not (math.isfinite(self.left_x) and math.isfinite(self.right_x)):
            raise ValueError("strip boundaries must be finite")
        if not self.left_x < self.right_x:
            raise ValueError(f"empty strip: left {self.left_x} >= right {self.right_x}")
        if self.graph_class not in BARRIER_CLASSES:
            raise ValueError(f"barrier resilience is not defined for {self.graph_class.value}")

    @property
    def n(self) -> int:
        return len(self.shapes)

    def to_instance(self) -> Instance:
        """Shapes followed by the left line (index n) and right line (n + 1)."""
        n = len(self.shapes)
        return Instance(self.graph_class, self.shapes + (VLine(self.left_x), VLine(self.right_x)),
                        n, n + 1, unit=self.unit, seed=self.seed)


def resilience(b: BarrierInstance, oracle: Union[str, OracleFactory] = "geo") -> CutResult:
    """Minimum number of shapes a strip-crossing curve must meet.

    The returned cut lists shape indices; paths run from ``n`` (left line)
    to ``n + 1`` (right line).
    """
    return Engine(b.to_instance(), oracle).run()


def generate_barrier(graph_class: GraphClass, n: int, width: float = 20.0, height: float = 40.0,
                     radius_range: Tuple[float, float] = (0.5, 2.0), seed: int = 0,
                     unit: Optional[float] = None, margin: float = 1e-6) -> BarrierInstance:
    """Random shapes over ``[0, width] x [0, height]`` with the strip ``[0, width]``.

    Lines touching a shape exactly on its boundary are avoided by moving the
    strip boundaries inward.
    """
    graph_class = GraphClass(graph_class)
    if graph_class not in BARRIER_CLASSES:
        raise ValueError(f"barrier resilience is not defined for {graph_class.value}")
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = np.random.default_rng(seed)
    lo, hi = radius_range
    if graph_class.is_unit:
        unit = float(hi if unit is None else unit)
    else:
        unit = None
    xs = rng.uniform(-0.1 * width, 1.1 * width, n)
    ys = rng.uniform(0.0, height, n)
    sizes = rng.uniform(lo, hi, n) if unit is None else np.full(n, unit)
    shapes = []
    if graph_class.shape_type is Disk:
        shapes = [Disk(float(x), float(y), float(r)) for x, y, r in zip(xs, ys, sizes)]
    elif graph_class is GraphClass.UNIT_SQUARE:
        shapes = [Rect.square(float(x), float(y), 0.5 * unit) for x, y in zip(xs, ys)]
    else:
        hh = rng.uniform(lo, hi, n)
        shapes = [Rect(float(x - w), float(x + w), float(y - h), float(y + h))
                  for x, y, w, h in zip(xs, ys, sizes, hh)]
    left, right = 0.0, float(width)
    tol = margin * (unit if unit is not None else hi)

    def touches(x):
        for sh in shapes:
            if isinstance(sh, Disk):
                gap = abs(abs(sh.x - x) - sh.r)
            else:
                gap = min(abs(sh.xlo - x), abs(sh.xhi - x))
            if gap <= tol:
                return True
        return False

    while tol > 0 and touches(left):
        left += 4 * tol
    while tol > 0 and touches(right):
        right -= 4 * tol
    return BarrierInstance(left, right, tuple(shapes), graph_class, unit=unit, seed=seed)
