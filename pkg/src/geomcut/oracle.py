"""Delete-only neighbour oracles.

An oracle holds a subset ``U`` of the vertices of an instance and answers
"give me some ``u`` in ``U`` with an edge ``v -> u``". Every structure here
returns exact answers; only the running-time guarantees differ from the
polylogarithmic structures the algorithm was designed around:

============================  ==========================================
class                         structure
============================  ==========================================
unit-disk, unit-square        uniform grid, delete-on-report cell lists
disk                          kd-tree on centres, additively weighted
transmission                  kd-tree on centres, radius query
rect                          4-d kd-tree, dominance query
square-transmission           kd-tree on centres, box query
any (``kind="brute"``)        linear scan over a live bitmap
============================  ==========================================

Among several valid answers the first one in a fixed traversal order is
returned, so whole solver runs are reproducible.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Set, Union

from .geometry import Disk, GraphClass, Instance, Shape, VLine
from .kdtree import DeleteOnlyKDTree


@dataclass
class OracleStats:
    builds: int = 0
    queries: int = 0
    deletions: int = 0

    def copy(self) -> "OracleStats":
        return OracleStats(self.builds, self.queries, self.deletions)

    def __sub__(self, other: "OracleStats") -> "OracleStats":
        return OracleStats(self.builds - other.builds, self.queries - other.queries,
                           self.deletions - other.deletions)

    def as_dict(self) -> dict:
        return {"builds": self.builds, "queries": self.queries, "deletions": self.deletions}


class NeighborOracle:
    """Base class: bookkeeping of the live set and the statistics.

    Subclasses implement ``_query`` and ``_remove``. Live members whose shape
    is a vertical line are kept aside and checked by a direct scan, and so
    are queries issued from a line.
    """

    def __init__(self, inst: Instance, members: Iterable[int], stats: Optional[OracleStats] = None):
        self.inst = inst
        self.stats = stats if stats is not None else OracleStats()
        self.stats.builds += 1
        self.live = bytearray(inst.n)
        native, extra = [], []
        for u in sorted(set(members)):
            if not 0 <= u < inst.n:
                raise IndexError(f"member {u} out of range (n={inst.n})")
            self.live[u] = 1
            (extra if isinstance(inst.shapes[u], VLine) else native).append(u)
        self._size = len(native) + len(extra)
        self._extra = extra
        self._build(native)

    def __len__(self) -> int:
        return self._size

    def __contains__(self, u: int) -> bool:
        return bool(self.live[u])

    def query(self, v: int) -> Optional[int]:
        """Some live ``u != v`` with an edge ``v -> u``, or None."""
        self.stats.queries += 1
        inst = self.inst
        if isinstance(inst.shapes[v], VLine):
            return self._scan(v)
        u = self._query(v)
        if u is not None:
            return u
        for u in self._extra:
            if u != v and inst.has_edge(v, u):
                return u
        return None

    def delete(self, u: int) -> None:
        assert self.live[u], f"deleting vertex {u}, which is not in the oracle"
        if not self.live[u]:
            return
        self.live[u] = 0
        self._size -= 1
        self.stats.deletions += 1
        if isinstance(self.inst.shapes[u], VLine):
            self._extra.remove(u)
        else:
            self._remove(u)

    def _scan(self, v: int) -> Optional[int]:
        has_edge = self.inst.has_edge
        for u in range(self.inst.n):
            if self.live[u] and u != v and has_edge(v, u):
                return u
        return None

    def _build(self, native: list) -> None:
        raise NotImplementedError

    def _query(self, v: int) -> Optional[int]:
        raise NotImplementedError

    def _remove(self, u: int) -> None:
        raise NotImplementedError


class BruteForceOracle(NeighborOracle):
    """Linear scan; the trusted fallback for differential testing."""

    def _build(self, native):
        pass

    def _query(self, v):
        return self._scan(v)

    def _remove(self, u):
        pass


class GridOracle(NeighborOracle):
    """Uniform grid keyed by shape centre, for the unit classes.

    The cell side is the largest member diameter (side for squares), so a
    unit-sized query touches at most 3x3 cells. Per-query cost is not
    logarithmic in the worst case: a crowded cell is scanned linearly.
    """

    def _build(self, native):
        shapes = self.inst.shapes
        self._disks = self.inst.graph_class.shape_type is Disk
        if self._disks:
            self._reach = max((shapes[u].r for u in native), default=0.0)
        else:
            self._reach = max((0.5 * max(shapes[u].xhi - shapes[u].xlo, shapes[u].yhi - shapes[u].ylo)
                               for u in native), default=0.0)
        self._cell = 2.0 * self._reach if self._reach > 0 else 1.0
        self._cells = {}
        self._where = {}
        for u in native:
            key = self._key(*self._center(shapes[u]))
            self._cells.setdefault(key, []).append(u)
            self._where[u] = key

    def _center(self, shape):
        if self._disks:
            return shape.x, shape.y
        return shape.cx, shape.cy

    def _key(self, x, y):
        return (math.floor(x / self._cell), math.floor(y / self._cell))

    def _query(self, v):
        q = self.inst.shapes[v]
        pad = 1e-9 * (self._reach + 1.0)
        if self._disks:
            rx = ry = q.r + self._reach + pad
            xlo, xhi, ylo, yhi = q.x - rx, q.x + rx, q.y - ry, q.y + ry
        else:
            r = self._reach + pad
            xlo, xhi, ylo, yhi = q.xlo - r, q.xhi + r, q.ylo - r, q.yhi + r
        ix0, iy0 = self._key(xlo, ylo)
        ix1, iy1 = self._key(xhi, yhi)
        if (ix1 - ix0 + 1) * (iy1 - iy0 + 1) > 4 * len(self._cells) + 16:
            return self._scan(v)
        pred = self.inst.predicate
        shapes = self.inst.shapes
        cells = self._cells
        for iy in range(iy0, iy1 + 1):
            for ix in range(ix0, ix1 + 1):
                bucket = cells.get((ix, iy))
                if not bucket:
                    continue
                for u in bucket:
                    if u != v and pred(q, shapes[u]):
                        return u
        return None

    def _remove(self, u):
        key = self._where.pop(u)
        bucket = self._cells[key]
        bucket.remove(u)
        if not bucket:
            del self._cells[key]


class _TreeOracle(NeighborOracle):
    """kd-tree backed oracle; subclasses pick keys and the pruning test."""

    def _keys(self, shape):
        raise NotImplementedError

    def _aux(self, shape):
        return 0.0

    def _pruner(self, q):
        raise NotImplementedError

    def _build(self, native):
        shapes = self.inst.shapes
        self._tree = DeleteOnlyKDTree(native, [self._keys(shapes[u]) for u in native],
                                      [self._aux(shapes[u]) for u in native])

    def _query(self, v):
        q = self.inst.shapes[v]
        pred = self.inst.predicate
        shapes = self.inst.shapes
        return self._tree.find(self._pruner(q), lambda u: u != v and pred(q, shapes[u]))

    def _remove(self, u):
        self._tree.remove(u)


class DiskTreeOracle(_TreeOracle):
    """Additively weighted search: some ``u`` with ``|c_v - c_u| - r_u <= r_v``."""

    def _keys(self, d):
        return (d.x, d.y)

    def _aux(self, d):
        return d.r

    def _pruner(self, q):
        qx, qy, qr = q.x, q.y, q.r

        def may_contain(lo, hi, rmax):
            dx = max(lo[0] - qx, qx - hi[0], 0.0)
            dy = max(lo[1] - qy, qy - hi[1], 0.0)
            rr = qr + rmax
            return dx * dx + dy * dy <= rr * rr
        return may_contain


class TransmissionTreeOracle(_TreeOracle):
    """Some centre inside the query disk."""

    def _keys(self, d):
        return (d.x, d.y)

    def _pruner(self, q):
        qx, qy, rr = q.x, q.y, q.r * q.r

        def may_contain(lo, hi, _):
            dx = max(lo[0] - qx, qx - hi[0], 0.0)
            dy = max(lo[1] - qy, qy - hi[1], 0.0)
            return dx * dx + dy * dy <= rr
        return may_contain


class RectTreeOracle(_TreeOracle):
    """Rectangles as points ``(xlo, -xhi, ylo, -yhi)``; intersection with a
    query rectangle is dominance by ``(q.xhi, -q.xlo, q.yhi, -q.ylo)``."""

    def _keys(self, r):
        return (r.xlo, -r.xhi, r.ylo, -r.yhi)

    def _pruner(self, q):
        a, b, c, d = q.xhi, -q.xlo, q.yhi, -q.ylo

        def may_contain(lo, hi, _):
            return lo[0] <= a and lo[1] <= b and lo[2] <= c and lo[3] <= d
        return may_contain


class SquareTransmissionTreeOracle(_TreeOracle):
    """Some square centre inside the query square."""

    def _keys(self, r):
        return (r.cx, r.cy)

    def _pruner(self, q):
        xlo, xhi, ylo, yhi = q.xlo, q.xhi, q.ylo, q.yhi

        def may_contain(lo, hi, _):
            return lo[0] <= xhi and hi[0] >= xlo and lo[1] <= yhi and hi[1] >= ylo
        return may_contain


GEOMETRIC_ORACLES = {
    GraphClass.UNIT_DISK: GridOracle,
    GraphClass.UNIT_SQUARE: GridOracle,
    GraphClass.DISK: DiskTreeOracle,
    GraphClass.TRANSMISSION: TransmissionTreeOracle,
    GraphClass.RECT: RectTreeOracle,
    GraphClass.SQUARE_TRANSMISSION: SquareTransmissionTreeOracle,
}

OracleFactory = Callable[[Instance, Iterable[int], Optional[OracleStats]], NeighborOracle]


def geometric_oracle(inst: Instance, members: Iterable[int],
                     stats: Optional[OracleStats] = None) -> NeighborOracle:
    return GEOMETRIC_ORACLES[inst.graph_class](inst, members, stats)


def brute_oracle(inst: Instance, members: Iterable[int],
                 stats: Optional[OracleStats] = None) -> NeighborOracle:
    return BruteForceOracle(inst, members, stats)


def oracle_factory(kind: Union[str, OracleFactory] = "geo") -> OracleFactory:
    if callable(kind):
        return kind
    if kind == "geo":
        return geometric_oracle
    if kind == "brute":
        return brute_oracle
    raise ValueError(f"unknown oracle kind {kind!r} (expected 'geo' or 'brute')")


def build_oracle(inst: Instance, members: Iterable[int], kind: Union[str, OracleFactory] = "geo",
                 stats: Optional[OracleStats] = None) -> NeighborOracle:
    return oracle_factory(kind)(inst, members, stats)


def terminal_neighbors(inst: Instance, terminal: Union[int, Shape], incoming: bool = False) -> Set[int]:
    """Vertices adjacent to a terminal, by linear scan.

    ``terminal`` is a vertex index or a free-standing shape (for instance a
    strip boundary). With ``incoming`` the edges ``u -> terminal`` are
    collected instead of ``terminal -> u``.
    """
    if isinstance(terminal, int):
        skip, shape = terminal, inst.shapes[terminal]
    else:
        skip, shape = -1, terminal
    pred = inst.predicate
    out = set()
    for u, other in enumerate(inst.shapes):
        if u == skip:
            continue
        if pred(other, shape) if incoming else pred(shape, other):
            out.add(u)
    return out
