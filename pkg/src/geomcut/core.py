"""Blocking-flow engine for vertex-disjoint s-t paths over neighbour oracles.

The split graph is never materialised. Every base vertex ``v`` other than
``s`` and ``t`` becomes ``v_in = 2v`` and ``v_out = 2v + 1``; ``s`` is
encoded as ``2s + 1`` (it only has outgoing edges) and ``t`` as ``2t``
(it only has incoming ones). An edge ``u -> w`` of the base graph is then
the split edge ``2u + 1 -> 2w`` for every pair, including the terminals.
Edges into ``s`` and out of ``t`` never lie on a simple s-t path and are
ignored throughout.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from .geometry import Instance
from .oracle import OracleFactory, OracleStats, oracle_factory, terminal_neighbors

INF = math.inf


class InvariantViolation(RuntimeError):
    """An internal consistency check of the engine failed."""


def split_in(v: int) -> int:
    return 2 * v


def split_out(v: int) -> int:
    return 2 * v + 1


def base(x: int) -> int:
    return x >> 1


def is_in(x: int) -> bool:
    return not x & 1


# ---------------------------------------------------------------------------
# path sets
# ---------------------------------------------------------------------------

class PathSet:
    """Edge-disjoint s-t paths in the split graph, as prev/next pointers.

    ``prv[x]`` and ``nxt[x]`` are -1 for split vertices on no path. The
    source and sink have several neighbours on paths, so ``starts`` keeps
    the first vertex after ``s`` of every path instead.
    """

    def __init__(self, n: int, s: int, t: int):
        self.n = n
        self.s = s
        self.t = t
        self.S = split_out(s)
        self.T = split_in(t)
        self.prv = [-1] * (2 * n)
        self.nxt = [-1] * (2 * n)
        self.starts: List[int] = []

    @classmethod
    def empty(cls, inst: Instance) -> "PathSet":
        return cls(inst.n, inst.s, inst.t)

    @classmethod
    def from_split_paths(cls, n: int, s: int, t: int, paths: Iterable[Sequence[int]]) -> "PathSet":
        ps = cls(n, s, t)
        edges = []
        for p in paths:
            edges.extend(zip(p, p[1:]))
        ps._load_edges(edges)
        return ps

    @classmethod
    def from_base_paths(cls, n: int, s: int, t: int, paths: Iterable[Sequence[int]]) -> "PathSet":
        split = []
        for p in paths:
            if p[0] != s or p[-1] != t:
                raise ValueError(f"path {p} does not run from {s} to {t}")
            seq = [split_out(s)]
            for v in p[1:-1]:
                seq += [split_in(v), split_out(v)]
            seq.append(split_in(t))
            split.append(seq)
        return cls.from_split_paths(n, s, t, split)

    def _load_edges(self, edges: Iterable[Tuple[int, int]]) -> None:
        S, T = self.S, self.T
        succ: Dict[int, int] = {}
        starts = []
        count = 0
        for a, b in edges:
            count += 1
            if a == T or b == S:
                raise InvariantViolation(f"edge {a}->{b} leaves t or enters s")
            if a == S:
                starts.append(b)
            elif a in succ:
                raise InvariantViolation(f"split vertex {a} has out-degree > 1")
            else:
                succ[a] = b
        starts.sort()
        used = 0
        prv, nxt = self.prv, self.nxt
        for first in starts:
            a, b = S, first
            while True:
                used += 1
                if b != T:
                    if prv[b] != -1:
                        raise InvariantViolation(f"split vertex {b} has in-degree > 1")
                    prv[b] = a
                if a != S:
                    nxt[a] = b
                if b == T:
                    break
                if b not in succ:
                    raise InvariantViolation(f"path stops at split vertex {b}")
                a, b = b, succ[b]
                if used > count:
                    raise InvariantViolation("cycle in path edges")
        if used != count:
            raise InvariantViolation(f"{count - used} path edges do not lie on s-t paths")
        self.starts = starts

    @property
    def k(self) -> int:
        return len(self.starts)

    def __len__(self) -> int:
        return len(self.starts)

    def on_path(self, v: int) -> bool:
        return self.prv[split_in(v)] != -1

    def split_paths(self) -> List[List[int]]:
        out = []
        for first in self.starts:
            p = [self.S, first]
            while p[-1] != self.T:
                p.append(self.nxt[p[-1]])
            out.append(p)
        return out

    def base_paths(self) -> List[List[int]]:
        return [[self.s] + [base(x) for x in p[1:-1] if is_in(x)] + [self.t]
                for p in self.split_paths()]

    def edges(self) -> List[Tuple[int, int]]:
        out = []
        for p in self.split_paths():
            out.extend(zip(p, p[1:]))
        return out


# ---------------------------------------------------------------------------
# levels and blocking families
# ---------------------------------------------------------------------------

@dataclass
class LevelAssignment:
    """BFS levels of the split vertices in the residual graph.

    ``lam[x]`` is the level of split vertex ``x`` (``INF`` if unreached) and
    ``layers[i]`` the vertices at level ``i`` in discovery order. When ``t``
    is reached the last layer holds only ``t`` and later levels are not
    computed, unless the levels were requested with ``full=True``.
    """

    lam: List[float]
    layers: List[List[int]]
    T: int

    @property
    def lam_t(self) -> float:
        return self.lam[self.T]

    def level(self, x: int) -> float:
        return self.lam[x]


@dataclass
class CutResult:
    cut: List[int]
    paths: List[List[int]]
    phases: int
    trace: List[int]
    stats: OracleStats = field(default_factory=OracleStats)
    phase_work: List[OracleStats] = field(default_factory=list)

    @property
    def value(self) -> int:
        return len(self.cut)


@dataclass
class Terminals:
    """Precomputed terminal adjacency: out-neighbours of s, in-neighbours of t."""

    s_out: List[int]
    t_in: Set[int]

    @classmethod
    def of(cls, inst: Instance) -> "Terminals":
        s_out = terminal_neighbors(inst, inst.s)
        s_out.discard(inst.t)
        t_in = terminal_neighbors(inst, inst.t, incoming=True)
        t_in.discard(inst.s)
        return cls(sorted(s_out), t_in)


class Engine:
    """One solve: instance, oracle factory, shared statistics, terminals."""

    def __init__(self, inst: Instance, oracle: Union[str, OracleFactory] = "geo",
                 stats: Optional[OracleStats] = None, terminals: Optional[Terminals] = None):
        self.inst = inst
        self.factory = oracle_factory(oracle)
        self.stats = stats if stats is not None else OracleStats()
        self.terminals = terminals if terminals is not None else Terminals.of(inst)
        self.S = split_out(inst.s)
        self.T = split_in(inst.t)

    def _oracle(self, members):
        return self.factory(self.inst, members, self.stats)

    def compute_levels(self, paths: PathSet, full: bool = False) -> LevelAssignment:
        inst, S, T = self.inst, self.S, self.T
        n, s, t = inst.n, inst.s, inst.t
        prv, nxt = paths.prv, paths.nxt
        t_in = self.terminals.t_in
        lam = [INF] * (2 * n)
        lam[S] = 0
        first = []
        for u in self.terminals.s_out:
            x = split_in(u)
            if prv[x] != S:
                lam[x] = 1
                first.append(x)
        layers = [[S], first]
        # the oracle holds exactly the vertices whose in-copy has no level yet
        ds = self._oracle(u for u in range(n) if u != s and u != t and lam[split_in(u)] == INF)
        i = 1
        while True:
            frontier = layers[i]
            i += 1
            new = []
            if i % 2 == 0:
                for x in frontier:
                    if x == T:
                        continue
                    p = prv[x]
                    if p == -1:
                        y = x + 1
                    elif p == S:
                        continue
                    else:
                        y = p
                    if lam[y] == INF:
                        lam[y] = i
                        new.append(y)
            else:
                for x in frontier:
                    v = x >> 1
                    if v in t_in and nxt[x] != T and lam[T] == INF:
                        lam[T] = i
                        new.append(T)
                    u = ds.query(v)
                    while u is not None:
                        ds.delete(u)
                        y = 2 * u
                        lam[y] = i
                        new.append(y)
                        u = ds.query(v)
                    if prv[x] != -1:
                        y = x - 1
                        if lam[y] == INF:
                            lam[y] = i
                            new.append(y)
                            ds.delete(v)
            if not new:
                break
            layers.append(new)
            if lam[T] != INF and not full:
                layers[-1] = [T]
                break
        return LevelAssignment(lam, layers, T)

    def find_blocking_family(self, paths: PathSet, levels: LevelAssignment) -> List[List[int]]:
        lt = levels.lam_t
        if lt == INF:
            raise ValueError("t is unreachable; there is no blocking family to find")
        inst, S, T = self.inst, self.S, self.T
        lam, layers = levels.lam, levels.layers
        prv, nxt = paths.prv, paths.nxt
        t_in = self.terminals.t_in
        t = inst.t
        explored = bytearray(2 * inst.n)
        ds = {i: self._oracle([x >> 1 for x in layers[i]]) for i in range(3, lt - 1, 2)}
        first = layers[1]
        cursor = 0
        gamma = []
        stack = [S]
        while True:
            x = stack[-1]
            if x == S:
                while cursor < len(first) and explored[first[cursor]]:
                    cursor += 1
                if cursor == len(first):
                    break
                y = first[cursor]
                cursor += 1
                explored[y] = 1
                stack.append(y)
                continue
            i = lam[x]
            if not x & 1:
                # in-copy: its single residual out-edge
                p = prv[x]
                y = x + 1 if p == -1 else p
                if y == S or explored[y]:
                    stack.pop()
                else:
                    explored[y] = 1
                    stack.append(y)
                continue
            v = x >> 1
            if i == lt - 1:
                if v in t_in and nxt[x] != T and inst.has_edge(v, t):
                    stack.append(T)
                    gamma.append(stack)
                    stack = [S]
                else:
                    stack.pop()
                continue
            if prv[x] != -1:
                y = x - 1
                if lam[y] == i + 1 and not explored[y]:
                    explored[y] = 1
                    ds[i + 1].delete(v)
                    stack.append(y)
                    continue
            u = ds[i + 1].query(v)
            if u is None:
                stack.pop()
                continue
            ds[i + 1].delete(u)
            y = 2 * u
            explored[y] = 1
            stack.append(y)
        return gamma

    def extract_min_cut(self, paths: PathSet, levels: Optional[LevelAssignment] = None) -> List[int]:
        if levels is None:
            levels = self.compute_levels(paths)
        if levels.lam_t != INF:
            raise ValueError("path family is not maximum: t is still reachable")
        lam, prv = levels.lam, paths.prv
        inst = self.inst
        cut = []
        for u in range(inst.n):
            if u == inst.s or u == inst.t:
                continue
            x = split_in(u)
            if lam[x] != INF:
                if lam[x + 1] == INF:
                    cut.append(u)
            elif prv[x] != -1 and lam[prv[x]] != INF:
                cut.append(u)
        if len(cut) != paths.k:
            raise InvariantViolation(f"cut has {len(cut)} vertices but there are {paths.k} paths")
        return cut

    def run(self, on_phase: Optional[Callable] = None) -> CutResult:
        """Phase loop from the empty path family up to a maximum one.

        ``on_phase(index, paths, levels, gamma)`` is called before each
        combination step.
        """
        paths = PathSet.empty(self.inst)
        trace: List[int] = []
        work: List[OracleStats] = []
        while True:
            before = self.stats.copy()
            levels = self.compute_levels(paths)
            lt = levels.lam_t
            if lt == INF:
                work.append(self.stats - before)
                break
            gamma = self.find_blocking_family(paths, levels)
            if not gamma:
                raise InvariantViolation("t is reachable but the blocking family is empty")
            if trace and lt <= trace[-1]:
                raise InvariantViolation(f"level of t did not increase: {trace[-1]} -> {lt}")
            trace.append(int(lt))
            if on_phase is not None:
                on_phase(len(trace), paths, levels, gamma)
            paths = combine(paths, gamma)
            work.append(self.stats - before)
        cut = self.extract_min_cut(paths, levels)
        return CutResult(cut, paths.base_paths(), len(trace), trace, self.stats, work)


def combine(paths: PathSet, gamma: Iterable[Sequence[int]]) -> PathSet:
    """Paths of the symmetric difference of the two edge sets, where an
    edge cancels against its reverse."""
    edges = dict.fromkeys(paths.edges())
    for g in gamma:
        for a, b in zip(g, g[1:]):
            if (b, a) in edges:
                del edges[(b, a)]
            else:
                edges[(a, b)] = None
    out = PathSet(paths.n, paths.s, paths.t)
    out._load_edges(edges)
    return out


# ---------------------------------------------------------------------------
# module-level entry points
# ---------------------------------------------------------------------------

def compute_levels(inst: Instance, paths: Optional[PathSet] = None,
                   oracle: Union[str, OracleFactory] = "geo", full: bool = False,
                   stats: Optional[OracleStats] = None) -> LevelAssignment:
    paths = paths if paths is not None else PathSet.empty(inst)
    return Engine(inst, oracle, stats).compute_levels(paths, full=full)


def find_blocking_family(inst: Instance, paths: PathSet, levels: LevelAssignment,
                         oracle: Union[str, OracleFactory] = "geo",
                         stats: Optional[OracleStats] = None) -> List[List[int]]:
    return Engine(inst, oracle, stats).find_blocking_family(paths, levels)


def extract_min_cut(inst: Instance, paths: PathSet, oracle: Union[str, OracleFactory] = "geo",
                    stats: Optional[OracleStats] = None) -> List[int]:
    return Engine(inst, oracle, stats).extract_min_cut(paths)


def max_disjoint_paths(inst: Instance, oracle: Union[str, OracleFactory] = "geo",
                       on_phase: Optional[Callable] = None) -> CutResult:
    """Maximum set of vertex-disjoint s-t paths together with a minimum cut."""
    return Engine(inst, oracle).run(on_phase)


min_vertex_cut = max_disjoint_paths
