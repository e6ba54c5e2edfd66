"""Brute-force reference: explicit split graph and a plain augmenting-path
max-flow. Quadratic on purpose; used to validate the oracle engine."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Set, Tuple

from .geometry import Instance

Edge = Tuple[int, int]


def _in(v):
    return 2 * v


def _out(v):
    return 2 * v + 1


@dataclass
class ExplicitGraph:
    """Split graph with ``v_in = 2v``, ``v_out = 2v + 1``, ``s -> 2s + 1``,
    ``t -> 2t``. Edges into s and out of t are left out."""

    n: int
    s: int
    t: int
    adj: Dict[int, List[int]]

    @property
    def S(self) -> int:
        return _out(self.s)

    @property
    def T(self) -> int:
        return _in(self.t)

    @property
    def vertices(self) -> List[int]:
        return sorted(self.adj)

    def edges(self) -> List[Edge]:
        return [(a, b) for a in sorted(self.adj) for b in self.adj[a]]

    @property
    def edge_count(self) -> int:
        return sum(len(v) for v in self.adj.values())


def base_adjacency(inst: Instance) -> Dict[int, List[int]]:
    """All directed edges of the base graph by pairwise testing."""
    n = inst.n
    return {u: [w for w in range(n) if w != u and inst.has_edge(u, w)] for u in range(n)}


def build_explicit(inst: Instance) -> ExplicitGraph:
    s, t = inst.s, inst.t
    adj: Dict[int, List[int]] = {}
    for v in range(inst.n):
        if v == s:
            adj[_out(v)] = []
        elif v == t:
            adj[_in(v)] = []
        else:
            adj[_in(v)] = [_out(v)]
            adj[_out(v)] = []
    for u, nbrs in base_adjacency(inst).items():
        if u == t:
            continue
        adj[_out(u)].extend(_in(w) for w in nbrs if w != s)
    return ExplicitGraph(inst.n, s, t, adj)


def residual_adjacency(g: ExplicitGraph, flow: Iterable[Edge]) -> Dict[int, List[int]]:
    flow = set(flow)
    res: Dict[int, List[int]] = {x: [] for x in g.adj}
    for a, nbrs in g.adj.items():
        for b in nbrs:
            if (a, b) in flow:
                res[b].append(a)
            else:
                res[a].append(b)
    return res


def bfs_levels(adj: Dict[int, List[int]], source: int, sink: Optional[int] = None) -> Dict[int, int]:
    """BFS distances from ``source``; ``sink`` is reached but not expanded."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        a = queue.popleft()
        if a == sink:
            continue
        for b in adj.get(a, ()):
            if b not in dist:
                dist[b] = dist[a] + 1
                queue.append(b)
    return dist


def find_path(adj: Dict[int, List[int]], source: int, target: int,
              removed: Set[Edge] = frozenset()) -> Optional[List[int]]:
    parent = {source: None}
    queue = deque([source])
    while queue:
        a = queue.popleft()
        if a == target:
            path = [a]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for b in adj.get(a, ()):
            if b not in parent and (a, b) not in removed:
                parent[b] = a
                queue.append(b)
    return None


def layered_adjacency(res: Dict[int, List[int]], dist: Dict[int, int], T: int) -> Dict[int, List[int]]:
    """Edges advancing one level, stopping at the level of ``T``."""
    lt = dist[T]
    out: Dict[int, List[int]] = {}
    for a, nbrs in res.items():
        if a not in dist:
            continue
        keep = []
        for b in nbrs:
            if b not in dist or dist[b] != dist[a] + 1:
                continue
            if b == T or dist[b] < lt:
                keep.append(b)
        out[a] = keep
    return out


@dataclass
class FlowResult:
    value: int
    cut: List[int]
    paths: List[List[int]]
    flow: Set[Edge]


def reference_max_flow(g: ExplicitGraph) -> FlowResult:
    """Unit-capacity max-flow by repeated BFS augmentation."""
    S, T = g.S, g.T
    radj: Dict[int, List[int]] = {x: [] for x in g.adj}
    for a, nbrs in g.adj.items():
        for b in nbrs:
            radj[b].append(a)
    flow: Set[Edge] = set()

    def residual(a):
        for b in g.adj[a]:
            if (a, b) not in flow:
                yield b
        for b in radj[a]:
            if (b, a) in flow:
                yield b

    def search():
        parent = {S: None}
        queue = deque([S])
        while queue:
            a = queue.popleft()
            for b in residual(a):
                if b not in parent:
                    parent[b] = a
                    if b == T:
                        return parent
                    queue.append(b)
        return parent

    value = 0
    while True:
        parent = search()
        if T not in parent:
            break
        b = T
        while parent[b] is not None:
            a = parent[b]
            if (b, a) in flow:
                flow.remove((b, a))
            else:
                flow.add((a, b))
            b = a
        value += 1

    reach = set(parent)
    cut = set()
    for a in reach:
        for b in g.adj[a]:
            if b in reach:
                continue
            if a & 1 == 0:
                cut.add(a >> 1)
            elif b != T:
                cut.add(b >> 1)
            else:
                cut.add(a >> 1)
    if len(cut) != value:
        raise AssertionError(f"reference cut size {len(cut)} != flow value {value}")

    succ = {}
    starts = []
    for a, b in flow:
        if a == S:
            starts.append(b)
        else:
            succ[a] = b
    paths = []
    for x in sorted(starts):
        p = [g.s]
        while x != T:
            if x & 1 == 0:
                p.append(x >> 1)
            x = succ[x]
        p.append(g.t)
        paths.append(p)
    return FlowResult(value, sorted(cut), paths, flow)


def reference_solve(inst: Instance) -> FlowResult:
    return reference_max_flow(build_explicit(inst))


def separates(inst: Instance, cut: Iterable[int]) -> bool:
    """True iff removing ``cut`` leaves no directed s-t path (pairwise scan)."""
    removed = set(cut)
    if inst.s in removed or inst.t in removed:
        return False
    seen = {inst.s}
    queue = deque([inst.s])
    n = inst.n
    while queue:
        u = queue.popleft()
        for w in range(n):
            if w in seen or w in removed:
                continue
            if inst.has_edge(u, w):
                if w == inst.t:
                    return False
                seen.add(w)
                queue.append(w)
    return True
