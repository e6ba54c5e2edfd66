"""Independent checks of a claimed (cut, paths) answer."""
from __future__ import annotations

from collections import deque
from typing import Iterable, List, Sequence

from .geometry import Instance
from .oracle import build_oracle, terminal_neighbors
from .reference import separates

EXPLICIT_LIMIT = 5000


def oracle_separates(inst: Instance, cut: Iterable[int], oracle: str = "geo") -> bool:
    """Like :func:`reference.separates`, but the BFS exhausts a neighbour
    oracle instead of testing all pairs."""
    removed = set(cut)
    if inst.s in removed or inst.t in removed:
        return False
    ds = build_oracle(inst, (u for u in range(inst.n) if u not in removed and u != inst.s), oracle)
    queue = deque()
    for u in sorted(terminal_neighbors(inst, inst.s) - removed):
        if u == inst.t:
            return False
        ds.delete(u)
        queue.append(u)
    while queue:
        v = queue.popleft()
        u = ds.query(v)
        while u is not None:
            if u == inst.t:
                return False
            ds.delete(u)
            queue.append(u)
            u = ds.query(v)
    return True


def audit(inst: Instance, value: int, cut: Sequence[int], paths: Sequence[Sequence[int]],
          explicit: bool = False) -> List[str]:
    """Problems found with the answer; empty when it is a valid min cut.

    Checks the path edges, interior vertex-disjointness, the value and the
    separation of s from t after removing ``cut``. With ``explicit`` the
    separation test scans all pairs (only up to ``EXPLICIT_LIMIT`` vertices).
    """
    problems = []
    n, s, t = inst.n, inst.s, inst.t
    if len(cut) != value:
        problems.append(f"cut has {len(cut)} vertices, value is {value}")
    if len(paths) != value:
        problems.append(f"{len(paths)} paths, value is {value}")
    if len(set(cut)) != len(cut):
        problems.append("cut lists a vertex twice")
    for u in cut:
        if not isinstance(u, int) or not 0 <= u < n:
            problems.append(f"cut vertex {u!r} out of range")
        elif u in (s, t):
            problems.append(f"cut contains terminal {u}")
    used = {}
    for k, p in enumerate(paths):
        if len(p) < 2 or p[0] != s or p[-1] != t:
            problems.append(f"path {k} does not run from {s} to {t}")
            continue
        if any(not isinstance(v, int) or not 0 <= v < n for v in p):
            problems.append(f"path {k} has an out-of-range vertex")
            continue
        for a, b in zip(p, p[1:]):
            if not inst.has_edge(a, b):
                problems.append(f"path {k}: no edge {a} -> {b}")
        for v in p[1:-1]:
            if v in (s, t):
                problems.append(f"path {k} revisits a terminal")
            elif v in used:
                problems.append(f"vertex {v} is on paths {used[v]} and {k}")
            else:
                used[v] = k
    if not problems:
        if explicit and n <= EXPLICIT_LIMIT:
            ok = separates(inst, cut)
        else:
            ok = oracle_separates(inst, cut)
        if not ok:
            problems.append("removing the cut does not disconnect s from t")
    return problems
