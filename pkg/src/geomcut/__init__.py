"""Minimum s-t vertex cuts in geometric intersection graphs.

The graph is never built explicitly: a blocking-flow engine asks delete-only
geometric neighbour oracles for edges as it needs them.
"""
from .barrier import BarrierInstance, generate_barrier, resilience
from .core import (CutResult, Engine, InvariantViolation, LevelAssignment, PathSet, combine,
                   compute_levels, extract_min_cut, find_blocking_family, max_disjoint_paths)
from .geometry import (AdjacentTerminalsError, Disk, GraphClass, Instance, Rect, VLine,
                       contains_center, disks_intersect, generate, has_edge, random_instance,
                       rects_intersect)
from .oracle import NeighborOracle, OracleStats, build_oracle, terminal_neighbors
from .reference import build_explicit, reference_max_flow, reference_solve

__version__ = "0.1.0"

__all__ = [
    "BarrierInstance",
    "generate_barrier",
    "resilience",
    "CutResult",
    "Engine",
    "InvariantViolation",
    "LevelAssignment",
    "PathSet",
    "combine",
    "compute_levels",
    "extract_min_cut",
    "find_blocking_family",
    "max_disjoint_paths",
    "AdjacentTerminalsError",
    "Disk",
    "GraphClass",
    "Instance",
    "Rect",
    "VLine",
    "contains_center",
    "disks_intersect",
    "generate",
    "has_edge",
    "random_instance",
    "rects_intersect",
    "NeighborOracle",
    "OracleStats",
    "build_oracle",
    "terminal_neighbors",
    "build_explicit",
    "reference_max_flow",
    "reference_solve",
    "solve",
]


def solve(inst, oracle="geo"):
    """Minimum cut and maximum vertex-disjoint paths of an instance or a
    barrier instance."""
    if isinstance(inst, BarrierInstance):
        return resilience(inst, oracle)
    return max_disjoint_paths(inst, oracle)
