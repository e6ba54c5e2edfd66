import random

import pytest

from builders import chain, diamond_transmission, lonely_pair, parallel_disks, parallel_rects
from geomcut.core import (INF, Engine, InvariantViolation, PathSet, combine, compute_levels,
                          extract_min_cut, find_blocking_family, max_disjoint_paths, split_in,
                          split_out)
from geomcut.geometry import GraphClass, random_instance
from geomcut.reference import (bfs_levels, build_explicit, find_path, layered_adjacency,
                               reference_solve, residual_adjacency)


def explicit_levels(inst, paths):
    g = build_explicit(inst)
    res = residual_adjacency(g, paths.edges())
    return g, res, bfs_levels(res, g.S, g.T)


def test_levels_on_chain():
    inst = chain()
    lv = compute_levels(inst)
    assert lv.lam[split_out(0)] == 0
    assert lv.lam[split_in(1)] == 1
    assert lv.lam[split_out(1)] == 2
    assert lv.lam_t == 3
    assert lv.layers == [[1], [2], [3], [4]]


def test_levels_on_saturated_chain():
    inst = chain()
    paths = PathSet.from_base_paths(inst.n, inst.s, inst.t, [[0, 1, 2]])
    lv = compute_levels(inst, paths)
    assert lv.lam_t == INF
    assert lv.lam[split_in(1)] == INF


def test_levels_truncate_at_t_unless_full():
    inst = random_instance(GraphClass.DISK, 100, seed=4)
    short = compute_levels(inst)
    full = compute_levels(inst, full=True)
    assert short.layers[-1] == [short.T]
    assert short.lam_t == full.lam_t
    assert len(full.layers) >= len(short.layers)
    for x, lam in enumerate(short.lam):
        if lam != INF:
            assert full.lam[x] == lam


def test_levels_use_one_oracle_build():
    inst = random_instance(GraphClass.UNIT_DISK, 100, seed=3)
    eng = Engine(inst)
    eng.compute_levels(PathSet.empty(inst))
    assert eng.stats.builds == 1


@pytest.mark.parametrize("seed", range(1, 6))
def test_levels_match_explicit_bfs_unit_disk(seed):
    inst = random_instance(GraphClass.UNIT_DISK, 100, seed=seed)
    lv = compute_levels(inst, full=True)
    g, _, dist = explicit_levels(inst, PathSet.empty(inst))
    for x in g.vertices:
        assert lv.lam[x] == dist.get(x, INF)


def test_blocking_family_on_chain():
    inst = chain()
    ps = PathSet.empty(inst)
    gamma = find_blocking_family(inst, ps, compute_levels(inst))
    assert gamma == [[1, 2, 3, 4]]


@pytest.mark.parametrize("make, k", [(parallel_disks, 2), (parallel_disks, 5),
                                     (parallel_rects, 2), (parallel_rects, 5)])
def test_blocking_family_finds_every_parallel_path(make, k):
    inst = make(k)
    ps = PathSet.empty(inst)
    gamma = find_blocking_family(inst, ps, compute_levels(inst))
    assert len(gamma) == k
    assert all(len(p) == 4 for p in gamma)


def test_blocking_family_needs_reachable_t():
    inst = chain()
    ps = PathSet.from_base_paths(inst.n, inst.s, inst.t, [[0, 1, 2]])
    with pytest.raises(ValueError):
        find_blocking_family(inst, ps, compute_levels(inst, ps))


def test_combine_with_empty_family():
    inst = chain()
    out = combine(PathSet.empty(inst), [[1, 2, 3, 4]])
    assert out.k == 1
    assert out.split_paths() == [[1, 2, 3, 4]]
    assert out.base_paths() == [[0, 1, 2]]


def test_combine_cancels_reverse_edge():
    inst = diamond_transmission()
    a, b = 1, 2
    pi = PathSet.from_base_paths(inst.n, inst.s, inst.t, [[0, b, a, 3]])
    gamma = [[split_out(0), split_in(a), split_out(b), split_in(3)]]
    out = combine(pi, gamma)
    assert sorted(out.base_paths()) == [[0, a, 3], [0, b, 3]]
    assert reference_solve(inst).value == 2


def test_diamond_levels_follow_the_reverse_edge():
    inst = diamond_transmission()
    pi = PathSet.from_base_paths(inst.n, inst.s, inst.t, [[0, 2, 1, 3]])
    lv = compute_levels(inst, pi)
    assert lv.lam_t == 3
    gamma = find_blocking_family(inst, pi, lv)
    assert gamma == [[1, 2, 5, 6]]


def test_pathset_rejects_branching():
    with pytest.raises(InvariantViolation):
        PathSet.from_split_paths(3, 0, 2, [[1, 2, 3, 4], [1, 2, 3, 4]])
    with pytest.raises(InvariantViolation):
        PathSet.from_split_paths(3, 0, 2, [[1, 2, 3]])


@pytest.mark.parametrize("cls", list(GraphClass))
def test_degree_audit_over_phase_traces(cls):
    for seed in range(1, 6):
        inst = random_instance(cls, 60, seed=seed)

        def check(index, paths, levels, gamma):
            out = combine(paths, gamma)
            indeg, outdeg = {}, {}
            for a, b in out.edges():
                outdeg[a] = outdeg.get(a, 0) + 1
                indeg[b] = indeg.get(b, 0) + 1
            for x in set(indeg) | set(outdeg):
                if x in (out.S, out.T):
                    continue
                assert indeg.get(x, 0) == outdeg.get(x, 0) <= 1
            assert out.k == paths.k + len(gamma)

        max_disjoint_paths(inst, on_phase=check)


def test_cut_on_chain():
    inst = chain()
    res = max_disjoint_paths(inst)
    assert res.cut == [1]
    assert res.paths == [[0, 1, 2]]
    assert res.phases == 1 and res.trace == [3]


def test_zero_path_instance():
    res = max_disjoint_paths(lonely_pair())
    assert res.value == 0 and res.cut == [] and res.paths == [] and res.phases == 0


def test_parallel_five():
    for make in (parallel_disks, parallel_rects):
        res = max_disjoint_paths(make(5))
        assert res.value == 5
        assert sorted(res.cut) == [2, 3, 4, 5, 6]


def test_extract_min_cut_rejects_non_maximum_family():
    inst = chain()
    with pytest.raises(ValueError):
        extract_min_cut(inst, PathSet.empty(inst))


@pytest.mark.parametrize("cls", list(GraphClass))
def test_random_subfamilies_give_explicit_levels(cls):
    rng = random.Random(cls.value)
    for seed in range(1, 6):
        inst = random_instance(cls, 80, seed=seed)
        ref = reference_solve(inst)
        chosen = [p for p in ref.paths if rng.random() < 0.5]
        ps = PathSet.from_base_paths(inst.n, inst.s, inst.t, chosen)
        lv = compute_levels(inst, ps, full=True)
        g, _, dist = explicit_levels(inst, ps)
        for x in range(2 * inst.n):
            assert lv.lam[x] == dist.get(x, INF)


def test_blocking_property_small_suite():
    for seed in range(1, 11):
        inst = random_instance(GraphClass.DISK, 60, seed=seed)

        def check(index, paths, levels, gamma):
            g, res, dist = explicit_levels(inst, paths)
            layered = layered_adjacency(res, dist, g.T)
            used = {e for p in gamma for e in zip(p, p[1:])}
            assert find_path(layered, g.S, g.T, used) is None

        max_disjoint_paths(inst, on_phase=check)


def test_brute_and_geo_agree():
    for cls in GraphClass:
        inst = random_instance(cls, 50, seed=17)
        assert max_disjoint_paths(inst, "geo").value == max_disjoint_paths(inst, "brute").value
