#!/usr/bin/env python
# coding: utf-8

# Watching the phase loop: each phase computes BFS levels in the residual
# graph, finds a blocking family of shortest augmenting paths and merges it
# into the current family.

from geomcut import Engine, GraphClass, random_instance


inst = random_instance(GraphClass.UNIT_DISK, 400, seed=5)


def show(index, paths, levels, gamma):
    print(f"phase {index}: {paths.k} paths so far, lambda(t) = {levels.lam_t}, "
          f"{len(gamma)} new augmenting paths")


eng = Engine(inst)
res = eng.run(on_phase=show)
print(res.value, res.phases, res.trace)


# per-phase oracle work stays linear in n

print([(w.queries + w.deletions) / inst.n for w in res.phase_work])


# split vertices: v_in = 2v, v_out = 2v + 1, s sits at 2s + 1 and t at 2t

from geomcut import PathSet, compute_levels

lv = compute_levels(inst, PathSet.empty(inst))
print(lv.lam_t, [len(layer) for layer in lv.layers])
