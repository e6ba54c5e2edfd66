#!/usr/bin/env python
# coding: utf-8

# Neighbour oracles answer "give me some remaining neighbour of v" and let
# you delete vertices. Exhausting one from v lists every neighbour of v.

import numpy as np

from geomcut import GraphClass, build_oracle, random_instance


inst = random_instance(GraphClass.DISK, 200, seed=1)
print(inst.n, inst.s, inst.t)


# a fresh oracle over every vertex, drained from vertex 0

ds = build_oracle(inst, range(inst.n))
got = []
u = ds.query(0)
while u is not None:
    got.append(u)
    ds.delete(u)
    u = ds.query(0)
print(sorted(got))


# same list by testing every pair

print([u for u in range(inst.n) if u != 0 and inst.has_edge(0, u)])


# each graph class has its own structure; the brute-force oracle is a plain scan

for cls in GraphClass:
    i = random_instance(cls, 100, seed=2)
    print(cls.value, type(build_oracle(i, range(i.n))).__name__)


# the work counters are what the engine budget is measured in

from geomcut import OracleStats

stats = OracleStats()
ds = build_oracle(inst, range(inst.n), stats=stats)
for v in np.random.default_rng(0).integers(0, inst.n, 20):
    ds.query(int(v))
print(stats.as_dict())
