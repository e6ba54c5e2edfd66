#!/usr/bin/env python
# coding: utf-8

# The final level run also yields a minimum vertex cut. Its size always
# equals the number of disjoint paths; here we check that against the
# quadratic reference solver and an explicit separation test.

from geomcut import GraphClass, max_disjoint_paths, random_instance, reference_solve
from geomcut.audit import audit
from geomcut.reference import separates


inst = random_instance(GraphClass.RECT, 300, seed=11)
res = max_disjoint_paths(inst)
print(res.value, res.cut)


ref = reference_solve(inst)
print(ref.value, ref.cut)   # the cut may differ, the size may not


print(separates(inst, res.cut), separates(inst, res.cut[1:]))


print(audit(inst, res.value, res.cut, res.paths, explicit=True))   # [] means clean


# directed classes work the same way

tr = random_instance(GraphClass.TRANSMISSION, 300, seed=11)
print(max_disjoint_paths(tr).value, reference_solve(tr).value)
