#!/usr/bin/env python
# coding: utf-8

# Barrier resilience: how many sensors must a curve crossing the strip from
# top to bottom pass through? The two strip boundaries act as s and t.

from geomcut import BarrierInstance, Disk, GraphClass, Rect, generate_barrier, resilience


print(resilience(BarrierInstance(0.0, 10.0, ())).value)


one = BarrierInstance(0.0, 10.0, (Disk(5.0, 0.0, 6.0),))
r = resilience(one)
print(r.value, r.cut)


# two stacked chains of disks, each touching both lines

row = [Disk(x, y, 1.5) for y in (0.0, 10.0) for x in (0.0, 2.5, 5.0, 7.5, 10.0)]
print(resilience(BarrierInstance(0.0, 10.0, tuple(row))).value)


# rectangles, shapes may stick out of the strip

rects = (Rect(-1, 4, 0, 1), Rect(3, 11, 0.5, 1.5), Rect(-1, 11, 5, 6))
print(resilience(BarrierInstance(0.0, 10.0, rects, GraphClass.RECT)).value)


# random strips get harder to cross as the sensors pile up

for n in (20, 40, 80, 160):
    vals = [resilience(generate_barrier(GraphClass.DISK, n, 12.0, 12.0, seed=s)).value
            for s in range(1, 6)]
    print(n, vals)
