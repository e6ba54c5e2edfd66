"""Small hand-made instances shared by the tests."""
from geomcut.barrier import BarrierInstance
from geomcut.geometry import Disk, GraphClass, Instance, Rect

BIG = 1e6


def chain():
    """s - m - t with unit disks; s and t are 3 apart."""
    shapes = [Disk(0.0, 0.0, 1.0), Disk(1.5, 0.0, 1.0), Disk(3.0, 0.0, 1.0)]
    return Instance(GraphClass.UNIT_DISK, shapes, 0, 2, unit=1.0)


def lonely_pair():
    return Instance(GraphClass.DISK, [Disk(0.0, 0.0, 1.0), Disk(5.0, 0.0, 1.0)], 0, 1)


def parallel_disks(k=5):
    """Two huge disks acting as lines x=0 and x=10 and k disjoint middles."""
    shapes = [Disk(-BIG, 0.0, BIG), Disk(10.0 + BIG, 0.0, BIG)]
    shapes += [Disk(5.0, 12.0 * i, 5.5) for i in range(k)]
    return Instance(GraphClass.DISK, shapes, 0, 1)


def parallel_rects(k=5):
    shapes = [Rect(0.0, 1.0, 0.0, 10.0), Rect(9.0, 10.0, 0.0, 10.0)]
    shapes += [Rect(1.0, 9.0, 2.0 * i, 2.0 * i + 0.5) for i in range(k)]
    return Instance(GraphClass.RECT, shapes, 0, 1)


def diamond_transmission():
    """Directed s->a, s->b, a->t, b->t, b->a (plus edges into s)."""
    shapes = [Disk(0.0, 0.0, 1.5), Disk(1.0, 1.0, 1.9), Disk(1.0, -1.0, 2.1), Disk(2.5, 0.0, 0.1)]
    return Instance(GraphClass.TRANSMISSION, shapes, 0, 3)


def stacked_chains():
    """Strip [0, 10] crossed by two disjoint chains of disks."""
    row = [Disk(x, 0.0, 1.5) for x in (0.0, 2.5, 5.0, 7.5, 10.0)]
    row += [Disk(x, 10.0, 1.5) for x in (0.0, 2.5, 5.0, 7.5, 10.0)]
    return BarrierInstance(0.0, 10.0, tuple(row), GraphClass.DISK)
