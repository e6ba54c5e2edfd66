import pytest

from builders import stacked_chains
from geomcut.barrier import BarrierInstance, generate_barrier, resilience
from geomcut.geometry import Disk, GraphClass, Rect
from geomcut.reference import reference_solve


def test_empty_strip():
    res = resilience(BarrierInstance(0.0, 10.0, ()))
    assert res.value == 0 and res.cut == []


def test_one_spanning_disk():
    res = resilience(BarrierInstance(0.0, 10.0, (Disk(5, 0, 6),)))
    assert res.value == 1
    assert res.cut == [0]
    assert res.paths == [[1, 0, 2]]


def test_stacked_chains():
    b = stacked_chains()
    assert resilience(b).value == 2
    assert reference_solve(b.to_instance()).value == 2


def test_strip_must_be_nonempty():
    with pytest.raises(ValueError):
        BarrierInstance(3.0, 3.0, ())
    with pytest.raises(ValueError):
        BarrierInstance(4.0, 3.0, ())


def test_transmission_has_no_barrier_version():
    with pytest.raises(ValueError):
        BarrierInstance(0.0, 1.0, (), GraphClass.TRANSMISSION)


def test_shapes_outside_the_strip_are_kept():
    # a chain that leaves the strip and comes back still blocks
    shapes = (Disk(-3, 0, 3.5), Disk(-3, 5, 2.5), Disk(5, 8, 6))
    b = BarrierInstance(0.0, 10.0, shapes)
    assert resilience(b).value == reference_solve(b.to_instance()).value == 1


def test_rectangles():
    shapes = (Rect(-1, 4, 0, 1), Rect(3, 11, 0.5, 1.5), Rect(-1, 11, 5, 6))
    b = BarrierInstance(0.0, 10.0, shapes, GraphClass.RECT)
    assert resilience(b).value == 2


@pytest.mark.parametrize("cls", [GraphClass.DISK, GraphClass.RECT,
                                 GraphClass.UNIT_DISK, GraphClass.UNIT_SQUARE])
def test_random_barriers_match_reference(cls):
    for seed in range(1, 11):
        b = generate_barrier(cls, 80, 12.0, 12.0, seed=seed)
        res = resilience(b)
        assert res.value == reference_solve(b.to_instance()).value
        assert all(0 <= u < b.n for u in res.cut)


@pytest.mark.parametrize("cls", [GraphClass.DISK, GraphClass.RECT])
def test_adding_shapes_never_lowers_resilience(cls):
    full = generate_barrier(cls, 60, 12.0, 12.0, seed=3)
    last = 0
    for k in range(0, full.n + 1, 5):
        b = BarrierInstance(full.left_x, full.right_x, full.shapes[:k], cls)
        value = resilience(b).value
        assert value >= last
        last = value
    assert last > 0


def test_generate_barrier_is_deterministic():
    a = generate_barrier(GraphClass.DISK, 30, seed=5)
    b = generate_barrier(GraphClass.DISK, 30, seed=5)
    assert a == b
