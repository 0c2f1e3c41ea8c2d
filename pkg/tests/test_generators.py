import pytest

from mwcp.geometry import (
    convex_hull_2d,
    point_in_convex_polygon,
    segments_intersect,
)
from mwcp.generators import gen_ngon_family, gen_uniform
from mwcp.model import canonicalize
from mwcp.oracle import solve_bruteforce
from mwcp.solver1d import solve_1d
from mwcp.solver2d import solve_2d


def test_uniform_deterministic():
    a = gen_uniform(5, 2, 7)
    b = gen_uniform(5, 2, 7)
    assert a.points == b.points
    assert a.meta == b.meta
    c = gen_uniform(5, 2, 8)
    assert a.points != c.points


def test_uniform_all_positive_hull_of_everything():
    inst = gen_uniform(6, 2, 3, (1, 1))
    sol = solve_2d(inst)
    assert sol.weight == 6
    assert len(sol.contained) == 6


def test_uniform_1d_matches_oracle():
    inst = gen_uniform(10, 1, 1)
    assert solve_1d(inst).weight == solve_bruteforce(inst).weight


def test_uniform_rejects_degenerate_ranges():
    with pytest.raises(ValueError):
        gen_uniform(3, 2, 0, (0, 0))
    with pytest.raises(ValueError):
        gen_uniform(3, 2, 0, (4, 2))
    with pytest.raises(ValueError):
        gen_uniform(0, 2, 0)


def test_uniform_canonical_unchanged():
    for seed in range(5):
        inst = gen_uniform(12, 2, seed)
        assert canonicalize(inst) is inst


def test_ngon_structure():
    inst = gen_ngon_family(3)
    assert len(inst.points) == 6
    assert sum(1 for wp in inst.points if wp.weight == 1) == 3
    assert sum(1 for wp in inst.points if wp.weight == -1) == 3
    assert solve_bruteforce(inst).weight == 3


def test_ngon_on_unit_circle():
    inst = gen_ngon_family(8)
    for wp in inst.points:
        if wp.weight == 1:
            x, y = wp.point
            assert x * x + y * y == 1


def test_ngon_optimum_is_n():
    for n in (3, 4, 5, 6, 9, 12):
        inst = gen_ngon_family(n)
        assert solve_2d(inst).weight == n


def test_ngon_construction_properties():
    for n in (3, 4, 5, 7, 10, 13):
        inst = gen_ngon_family(n)
        pos = [wp.point for wp in inst.points if wp.weight == 1]
        neg = [wp.point for wp in inst.points if wp.weight == -1]
        hull = convex_hull_2d(pos)
        assert len(hull) == n
        for p in neg:
            assert not point_in_convex_polygon(p, hull)
        edges = [(hull[i - 1], hull[i]) for i in range(n)]
        for i in range(n):
            a, b = neg[i], neg[(i + 1) % n]
            assert any(segments_intersect(a, b, e1, e2) for e1, e2 in edges)


def test_ngon_deterministic_and_canonical():
    a = gen_ngon_family(9)
    b = gen_ngon_family(9)
    assert a.points == b.points
    assert canonicalize(a) is a
    assert "delta" in a.meta


def test_ngon_rejects_small_n():
    with pytest.raises(ValueError):
        gen_ngon_family(2)
