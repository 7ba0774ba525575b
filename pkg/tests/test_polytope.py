import random

import pytest

from splitorders.errors import EmptyPolytopeError, EnumerationLimitError
from splitorders.exponent import ExponentMatrix, minplus_closure
from splitorders.polytope import (
    LatticePoint,
    enumerate_lattice_points,
    is_empty,
    is_reduced,
    max_difference,
    polytope_of,
)

from _oracles import brute_max_difference, naive_box_points

NU = ExponentMatrix([[0, 0, 1], [3, 0, 1], [3, 2, 0]])
NU_PRIME = ExponentMatrix([[0, 0, 2], [3, 0, 1], [3, 2, 0]])

# the region of NU, by hand: 0 <= x2 <= 3, -1 <= x3 <= 3, -1 <= x3 - x2 <= 2
EXPECTED_POINTS = [
    (0, 0, -1), (0, 0, 0), (0, 0, 1), (0, 0, 2),
    (0, 1, 0), (0, 1, 1), (0, 1, 2), (0, 1, 3),
    (0, 2, 1), (0, 2, 2), (0, 2, 3),
    (0, 3, 2), (0, 3, 3),
]


def test_worked_example_bounds():
    P = polytope_of(NU)
    assert P.difference_range(1, 0) == (0, 3)
    assert P.difference_range(2, 0) == (-1, 3)
    assert P.difference_range(2, 1) == (-1, 2)


def test_worked_example_points():
    points = enumerate_lattice_points(polytope_of(NU))
    assert [p.coords for p in points] == EXPECTED_POINTS


def test_variant_cuts_out_the_same_region():
    """The redundant constraint x3 >= -2 removes no lattice point."""
    ours = enumerate_lattice_points(polytope_of(NU))
    theirs = enumerate_lattice_points(polytope_of(NU_PRIME))
    assert [p.coords for p in ours] == [p.coords for p in theirs]


def test_named_vertices_lie_in_the_region():
    P = polytope_of(NU)
    for coords in [(0, 0, -1), (0, 3, 2), (0, 3, 3), (0, 1, 3), (0, 0, 2)]:
        assert P.contains(coords)
    assert not P.contains((0, 0, -2))
    assert not P.contains((0, 4, 3))


def test_zero_matrix_region_is_the_origin():
    points = enumerate_lattice_points(polytope_of(ExponentMatrix([[0, 0], [0, 0]])))
    assert [p.coords for p in points] == [(0, 0)]


def test_geodesic_interval():
    nu = ExponentMatrix([[0, 1], [2, 0]])
    points = enumerate_lattice_points(polytope_of(nu))
    assert [p.coords for p in points] == [(0, -1), (0, 0), (0, 1), (0, 2)]


def test_empty_region():
    nu = ExponentMatrix([[0, -2], [1, 0]])
    P = polytope_of(nu)
    assert is_empty(P)
    assert enumerate_lattice_points(P) == []
    with pytest.raises(EmptyPolytopeError):
        max_difference(P, 0, 1)


def test_max_difference_is_the_closure_entry():
    P = polytope_of(NU)
    assert max_difference(P, 1, 0) == 3
    assert max_difference(P, 0, 1) == 0
    assert max_difference(P, 2, 0) == 3
    assert max_difference(P, 0, 2) == 1
    assert max_difference(P, 0, 0) == 0


def test_max_difference_index_validation():
    P = polytope_of(NU)
    with pytest.raises(IndexError):
        max_difference(P, 0, 3)
    with pytest.raises(IndexError):
        max_difference(P, -1, 0)


def test_enumeration_matches_naive_box_scan():
    rng = random.Random(5)
    for _ in range(500):
        n = rng.randint(2, 4)
        nu = _random(rng, n)
        got = [p.coords for p in enumerate_lattice_points(polytope_of(nu))]
        assert got == naive_box_points(nu.entries)


def test_max_difference_matches_point_maximum():
    rng = random.Random(19)
    checked = 0
    while checked < 200:
        n = rng.randint(2, 4)
        nu = _random(rng, n)
        P = polytope_of(nu)
        if is_empty(P):
            continue
        checked += 1
        pts = [p.coords for p in enumerate_lattice_points(P)]
        for i in range(n):
            for j in range(n):
                assert max_difference(P, i, j) == brute_max_difference(pts, i, j)


def test_enumeration_limit_guard():
    wide = ExponentMatrix([[0, 40, 40], [40, 0, 40], [40, 40, 0]])
    with pytest.raises(EnumerationLimitError):
        enumerate_lattice_points(polytope_of(wide), max_points=100)
    # empty regions exit before the guard can trip
    empty = ExponentMatrix([[0, -5], [1, 0]])
    assert enumerate_lattice_points(polytope_of(empty), max_points=1) == []


def test_is_reduced_frozen_cases():
    assert is_reduced(NU)
    assert not is_reduced(NU_PRIME)
    assert not is_reduced(ExponentMatrix([[0, -2], [1, 0]]))
    assert is_reduced(ExponentMatrix([[0, 0], [0, 0]]))


def test_is_reduced_means_fixed_by_closure():
    rng = random.Random(29)
    for _ in range(400):
        nu = _random(rng, rng.randint(2, 4))
        closed = minplus_closure(nu.entries)
        expected = closed is not None and closed == [list(r) for r in nu.entries]
        assert is_reduced(nu) == expected


def test_lattice_point_validation():
    with pytest.raises(ValueError):
        LatticePoint((1, 0, 0))
    p = LatticePoint((0, 2, 1))
    q = LatticePoint((0, 2, 2))
    assert p < q and p != q
    assert list(p) == [0, 2, 1]


def _random(rng, n, lo=-3, hi=5):
    return ExponentMatrix(
        [[rng.randint(lo, hi) if i != j else 0 for j in range(n)] for i in range(n)]
    )
