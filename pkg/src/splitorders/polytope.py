"""Difference-constraint regions attached to exponent matrices.

The region of an n x n exponent matrix ``nu`` lives in coordinates
(x_0, ..., x_{n-1}) with x_0 pinned to 0 and consists of the points with

    x_i - x_j <= nu[i][j]        for all i, j.

Because the constraints against coordinate 0 read
``-nu[0][i] <= x_i <= nu[i][0]``, the region is always bounded.  Its
integer points are the vertices of the maximal orders containing S(nu),
and the exact maxima of the coordinate differences over the region are
minimal path sums in the arc-weighted digraph of ``nu``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import EmptyPolytopeError, EnumerationLimitError
from .exponent import ExponentMatrix, minplus_closure

DEFAULT_POINT_LIMIT = 10**6


class DifferencePolytope:
    """Region cut out by the two-sided difference bounds of an exponent matrix."""

    __slots__ = ("n", "upper")

    def __init__(self, upper: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in upper)
        n = len(rows)
        if n < 2 or any(len(row) != n for row in rows):
            raise ValueError("bound matrix must be square with n >= 2")
        if any(rows[i][i] != 0 for i in range(n)):
            raise ValueError("bound matrix must have zero diagonal")
        self.n = n
        self.upper = rows

    def difference_bound(self, i: int, j: int) -> int:
        """Declared upper bound on x_i - x_j."""
        return self.upper[i][j]

    def difference_range(self, i: int, j: int) -> tuple[int, int]:
        """Declared two-sided bound (lo, hi) with lo <= x_i - x_j <= hi."""
        return (-self.upper[j][i], self.upper[i][j])

    def contains(self, coords: Iterable[int]) -> bool:
        """Whether an integer point satisfies every declared constraint."""
        x = tuple(coords)
        if len(x) != self.n or x[0] != 0:
            return False
        u = self.upper
        for i in range(self.n):
            xi = x[i]
            ui = u[i]
            for j in range(self.n):
                if xi - x[j] > ui[j]:
                    return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DifferencePolytope):
            return NotImplemented
        return self.upper == other.upper

    def __hash__(self) -> int:
        return hash(self.upper)

    def __repr__(self) -> str:
        rows = ", ".join(repr(list(row)) for row in self.upper)
        return f"DifferencePolytope([{rows}])"


class LatticePoint:
    """Integer point of a difference region; the first coordinate is always 0."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[int]):
        c = tuple(int(x) for x in coords)
        if len(c) < 2:
            raise ValueError("lattice point needs at least 2 coordinates")
        if c[0] != 0:
            raise ValueError(f"first coordinate must be 0, got {c[0]}")
        self.coords = c

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticePoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __lt__(self, other: "LatticePoint") -> bool:
        return self.coords < other.coords

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self) -> str:
        return f"LatticePoint({list(self.coords)})"


def polytope_of(nu: ExponentMatrix) -> DifferencePolytope:
    """Difference region of an exponent matrix (entries become the upper bounds)."""
    return DifferencePolytope(nu.entries)


def is_empty(P: DifferencePolytope) -> bool:
    """Whether the region has no point; detected by a negative cycle of bounds."""
    return minplus_closure(P.upper) is None


def max_difference(P: DifferencePolytope, i: int, j: int) -> int:
    """Exact maximum of x_i - x_j over the region.

    This is the minimal path sum from i to j in the digraph of bounds,
    which the region attains.  Raises EmptyPolytopeError when the region
    is empty and IndexError on out-of-range coordinates.
    """
    n = P.n
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"coordinate pair ({i}, {j}) out of range for n = {n}")
    closed = minplus_closure(P.upper)
    if closed is None:
        raise EmptyPolytopeError("region is empty; differences have no maximum")
    return closed[i][j]


def enumerate_lattice_points(
    P: DifferencePolytope, *, max_points: int = DEFAULT_POINT_LIMIT
) -> list[LatticePoint]:
    """All integer points of the region, in lexicographic coordinate order.

    Scans the bounding box ``-upper[0][i] <= x_i <= upper[i][0]`` and keeps
    the points satisfying the remaining constraints; ranges are narrowed
    against already-fixed coordinates so infeasible branches are skipped
    early.  Returns the empty list exactly when the region is empty.

    Raises EnumerationLimitError when the bounding box holds more than
    ``max_points`` cells.
    """
    n = P.n
    u = P.upper
    if is_empty(P):
        return []
    box = 1
    for i in range(1, n):
        lo, hi = -u[0][i], u[i][0]
        box *= hi - lo + 1
        if box > max_points:
            raise EnumerationLimitError(
                f"bounding box has more than {max_points} cells"
            )
    points: list[LatticePoint] = []
    coords = [0] * n

    def extend(idx: int) -> None:
        if idx == n:
            points.append(LatticePoint(coords))
            return
        lo = -u[0][idx]
        hi = u[idx][0]
        uidx = u[idx]
        for i in range(1, idx):
            xi = coords[i]
            b = xi - u[i][idx]
            if b > lo:
                lo = b
            b = xi + uidx[i]
            if b < hi:
                hi = b
        for x in range(lo, hi + 1):
            coords[idx] = x
            extend(idx + 1)

    extend(1)
    return points


def is_reduced(nu: ExponentMatrix) -> bool:
    """Whether the region of ``nu`` is nonempty and every declared bound is attained.

    Computed geometrically: the exact maxima of the coordinate differences
    (minimal path sums) must reproduce every entry of ``nu``.  An empty
    region is never reduced.
    """
    closed = minplus_closure(nu.entries)
    if closed is None:
        return False
    entries = nu.entries
    for i in range(nu.n):
        if tuple(closed[i]) != entries[i]:
            return False
    return True
