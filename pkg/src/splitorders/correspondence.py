"""The two directions of the order / region correspondence.

A vertex of the standard apartment is an integer vector m, taken up to a
common shift, and stands for the homothety class of the diagonal lattice
with elementary divisor exponents m.  Its maximal order has exponent
matrix ``m_i - m_j``; intersecting a family of maximal orders takes the
entrywise maximum of their exponent matrices.  Conversely the maximal
orders containing S(nu) are exactly the integer points of the difference
region of ``nu``, and for reduced ``nu`` the two directions invert each
other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatchError, EmptyVertexListError
from .exponent import ExponentMatrix, order_hull
from .polytope import (
    DEFAULT_POINT_LIMIT,
    enumerate_lattice_points,
    is_reduced,
    polytope_of,
)


class ApartmentVertex:
    """Vertex of the standard apartment, normalized so the first coordinate is 0."""

    __slots__ = ("m",)

    def __init__(self, coords: Iterable[int]):
        m = tuple(int(x) for x in coords)
        if len(m) < 2:
            raise ValueError("vertex needs at least 2 coordinates")
        if m[0] != 0:
            base = m[0]
            m = tuple(x - base for x in m)
        self.m = m

    @property
    def n(self) -> int:
        return len(self.m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ApartmentVertex):
            return NotImplemented
        return self.m == other.m

    def __hash__(self) -> int:
        return hash(self.m)

    def __lt__(self, other: "ApartmentVertex") -> bool:
        return self.m < other.m

    def __repr__(self) -> str:
        return f"ApartmentVertex({list(self.m)})"


def maximal_order_exponents(v: ApartmentVertex) -> ExponentMatrix:
    """Exponent matrix of the maximal order at vertex v: entry (i, j) is m_i - m_j."""
    m = v.m
    return ExponentMatrix([[mi - mj for mj in m] for mi in m])


def intersect_maximal(vertices: Sequence[ApartmentVertex]) -> ExponentMatrix:
    """Exponent matrix of the intersection of the maximal orders at the vertices.

    Ideals intersect to the larger exponent, so the result is the
    entrywise maximum of the coordinate differences over the family.

    Raises EmptyVertexListError on an empty family and
    DimensionMismatchError when the vertices disagree on n.
    """
    vs = list(vertices)
    if not vs:
        raise EmptyVertexListError("intersection over an empty vertex family")
    n = vs[0].n
    if any(v.n != n for v in vs):
        raise DimensionMismatchError("vertices of different dimension")
    entries = [
        [max(v.m[i] - v.m[j] for v in vs) for j in range(n)] for i in range(n)
    ]
    return ExponentMatrix(entries)


def maximal_orders_containing(
    nu: ExponentMatrix, *, max_points: int = DEFAULT_POINT_LIMIT
) -> list[ApartmentVertex]:
    """Vertices whose maximal orders contain S(nu).

    These are exactly the integer points of the difference region of
    ``nu``: the vertex m contains S(nu) iff m_i - m_j <= nu[i][j] for all
    i, j.  Note the criterion is the system of difference bounds, not an
    entrywise comparison of exponent matrices.
    """
    points = enumerate_lattice_points(polytope_of(nu), max_points=max_points)
    return [ApartmentVertex(p.coords) for p in points]


@dataclass(frozen=True)
class RoundtripReport:
    """Outcome of sending an exponent matrix through both directions."""

    nu: ExponentMatrix
    hull: ExponentMatrix
    vertices: tuple[ApartmentVertex, ...]
    hull_fixed: bool
    input_reduced: bool
    reduced_fixed: bool

    @property
    def ok(self) -> bool:
        return self.hull_fixed and self.reduced_fixed

    def to_json_dict(self) -> dict:
        return {
            "input": self.nu.to_json_dict(),
            "hull": self.hull.to_json_dict(),
            "vertices": [list(v.m) for v in self.vertices],
            "hull_fixed": self.hull_fixed,
            "input_reduced": self.input_reduced,
            "reduced_fixed": self.reduced_fixed,
        }


def verify_roundtrip(nu: ExponentMatrix) -> RoundtripReport:
    """Check that intersecting the containing maximal orders recovers the hull.

    ``hull_fixed`` records whether the intersection of the vertices of the
    hull reproduces the hull exactly; ``reduced_fixed`` records whether a
    reduced input is recovered exactly (vacuously true otherwise).  Both
    flags hold for every input with a containing maximal order.

    Raises NegativeCycleError when no maximal order contains S(nu).
    """
    hull = order_hull(nu)
    vertices = tuple(maximal_orders_containing(hull))
    refix = intersect_maximal(vertices)
    input_reduced = is_reduced(nu)
    return RoundtripReport(
        nu=nu,
        hull=hull,
        vertices=vertices,
        hull_fixed=refix == hull,
        input_reduced=input_reduced,
        reduced_fixed=(not input_reduced) or refix == nu,
    )
