"""Split orders attached to apartments other than the standard one.

An apartment is named by an invertible change of basis gamma: its vertices
are the images gamma L of the diagonal lattices L, and the split orders it
carries are the conjugates gamma S(nu) gamma^(-1) of the standard ones.
Membership, intersection of maximal orders, and incidence of vertices all
transport along gamma, and the elementary divisors of a lattice pair do
not change under the transport at all.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .correspondence import ApartmentVertex, intersect_maximal
from .dvr import LocalMatrix, conjugate, elementary_divisors, in_split_order
from .errors import (
    DimensionMismatchError,
    NotAnOrderError,
    SingularConjugatorError,
    SingularInputError,
)
from .exponent import ExponentMatrix, order_hull
from .polytope import is_reduced


class Apartment:
    """Apartment named by an invertible change of basis from the standard frame."""

    __slots__ = ("gamma", "_gamma_inv")

    def __init__(self, gamma: LocalMatrix):
        try:
            inv = gamma.inverse()
        except SingularInputError as exc:
            raise SingularConjugatorError("apartment frame is singular") from exc
        self.gamma = gamma
        self._gamma_inv = inv

    @classmethod
    def standard(cls, n: int, prime: int) -> "Apartment":
        return cls(LocalMatrix.identity(n, prime))

    @property
    def n(self) -> int:
        return self.gamma.n

    @property
    def prime(self) -> int:
        return self.gamma.prime

    def is_standard(self) -> bool:
        return self.gamma == LocalMatrix.identity(self.n, self.prime)

    def to_standard(self, A: LocalMatrix) -> LocalMatrix:
        """Pull A back to the standard frame: gamma^(-1) A gamma."""
        self.gamma._require_compatible(A)
        return self._gamma_inv @ A @ self.gamma

    def from_standard(self, A: LocalMatrix) -> LocalMatrix:
        """Push A out of the standard frame: gamma A gamma^(-1)."""
        self.gamma._require_compatible(A)
        return self.gamma @ A @ self._gamma_inv

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Apartment):
            return NotImplemented
        return self.gamma == other.gamma

    def __repr__(self) -> str:
        return f"Apartment({self.gamma!r})"


class GeneralSplitOrder:
    """Conjugate gamma S(nu) gamma^(-1) of a reduced standard split order."""

    __slots__ = ("apartment", "nu")

    def __init__(self, apartment: Apartment, nu: ExponentMatrix):
        if apartment.n != nu.n:
            raise DimensionMismatchError(
                f"apartment has n = {apartment.n} but exponents have n = {nu.n}"
            )
        if not is_reduced(nu):
            raise NotAnOrderError("exponent matrix must be reduced")
        self.apartment = apartment
        self.nu = nu

    @property
    def n(self) -> int:
        return self.nu.n

    @property
    def prime(self) -> int:
        return self.apartment.prime

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneralSplitOrder):
            return NotImplemented
        return self.apartment == other.apartment and self.nu == other.nu

    def __repr__(self) -> str:
        return f"GeneralSplitOrder({self.apartment!r}, {self.nu!r})"

    def to_json_dict(self) -> dict:
        return {
            "gamma": self.apartment.gamma.to_json_dict()["entries"],
            "prime": self.prime,
            "nu": self.nu.to_json_dict(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "GeneralSplitOrder":
        if not isinstance(data, dict) or not {"gamma", "prime", "nu"} <= set(data):
            raise ValueError("expected an object with 'gamma', 'prime' and 'nu'")
        gamma = LocalMatrix(data["gamma"], data["prime"])
        return cls(Apartment(gamma), ExponentMatrix.from_json_dict(data["nu"]))


def incident(u: ApartmentVertex, v: ApartmentVertex) -> bool:
    """Whether two distinct vertices are joined by an edge.

    The classes are incident when representative lattices can be nested
    between a lattice and p times itself, which happens exactly when the
    coordinate differences v - u take two values at distance 1 (after any
    common shift they land in {0, 1}).
    """
    if u.n != v.n:
        raise DimensionMismatchError("vertices of different dimension")
    diffs = [b - a for a, b in zip(u.m, v.m)]
    return max(diffs) - min(diffs) == 1


def general_membership(S: GeneralSplitOrder, A: LocalMatrix) -> bool:
    """Whether A lies in gamma S(nu) gamma^(-1), by pulling A back to the standard frame."""
    if A.n != S.n:
        raise DimensionMismatchError(f"matrix has n = {A.n} but order has n = {S.n}")
    if A.prime != S.prime:
        raise ValueError(f"prime mismatch: {A.prime} vs {S.prime}")
    return in_split_order(S.apartment.to_standard(A), S.nu)


def intersect_in_apartment(
    ap: Apartment, vertices: Sequence[ApartmentVertex]
) -> GeneralSplitOrder:
    """Intersection of the maximal orders at the given vertices of the apartment.

    The exponent data is computed in the standard frame and is already
    reduced, so the hull step is the identity; the frame of ``ap`` only
    tags the result.
    """
    hull = order_hull(intersect_maximal(vertices))
    return GeneralSplitOrder(ap, hull)


def lattice_basis(v: ApartmentVertex, prime: int) -> LocalMatrix:
    """Diagonal basis matrix diag(p^{m_i}) of the lattice at vertex v."""
    return LocalMatrix.diagonal([Fraction(prime) ** e for e in v.m], prime)


def incident_lattices(L: LocalMatrix, Lp: LocalMatrix) -> bool:
    """Incidence of the homothety classes of two lattices.

    Determined by the elementary divisors: the classes are incident when
    the exponents take exactly two values at distance 1.
    """
    e = elementary_divisors(L, Lp)
    return e[-1] - e[0] == 1


def divisor_invariance_check(
    gamma: LocalMatrix, L: LocalMatrix, Lp: LocalMatrix
) -> bool:
    """Whether elementary divisors survive transport by gamma.

    Compares the divisors of (L, Lp) with those of (gamma L, gamma Lp),
    each computed from scratch on its own pair.
    """
    return elementary_divisors(L, Lp) == elementary_divisors(
        gamma @ L, gamma @ Lp
    )
