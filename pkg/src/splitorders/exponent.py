"""Exponent matrices and the multiplicative order criterion.

An n x n integer matrix ``nu`` with zero diagonal describes the subset
``S(nu)`` of n x n matrices over a local field whose (i, j) entry has
p-adic valuation at least ``nu[i][j]``.  Any such set contains the ring
of diagonal integral matrices and is stable under addition; it is a ring,
hence an order, exactly when the triangle inequalities

    nu[i][k] + nu[k][j] >= nu[i][j]      for all i, j, k

hold.  The minimal closure of ``nu`` under these inequalities is computed
by all-pairs minimal path sums over the complete digraph whose arc
(i -> j) carries weight ``nu[i][j]``.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import (
    NegativeCycleError,
    NonZeroDiagonalError,
    NotAnOrderError,
    UnsupportedDimensionError,
)


class ExponentMatrix:
    """Square integer matrix with zero diagonal.

    Instances are immutable: entries are stored as a tuple of tuples and
    no mutating operations are provided.
    """

    __slots__ = ("n", "entries")

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(rows)
        if n < 2:
            raise ValueError(f"exponent matrix needs dimension >= 2, got {n}")
        if any(len(row) != n for row in rows):
            raise ValueError("exponent matrix must be square")
        for i in range(n):
            if rows[i][i] != 0:
                raise NonZeroDiagonalError(
                    f"diagonal entry ({i}, {i}) is {rows[i][i]}, expected 0"
                )
        self.n = n
        self.entries = rows

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExponentMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        rows = ", ".join(repr(list(row)) for row in self.entries)
        return f"ExponentMatrix([{rows}])"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "nu": [list(row) for row in self.entries]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExponentMatrix":
        if not isinstance(data, dict) or "nu" not in data:
            raise ValueError("expected an object with an 'nu' field")
        matrix = cls(data["nu"])
        declared = data.get("n")
        if declared is not None and declared != matrix.n:
            raise ValueError(f"declared n = {declared} but matrix has n = {matrix.n}")
        return matrix


def is_order(nu: ExponentMatrix) -> bool:
    """Whether ``S(nu)`` is closed under multiplication.

    Checks the triangle inequality ``nu[i][k] + nu[k][j] >= nu[i][j]``
    for every index triple by direct scan.
    """
    rows = nu.entries
    n = nu.n
    for i in range(n):
        ri = rows[i]
        for k in range(n):
            rik = ri[k]
            rk = rows[k]
            for j in range(n):
                if rik + rk[j] < ri[j]:
                    return False
    return True


def first_violation(nu: ExponentMatrix) -> Optional[tuple[int, int, int]]:
    """First triple (i, k, j) with ``nu[i][k] + nu[k][j] < nu[i][j]``.

    Indices are scanned in row-major order (i, then j, then k), so the
    result is deterministic.  Returns None when ``nu`` is an order.
    """
    rows = nu.entries
    n = nu.n
    for i in range(n):
        ri = rows[i]
        for j in range(n):
            rij = ri[j]
            for k in range(n):
                if ri[k] + rows[k][j] < rij:
                    return (i, k, j)
    return None


def minplus_closure(entries: Sequence[Sequence[int]]) -> Optional[list[list[int]]]:
    """All-pairs minimal path sums, or None when a negative cycle exists.

    Runs the classical relaxation over intermediate vertices.  Entry
    (i, j) of the result is the minimum, over all directed paths from i
    to j, of the total arc weight; the diagonal stays zero exactly when
    every cycle has nonnegative weight.
    """
    n = len(entries)
    dist = [list(row) for row in entries]
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            di = dist[i]
            dik = di[k]
            for j in range(n):
                s = dik + dk[j]
                if s < di[j]:
                    di[j] = s
    for i in range(n):
        if dist[i][i] < 0:
            return None
    return dist


def has_containing_maximal(nu: ExponentMatrix) -> bool:
    """Whether some maximal order contains ``S(nu)``.

    Equivalent to every directed cycle of exponents having nonnegative
    weight, and to the difference region of ``nu`` being nonempty.
    """
    return minplus_closure(nu.entries) is not None


def order_hull(nu: ExponentMatrix) -> ExponentMatrix:
    """Smallest order containing ``S(nu)``, as an exponent matrix.

    The hull replaces each entry by the minimal path sum between its
    indices; it leaves orders fixed and never increases an entry.

    Raises NegativeCycleError when no containing maximal order exists.
    """
    closed = minplus_closure(nu.entries)
    if closed is None:
        raise NegativeCycleError(
            "exponent matrix has a negative cycle; no order contains it"
        )
    return ExponentMatrix(closed)


def hijikata_normal_form(nu: ExponentMatrix) -> int:
    """Level of a 2 x 2 exponent order: the sum ``nu[0][1] + nu[1][0]``.

    Every 2 x 2 order of this shape is conjugate, by a diagonal change of
    basis, to the one with exponents [[0, 0], [level, 0]], and the level
    is the distance between the two endpoint vertices on the tree whose
    maximal orders cut out the order.

    Raises UnsupportedDimensionError unless n = 2, and NotAnOrderError
    when the sum is negative.
    """
    if nu.n != 2:
        raise UnsupportedDimensionError(f"normal form needs n = 2, got n = {nu.n}")
    level = nu.entries[0][1] + nu.entries[1][0]
    if level < 0:
        raise NotAnOrderError(f"nu[0][1] + nu[1][0] = {level} < 0, not an order")
    return level
