"""Exact arithmetic over a discrete valuation ring inside the rationals.

For a fixed prime p the valuation ring O consists of the rationals whose
reduced denominator is coprime to p; the uniformizer is p itself and the
valuation of a rational is the exponent of p in its factorization.  A
matrix is stored as an integer numerator matrix together with a single
positive denominator, so products, inverses and triangularizations are
exact; nothing is ever rounded.

The module provides membership tests against exponent matrices and
apartment vertices, conjugation, a canonical upper-triangular form under
the integral unit group, elementary divisors of lattice pairs, and a
randomized check that sets of prescribed valuations are multiplicatively
closed.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .correspondence import ApartmentVertex
from .errors import (
    AlreadyDiagonalError,
    DimensionMismatchError,
    NonIntegralInputError,
    SingularConjugatorError,
    SingularInputError,
)
from .exponent import ExponentMatrix, first_violation

INFINITE = math.inf  # valuation of zero

_RationalLike = Union[int, str, Fraction]


def _check_prime(p: int) -> int:
    p = int(p)
    if p < 2:
        raise ValueError(f"prime must be >= 2, got {p}")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"{p} is not prime")
        d += 1
    return p


def _int_valuation(x: int, p: int):
    if x == 0:
        return INFINITE
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def rational_valuation(value: _RationalLike, prime: int):
    """p-adic valuation of an exact rational; zero has infinite valuation."""
    prime = _check_prime(prime)
    f = Fraction(value)
    if f == 0:
        return INFINITE
    v = _int_valuation(f.numerator, prime)
    if v == 0:
        return -_int_valuation(f.denominator, prime)
    return v


@dataclass(frozen=True)
class LocalScalar:
    """Exact rational together with the prime of its valuation."""

    value: Fraction
    prime: int

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        object.__setattr__(self, "prime", _check_prime(self.prime))

    def valuation(self):
        return rational_valuation(self.value, self.prime)

    def is_integral(self) -> bool:
        return self.value.denominator % self.prime != 0

    def in_ideal(self, m: int) -> bool:
        """Whether the valuation is at least m."""
        return self.value == 0 or self.valuation() >= m

    def _coerce(self, other) -> Fraction:
        if isinstance(other, LocalScalar):
            if other.prime != self.prime:
                raise ValueError(
                    f"prime mismatch: {self.prime} vs {other.prime}"
                )
            return other.value
        return Fraction(other)

    def __add__(self, other):
        return LocalScalar(self.value + self._coerce(other), self.prime)

    __radd__ = __add__

    def __sub__(self, other):
        return LocalScalar(self.value - self._coerce(other), self.prime)

    def __mul__(self, other):
        return LocalScalar(self.value * self._coerce(other), self.prime)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return LocalScalar(self.value / self._coerce(other), self.prime)

    def __neg__(self):
        return LocalScalar(-self.value, self.prime)

    def __str__(self) -> str:
        return f"{self.value} (v_{self.prime} = {self.valuation()})"


class LocalMatrix:
    """Square matrix of exact rationals sharing one prime.

    Entries are kept as one integer numerator matrix over a common
    positive denominator; the pair is not reduced eagerly, and equality
    compares cross products, so values are exact regardless of form.
    """

    __slots__ = ("n", "prime", "nums", "den")

    def __init__(self, rows: Sequence[Sequence[_RationalLike]], prime: int):
        p = _check_prime(prime)
        fracs = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(fracs)
        if n == 0 or any(len(row) != n for row in fracs):
            raise ValueError("matrix must be square and nonempty")
        den = 1
        for row in fracs:
            for f in row:
                den = den * f.denominator // math.gcd(den, f.denominator)
        nums = tuple(
            tuple(int(f.numerator * (den // f.denominator)) for f in row)
            for row in fracs
        )
        self.n = n
        self.prime = p
        self.nums = nums
        self.den = den

    @classmethod
    def _from_raw(
        cls, nums: Sequence[Sequence[int]], den: int, prime: int
    ) -> "LocalMatrix":
        if den < 1:
            raise ValueError("denominator must be positive")
        obj = object.__new__(cls)
        obj.n = len(nums)
        obj.prime = prime
        obj.nums = tuple(tuple(row) for row in nums)
        obj.den = den
        return obj

    @classmethod
    def identity(cls, n: int, prime: int) -> "LocalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], prime)

    @classmethod
    def diagonal(cls, values: Sequence[_RationalLike], prime: int) -> "LocalMatrix":
        n = len(values)
        return cls(
            [[values[i] if i == j else 0 for j in range(n)] for i in range(n)], prime
        )

    @classmethod
    def matrix_unit(
        cls, n: int, i: int, j: int, prime: int, exponent: int = 0
    ) -> "LocalMatrix":
        """p^exponent times the matrix unit E(i, j)."""
        value = Fraction(prime) ** exponent
        rows = [[0] * n for _ in range(n)]
        rows[i][j] = value
        return cls(rows, prime)

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(self.nums[i][j], self.den)

    def scalar(self, i: int, j: int) -> LocalScalar:
        return LocalScalar(self.entry(i, j), self.prime)

    def fractions(self) -> tuple[tuple[Fraction, ...], ...]:
        den = self.den
        return tuple(tuple(Fraction(x, den) for x in row) for row in self.nums)

    def valuation(self, i: int, j: int):
        num = self.nums[i][j]
        if num == 0:
            return INFINITE
        return _int_valuation(num, self.prime) - _int_valuation(self.den, self.prime)

    def valuation_matrix(self) -> tuple:
        vden = _int_valuation(self.den, self.prime)
        return tuple(
            tuple(
                INFINITE if x == 0 else _int_valuation(x, self.prime) - vden
                for x in row
            )
            for row in self.nums
        )

    def is_integral(self) -> bool:
        """Whether every entry lies in the valuation ring."""
        vden = _int_valuation(self.den, self.prime)
        if vden == 0:
            return True
        pk = self.prime**vden
        return all(x % pk == 0 for row in self.nums for x in row)

    def is_diagonal(self) -> bool:
        return all(
            self.nums[i][j] == 0
            for i in range(self.n)
            for j in range(self.n)
            if i != j
        )

    def _require_compatible(self, other: "LocalMatrix") -> None:
        if not isinstance(other, LocalMatrix):
            raise TypeError("expected a LocalMatrix")
        if self.n != other.n:
            raise DimensionMismatchError(f"dimensions {self.n} and {other.n} differ")
        if self.prime != other.prime:
            raise ValueError(f"prime mismatch: {self.prime} vs {other.prime}")

    def __matmul__(self, other: "LocalMatrix") -> "LocalMatrix":
        self._require_compatible(other)
        n = self.n
        a = self.nums
        b = other.nums
        rows = []
        for i in range(n):
            ai = a[i]
            rows.append(
                tuple(sum(ai[k] * b[k][j] for k in range(n)) for j in range(n))
            )
        return LocalMatrix._from_raw(rows, self.den * other.den, self.prime)

    def __add__(self, other: "LocalMatrix") -> "LocalMatrix":
        self._require_compatible(other)
        da, db = self.den, other.den
        rows = tuple(
            tuple(x * db + y * da for x, y in zip(ra, rb))
            for ra, rb in zip(self.nums, other.nums)
        )
        return LocalMatrix._from_raw(rows, da * db, self.prime)

    def __sub__(self, other: "LocalMatrix") -> "LocalMatrix":
        return self + (-other)

    def __neg__(self) -> "LocalMatrix":
        return LocalMatrix._from_raw(
            tuple(tuple(-x for x in row) for row in self.nums), self.den, self.prime
        )

    def scale(self, c: _RationalLike) -> "LocalMatrix":
        f = Fraction(c)
        rows = tuple(tuple(x * f.numerator for x in row) for row in self.nums)
        return LocalMatrix._from_raw(rows, self.den * f.denominator, self.prime)

    def transpose(self) -> "LocalMatrix":
        return LocalMatrix._from_raw(
            tuple(zip(*self.nums)), self.den, self.prime
        )

    def det(self) -> Fraction:
        n = self.n
        work = [[Fraction(x, self.den) for x in row] for row in self.nums]
        sign = 1
        result = Fraction(1)
        for col in range(n):
            pivot_row = None
            for r in range(col, n):
                if work[r][col] != 0:
                    pivot_row = r
                    break
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != col:
                work[col], work[pivot_row] = work[pivot_row], work[col]
                sign = -sign
            pivot = work[col][col]
            result *= pivot
            for r in range(col + 1, n):
                if work[r][col]:
                    f = work[r][col] / pivot
                    row = work[r]
                    prow = work[col]
                    for c in range(col, n):
                        row[c] -= f * prow[c]
        return result * sign

    def inverse(self) -> "LocalMatrix":
        """Exact inverse; raises SingularInputError when the determinant is zero."""
        n = self.n
        work = [[Fraction(x, self.den) for x in row] for row in self.nums]
        aug = [
            [Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)
        ]
        for col in range(n):
            pivot_row = None
            for r in range(col, n):
                if work[r][col] != 0:
                    pivot_row = r
                    break
            if pivot_row is None:
                raise SingularInputError("matrix is singular")
            if pivot_row != col:
                work[col], work[pivot_row] = work[pivot_row], work[col]
                aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
            pivot = work[col][col]
            if pivot != 1:
                inv = 1 / pivot
                work[col] = [x * inv for x in work[col]]
                aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and work[r][col]:
                    f = work[r][col]
                    work[r] = [x - f * y for x, y in zip(work[r], work[col])]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return LocalMatrix(aug, self.prime)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LocalMatrix):
            return NotImplemented
        if self.n != other.n or self.prime != other.prime:
            return False
        da, db = self.den, other.den
        return all(
            x * db == y * da
            for ra, rb in zip(self.nums, other.nums)
            for x, y in zip(ra, rb)
        )

    def __hash__(self) -> int:
        return hash((self.prime, self.fractions()))

    def __repr__(self) -> str:
        rows = ", ".join(
            "[" + ", ".join(str(f) for f in row) + "]" for row in self.fractions()
        )
        return f"LocalMatrix([{rows}], prime={self.prime})"

    def to_json_dict(self) -> dict:
        return {
            "prime": self.prime,
            "entries": [
                [f"{f.numerator}/{f.denominator}" for f in row]
                for row in self.fractions()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "LocalMatrix":
        if not isinstance(data, dict) or "entries" not in data or "prime" not in data:
            raise ValueError("expected an object with 'entries' and 'prime' fields")
        return cls(data["entries"], data["prime"])


def in_split_order(A: LocalMatrix, nu: ExponentMatrix) -> bool:
    """Whether every entry of A has valuation at least the matching exponent."""
    if A.n != nu.n:
        raise DimensionMismatchError(
            f"matrix has n = {A.n} but exponents have n = {nu.n}"
        )
    p = A.prime
    vden = _int_valuation(A.den, p)
    nums = A.nums
    bounds = nu.entries
    for i in range(A.n):
        arow = nums[i]
        brow = bounds[i]
        for j in range(A.n):
            k = brow[j] + vden
            if k > 0 and arow[j] % p**k:
                return False
    return True


def lambda_membership(A: LocalMatrix, v: ApartmentVertex) -> bool:
    """Whether A lies in the maximal order at vertex v.

    Entry (i, j) must have valuation at least m_i - m_j; the criterion
    only depends on the homothety class of v.
    """
    if A.n != v.n:
        raise DimensionMismatchError(f"matrix has n = {A.n} but vertex has n = {v.n}")
    p = A.prime
    vden = _int_valuation(A.den, p)
    nums = A.nums
    m = v.m
    for i in range(A.n):
        arow = nums[i]
        mi = m[i]
        for j in range(A.n):
            k = mi - m[j] + vden
            if k > 0 and arow[j] % p**k:
                return False
    return True


def conjugate(xi: LocalMatrix, A: LocalMatrix) -> LocalMatrix:
    """Exact conjugate xi^(-1) A xi.

    Raises SingularConjugatorError when xi is not invertible.
    """
    xi._require_compatible(A)
    try:
        xi_inv = xi.inverse()
    except SingularInputError as exc:
        raise SingularConjugatorError("conjugating matrix is singular") from exc
    return xi_inv @ A @ xi


@dataclass(frozen=True)
class HermiteForm:
    """Canonical upper-triangular form under left multiplication by integral units.

    The diagonal entries are exact powers of the prime and each entry
    above the diagonal in column j is the canonical residue in
    {0, ..., p^{m_j} - 1}; the representative of the zero class is 0.
    """

    matrix: LocalMatrix
    exponents: tuple[int, ...]

    def is_diagonal(self) -> bool:
        return self.matrix.is_diagonal()


def _canonical_residue(value: Fraction, modulus: int) -> int:
    # modulus is a prime power; value must lie in the valuation ring
    if modulus == 1:
        return 0
    num = value.numerator % modulus
    den = value.denominator % modulus
    return num * pow(den, -1, modulus) % modulus


def hermite_normal_form(xi: LocalMatrix) -> tuple[HermiteForm, LocalMatrix]:
    """Canonical triangular form H of an integral invertible matrix.

    Returns (form, transform) with transform @ xi equal to form.matrix and
    transform an integral matrix of unit determinant.  Column pivots take
    the entry of least valuation, ties broken by lowest row index, so the
    computation is deterministic; the result is the unique canonical
    representative of the orbit of xi under integral left units.

    Raises NonIntegralInputError when an entry has negative valuation and
    SingularInputError when xi is singular.
    """
    p = xi.prime
    if not xi.is_integral():
        raise NonIntegralInputError("triangular form needs integral entries")
    n = xi.n
    a = [list(row) for row in xi.fractions()]
    u = [
        [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)
    ]

    def row_sub(target, source, factor):
        for c in range(n):
            if source[c]:
                target[c] -= factor * source[c]

    for col in range(n):
        best_row = None
        best_val = None
        for r in range(col, n):
            if a[r][col] == 0:
                continue
            v = rational_valuation(a[r][col], p)
            if best_val is None or v < best_val:
                best_row, best_val = r, v
        if best_row is None:
            raise SingularInputError("matrix is singular")
        if best_row != col:
            a[col], a[best_row] = a[best_row], a[col]
            u[col], u[best_row] = u[best_row], u[col]
        pivot = a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] / pivot
                row_sub(a[r], a[col], f)
                row_sub(u[r], u[col], f)

    exponents = []
    for i in range(n):
        v = rational_valuation(a[i][i], p)
        exponents.append(int(v))
        unit = a[i][i] / Fraction(p) ** int(v)
        if unit != 1:
            inv = 1 / unit
            a[i] = [x * inv for x in a[i]]
            u[i] = [x * inv for x in u[i]]

    for j in range(1, n):
        modulus = p ** exponents[j]
        pivot = Fraction(p) ** exponents[j]
        for i in range(j):
            if a[i][j] == 0:
                continue
            r = _canonical_residue(a[i][j], modulus)
            c = (a[i][j] - r) / pivot
            if c:
                row_sub(a[i], a[j], c)
                row_sub(u[i], u[j], c)
                a[i][j] = Fraction(r)

    form = HermiteForm(LocalMatrix(a, p), tuple(exponents))
    return form, LocalMatrix(u, p)


def diagonal_witness(form: HermiteForm) -> LocalMatrix:
    """0/1 diagonal D whose conjugate xi D xi^(-1) is not integral.

    Witnesses that a non-diagonal triangular form fails to normalize the
    diagonal torus: if the first nonzero entry above the diagonal sits at
    (i, j), the conjugate picks up (a_ij / p^{m_j})(d_j - d_i), which has
    negative valuation for d_i != d_j.  The diagonals are searched in
    lexicographic order and the first witness is returned.

    Raises AlreadyDiagonalError when no witness exists, which happens
    exactly when the form is diagonal.
    """
    xi = form.matrix
    n = xi.n
    xi_inv = xi.inverse()
    for bits in itertools.product((0, 1), repeat=n):
        D = LocalMatrix.diagonal(bits, xi.prime)
        if not (xi @ D @ xi_inv).is_integral():
            return D
    raise AlreadyDiagonalError(
        "every 0/1 diagonal conjugates integrally; the form is diagonal"
    )


def elementary_divisors(L: LocalMatrix, Lp: LocalMatrix) -> tuple[int, ...]:
    """Exponents of the elementary divisors of the lattice of Lp inside that of L.

    Columns of each matrix are lattice basis vectors.  The change of basis
    L^(-1) Lp is reduced to a diagonal of prime powers by row and column
    operations over the valuation ring, pivoting on the entry of least
    valuation (ties broken by lowest row, then column, index); exponents
    are returned in nondecreasing order and may be negative when the
    second lattice is not contained in the first.

    Raises SingularInputError when either basis is singular.
    """
    L._require_compatible(Lp)
    p = L.prime
    M = L.inverse() @ Lp
    n = M.n
    work = [list(row) for row in M.fractions()]
    exponents = []
    for t in range(n):
        best = None
        best_val = None
        for r in range(t, n):
            for c in range(t, n):
                if work[r][c] == 0:
                    continue
                v = rational_valuation(work[r][c], p)
                if best_val is None or v < best_val:
                    best, best_val = (r, c), v
        if best is None:
            raise SingularInputError("lattice basis is singular")
        r, c = best
        if r != t:
            work[t], work[r] = work[r], work[t]
        if c != t:
            for row in work:
                row[t], row[c] = row[c], row[t]
        pivot = work[t][t]
        exponents.append(int(best_val))
        for r2 in range(t + 1, n):
            if work[r2][t]:
                f = work[r2][t] / pivot
                work[r2] = [x - f * y for x, y in zip(work[r2], work[t])]
        for c2 in range(t + 1, n):
            if work[t][c2]:
                f = work[t][c2] / pivot
                for row in work:
                    row[c2] -= f * row[t]
    return tuple(sorted(exponents))


def _unit_numerator(rng: random.Random, p: int, bound: int) -> int:
    while True:
        u = rng.randint(1, bound)
        if u % p:
            return u


def sample_split_order_element(
    nu: ExponentMatrix, rng: random.Random, prime: int
) -> LocalMatrix:
    """Random element of S(nu) whose entries have valuation exactly nu[i][j].

    Each entry is a unit numerator, drawn uniformly from [1, p^4] coprime
    to p, scaled by p^{nu[i][j]}.
    """
    p = _check_prime(prime)
    bound = p**4
    shift = max(0, -min(x for row in nu.entries for x in row))
    den = p**shift
    rows = [
        [_unit_numerator(rng, p, bound) * p ** (e + shift) for e in row]
        for row in nu.entries
    ]
    return LocalMatrix._from_raw(rows, den, p)


def ring_closure_check(
    nu: ExponentMatrix,
    trials: int = 1000,
    seed: int = 0,
    prime: int = 2,
) -> Union[bool, tuple[LocalMatrix, LocalMatrix]]:
    """Randomized multiplicative-closure check for S(nu).

    For an order, samples ``trials`` pairs with sharp entry valuations and
    verifies every product stays in S(nu); returns True when all pass.
    Otherwise returns a witness pair (A, B) of elements of S(nu) whose
    product escapes; for a non-order the witness is built deterministically
    from the first violated triple (i, k, j) as p^{nu[i][k]} E(i, k) and
    p^{nu[k][j]} E(k, j).
    """
    p = _check_prime(prime)
    violation = first_violation(nu)
    if violation is not None:
        i, k, j = violation
        A = LocalMatrix.matrix_unit(nu.n, i, k, p, exponent=nu.entries[i][k])
        B = LocalMatrix.matrix_unit(nu.n, k, j, p, exponent=nu.entries[k][j])
        return (A, B)
    rng = random.Random(seed)
    for _ in range(trials):
        A = sample_split_order_element(nu, rng, p)
        B = sample_split_order_element(nu, rng, p)
        if not in_split_order(A @ B, nu):
            return (A, B)
    return True
