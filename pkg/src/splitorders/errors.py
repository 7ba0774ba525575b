"""Exception types shared across the package."""


class SplitOrderError(Exception):
    """Base class for every domain error raised by this package."""


class NonZeroDiagonalError(SplitOrderError, ValueError):
    """An exponent matrix has a nonzero diagonal entry.

    The diagonal encodes the exponents on the base ring positions, which
    must all be zero for the set to contain diag(O, ..., O).
    """


class NegativeCycleError(SplitOrderError, ValueError):
    """Some directed cycle of exponents has negative total weight.

    No maximal order contains the set, the difference region is empty,
    and the minimal closure diverges.
    """


class NotAnOrderError(SplitOrderError, ValueError):
    """The exponent matrix fails the multiplicative closure criterion."""


class EmptyPolytopeError(SplitOrderError, ValueError):
    """The difference region contains no point at all."""


class EnumerationLimitError(SplitOrderError, ValueError):
    """The bounding box exceeds the configured point-count guard."""


class EmptyVertexListError(SplitOrderError, ValueError):
    """An intersection was requested over an empty family of vertices."""


class DimensionMismatchError(SplitOrderError, ValueError):
    """Two operands do not share the same matrix dimension."""


class SingularInputError(SplitOrderError, ValueError):
    """A matrix that must be invertible has determinant zero."""


class SingularConjugatorError(SingularInputError):
    """The change-of-basis matrix of a conjugation is singular."""


class NonIntegralInputError(SplitOrderError, ValueError):
    """A matrix entry has negative valuation where an integral one is required."""


class AlreadyDiagonalError(SplitOrderError, ValueError):
    """No 0/1 diagonal witness exists because the triangular form is diagonal."""


class UnsupportedDimensionError(SplitOrderError, ValueError):
    """The operation is only defined for a specific matrix dimension."""
