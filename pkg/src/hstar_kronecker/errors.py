"""
Error Types

Every failure raised by the library is an HStarError. Input and arithmetic
failures are also ValueErrors, so callers that only guard against bad input
with ``except ValueError`` keep working.
"""


class HStarError(Exception):
    """Base class for all library errors."""


class InvalidInputError(HStarError, ValueError):
    """An argument is outside the domain an operation accepts."""


class EmptyInputError(InvalidInputError):
    """A q-vector or q-spec has no entries."""


class LengthMismatchError(InvalidInputError):
    """Support and multiplicity vectors have different lengths."""


class QSpecSyntaxError(InvalidInputError):
    """A q-spec string could not be parsed."""


class InvalidParametersError(InvalidInputError):
    """Family parameters produce a non-positive multiplicity or a degenerate support."""


class NotRMultiplicityError(HStarError, ValueError):
    """lcm(r) does not divide 1 + sum(x_i r_i)."""


class NotReflexiveError(HStarError, ValueError):
    """The simplex is not reflexive."""


class NotDesirableError(HStarError, ValueError):
    """An s-division is not a desirable division of the given q-vector."""


class InconsistentResiduesError(HStarError, ValueError):
    """A residue vector fails the pairwise gcd compatibility condition."""


class NotDivisibleError(HStarError, ValueError):
    """Exact polynomial division left a nonzero remainder."""


class ZeroPolynomialError(HStarError, ValueError):
    """An operation that needs a nonzero polynomial received zero."""


class PolynomialDivisionByZero(HStarError, ZeroDivisionError):
    """Division by the zero polynomial."""


class DegreeExceedsDimensionError(HStarError, ValueError):
    """An h*-polynomial has degree larger than the stated dimension."""


class ScaleExceededError(HStarError, ValueError):
    """The brute-force lattice-point oracle was asked for more than it can enumerate."""


class ConfigError(HStarError, ValueError):
    """An environment variable holds a malformed value."""
