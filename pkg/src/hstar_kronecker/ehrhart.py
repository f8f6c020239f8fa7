"""
Ehrhart Polynomials

Recovers L(t) = |t Delta_(1,q) cap Z^n| from h* through
L(t) = sum_j h*_j C(t + n - j, n), checks Ehrhart positivity, and counts
lattice points directly as an independent oracle.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial, prod

import numpy as np

from .errors import DegreeExceedsDimensionError, InvalidInputError, ScaleExceededError
from .polyring import IntPoly, poly_exact_div
from .simplex import SupportedQ, hstar

logger = logging.getLogger(__name__)

# Oracle limits on dimension and dilation
ORACLE_MAX_DIMENSION = 6
ORACLE_MAX_DILATION = 5

# Largest bounding box the oracle scans
_ORACLE_MAX_BOX = 50_000_000


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial in t with exact rational coefficients; ``coeffs[k]`` multiplies t^k."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def is_positive(self) -> bool:
        """Every coefficient up to the degree is strictly positive."""
        return bool(self.coeffs) and all(c > 0 for c in self.coeffs)

    def to_dict(self) -> dict:
        return {
            "num": [c.numerator for c in self.coeffs],
            "den": [c.denominator for c in self.coeffs],
        }

    def __str__(self) -> str:
        """Descending powers, e.g. "3/2 t^2 + 3/2 t + 1"."""
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if magnitude == 1 else f"{magnitude} {power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)


def ehrhart_from_hstar(h: IntPoly, n: int) -> RationalPoly:
    """
    The Ehrhart polynomial of an n-dimensional polytope with the given h*.

    The shifted rising products P_j(t) = (t + n - j)(t + n - j - 1)...(t + 1 - j)
    are integer polynomials; P_j follows from P_(j-1) by one linear
    multiplication and one exact linear division. Only the final sum is
    divided by n!.

    Args:
        h: The h*-polynomial.
        n: Dimension, n >= 0.

    Returns:
        L(t) with exact rational coefficients.

    Raises:
        InvalidInputError: If n < 0.
        DegreeExceedsDimensionError: If deg h > n.
    """
    if n < 0:
        raise InvalidInputError(f"Dimension must be nonnegative, got {n}")
    if h.degree > n:
        raise DegreeExceedsDimensionError(f"h* has degree {h.degree} > dimension {n}")

    rising = IntPoly.one()
    for k in range(n):
        rising = rising * IntPoly((n - k, 1))

    total = IntPoly.zero()
    for j in range(h.degree + 1):
        if j:
            rising = poly_exact_div(rising * IntPoly((1 - j, 1)), IntPoly((n - j + 1, 1)))
        if h[j]:
            total = total + rising * IntPoly((h[j],))

    scale = factorial(n)
    return RationalPoly(tuple(Fraction(c, scale) for c in total.coeffs))


def is_ehrhart_positive(q: SupportedQ) -> bool:
    """Whether every coefficient of L(t) for Delta_(1,q) is positive."""
    return ehrhart_from_hstar(hstar(q), q.n).is_positive()


# =============================================================================
# Lattice-point oracle
# =============================================================================


def _scan(q: SupportedQ, t: int, strict: bool) -> int:
    """
    Count p in Z^n with t - sum(p) >= 0 and N p_i + q_i (t - sum(p)) >= 0,
    N = 1 + sum(q), over the box p_i in [-t q_i, t].

    Writing p = sum lambda_i e_i - mu q with lambda, mu >= 0 and
    sum lambda + mu = t gives mu = (t - sum(p)) / N and
    lambda_i = p_i + mu q_i, so these are exactly the facet inequalities.
    With strict=True all inequalities are strict (interior points).
    """
    if t < 0:
        raise InvalidInputError(f"Dilation must be nonnegative, got {t}")
    if q.n > ORACLE_MAX_DIMENSION or t > ORACLE_MAX_DILATION:
        raise ScaleExceededError(
            f"Oracle handles n <= {ORACLE_MAX_DIMENSION} and t <= {ORACLE_MAX_DILATION}, "
            f"got n={q.n}, t={t}"
        )
    entries = q.to_q()
    box = prod(t * qi + t + 1 for qi in entries)
    if box > _ORACLE_MAX_BOX:
        raise ScaleExceededError(f"Oracle box for {q} at t={t} has {box} points")
    logger.debug("Scanning %d box points for %s at t=%d", box, q, t)

    total = 1 + q.qsum
    inner = min(len(entries), 3)
    outer_q, inner_q = entries[: len(entries) - inner], np.array(entries[len(entries) - inner :])
    axes = [np.arange(-t * qi, t + 1, dtype=np.int64) for qi in inner_q]
    inner_points = np.stack([a.ravel() for a in np.meshgrid(*axes, indexing="ij")], axis=1)
    inner_sums = inner_points.sum(axis=1)

    def holds(values):
        return values > 0 if strict else values >= 0

    count = 0
    for prefix in product(*(range(-t * qi, t + 1) for qi in outer_q)):
        slack = t - sum(prefix) - inner_sums
        ok = holds(slack)
        for p, qi in zip(prefix, outer_q):
            ok &= holds(total * p + qi * slack)
        ok &= holds(total * inner_points + inner_q * slack[:, None]).all(axis=1)
        count += int(ok.sum())
    return count


def count_lattice_points(q: SupportedQ, t: int) -> int:
    """
    |t Delta_(1,q) cap Z^n| by direct enumeration.

    Raises:
        InvalidInputError: If t < 0.
        ScaleExceededError: If n > 6, t > 5 or the bounding box is too large.
    """
    return _scan(q, t, strict=False)


def count_interior_points(q: SupportedQ, t: int) -> int:
    """
    Lattice points in the interior of t Delta_(1,q).

    For reflexive q this equals L(t - 1) when t >= 1.

    Raises:
        InvalidInputError: If t < 0.
        ScaleExceededError: As for count_lattice_points.
    """
    return _scan(q, t, strict=True)
