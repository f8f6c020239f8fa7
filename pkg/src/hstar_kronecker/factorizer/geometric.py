"""
Geometric Factorization Search

Decides whether a polynomial with nonnegative coefficients and constant term
1 is a product of geometric series 1 + z^e + ... + z^((gamma-1)e), and finds
one such product when it exists.

The search is complete: the smallest positive exponent present in f must be
the exponent of some factor, so only the length of that factor is branched on.
"""

from dataclasses import dataclass
from math import prod

from ..errors import InvalidInputError
from ..polyring import GeomSeries, IntPoly, is_kronecker
from ..simplex import SupportedQ, ell, g_poly, hstar


@dataclass(frozen=True)
class GeomFactorization:
    """Product of geometric series, kept sorted by (exponent, length)."""

    factors: tuple[GeomSeries, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(sorted(self.factors)))

    @classmethod
    def from_pairs(cls, pairs) -> "GeomFactorization":
        """Build from (e, gamma) pairs, dropping length-1 series."""
        return cls(tuple(GeomSeries(e, gamma) for e, gamma in pairs if gamma != 1))

    @classmethod
    def from_dict(cls, data: list[dict]) -> "GeomFactorization":
        return cls.from_pairs((item["e"], item["gamma"]) for item in data)

    def pairs(self) -> list[tuple[int, int]]:
        return [(f.exponent, f.length) for f in self.factors]

    def with_series(self, e: int, gamma: int) -> "GeomFactorization":
        """This product times one more series (a no-op for gamma == 1)."""
        if gamma == 1:
            return self
        return GeomFactorization(self.factors + (GeomSeries(e, gamma),))

    def expand(self) -> IntPoly:
        product = IntPoly.one()
        for factor in self.factors:
            product = product * factor.expand()
        return product

    @property
    def value_at_one(self) -> int:
        return prod(f.length for f in self.factors)

    def to_dict(self) -> list[dict]:
        return [f.to_dict() for f in self.factors]

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "".join(str(f) for f in self.factors)


def divide_by_series(f: IntPoly, e: int, gamma: int) -> IntPoly | None:
    """
    f / (1 + z^e + ... + z^((gamma-1)e)) when the quotient exists and has
    nonnegative coefficients, otherwise None.

    With f = q * G, consecutive coefficients satisfy
    q_i = f_i - f_(i-e) + q_(i-gamma*e), so one pass decides exactness.
    """
    c = f.coeffs
    top = len(c) - 1
    quotient_degree = top - (gamma - 1) * e
    if quotient_degree < 0:
        return None
    span = gamma * e
    q = [0] * (top + 1)
    for i in range(top + 1):
        value = c[i]
        if i >= e:
            value -= c[i - e]
        if i >= span:
            value += q[i - span]
        if i > quotient_degree:
            if value:
                return None
        elif value < 0:
            return None
        q[i] = value
    return IntPoly(tuple(q[: quotient_degree + 1]))


def _validate(f: IntPoly) -> None:
    if f.is_zero or f.coeffs[0] != 1:
        raise InvalidInputError(f"Geometric factorization needs constant term 1, got {f}")
    if min(f.coeffs) < 0:
        raise InvalidInputError(f"Geometric factorization needs nonnegative coefficients, got {f}")


def find_geometric_factorization(f: IntPoly) -> GeomFactorization | None:
    """
    Find a product of geometric series equal to f.

    Depth-first: the exponent is forced to the smallest positive exponent of
    the current quotient, lengths are tried in ascending order, and the
    first complete factorization wins. Lengths must divide the current value
    at 1 and fit within the current degree.

    Args:
        f: Polynomial with nonnegative coefficients and constant term 1.

    Returns:
        A factorization whose expansion is f, or None when none exists.
        f == 1 yields the empty factorization.

    Raises:
        InvalidInputError: If f has a negative coefficient or constant term != 1.
    """
    _validate(f)
    dead_ends: set[tuple[int, ...]] = set()

    def search(poly: IntPoly) -> list[tuple[int, int]] | None:
        if poly.degree == 0:
            return []
        if poly.coeffs in dead_ends:
            return None
        e = next(k for k in range(1, len(poly.coeffs)) if poly.coeffs[k])
        total = sum(poly.coeffs)
        gamma = 2
        while (gamma - 1) * e <= poly.degree and gamma <= total:
            if total % gamma == 0:
                quotient = divide_by_series(poly, e, gamma)
                if quotient is not None:
                    rest = search(quotient)
                    if rest is not None:
                        return [(e, gamma)] + rest
            gamma += 1
        dead_ends.add(poly.coeffs)
        return None

    found = search(f)
    return None if found is None else GeomFactorization.from_pairs(found)


def extend_to_hstar(q: SupportedQ, g_factorization: GeomFactorization | None) -> GeomFactorization | None:
    """
    An h* factorization from the outcome of the search on g.

    A factorization of g gains the length-ell series. Without one, h* is
    searched directly, since h* may factor while g does not. Callers must
    already know that g is Kronecker.
    """
    if g_factorization is not None:
        return g_factorization.with_series(1, ell(q))
    return find_geometric_factorization(hstar(q))


def hstar_geometric_factorization(q: SupportedQ) -> GeomFactorization | None:
    """
    A geometric factorization of h*(Delta_(1,q)), or None.

    Raises:
        NotRMultiplicityError: If q is not reflexive.
    """
    g = g_poly(q)
    if not is_kronecker(g)[0]:
        return None
    return extend_to_hstar(q, find_geometric_factorization(g))
