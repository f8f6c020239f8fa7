"""
Polynomial Ring

Exact univariate polynomials with integer coefficients: arithmetic, geometric
series, cyclotomic polynomials and the Kronecker decision.

Coefficients are Python integers, so nothing ever wraps around. Products take a
numpy int64 path only after a bound check proves every partial sum fits.
"""

import operator
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np
from sympy import divisors, isprime, sieve
from sympy.ntheory import primitive_root

from .errors import (
    InvalidInputError,
    NotDivisibleError,
    PolynomialDivisionByZero,
    ZeroPolynomialError,
)

# Largest magnitude a convolution partial sum may reach on the int64 path
_INT64_SAFE = 1 << 62

# Lower bound for the primes used by the modular root-of-unity screen
_SCREEN_PRIME_FLOOR = 1 << 20


def int_list(values, name: str, error: type[InvalidInputError] = InvalidInputError) -> tuple[int, ...]:
    """
    Entries of a decoded JSON array that must hold plain integers.

    Raises:
        error: If values is not a list or an entry is a bool, float or string.
    """
    if not isinstance(values, (list, tuple)):
        raise error(f"'{name}' must be a list of integers, got {values!r}")
    if any(isinstance(v, bool) or not isinstance(v, int) for v in values):
        raise error(f"'{name}' must contain only integers, got {values!r}")
    return tuple(values)


# =============================================================================
# IntPoly
# =============================================================================


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial; ``coeffs[k]`` is the coefficient of z^k."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        try:
            coeffs = tuple(operator.index(c) for c in self.coeffs)
        except TypeError:
            raise InvalidInputError(
                f"Polynomial coefficients must be integers, got {self.coeffs!r}"
            ) from None
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "IntPoly":
        return cls((0,) * exponent + (coefficient,))

    @classmethod
    def from_exponents(cls, exponents) -> "IntPoly":
        """Sum of z^e over an iterable of nonnegative exponents (with repetition)."""
        counts = Counter(int(e) for e in exponents)
        if not counts:
            return cls.zero()
        if min(counts) < 0:
            raise InvalidInputError(f"Negative exponent {min(counts)} in polynomial")
        coeffs = [0] * (max(counts) + 1)
        for e, count in counts.items():
            coeffs[e] = count
        return cls(tuple(coeffs))

    @classmethod
    def from_dict(cls, data: dict) -> "IntPoly":
        """Build from the JSON form {"coeffs": [c0, c1, ...]}."""
        if not isinstance(data, dict) or "coeffs" not in data:
            raise InvalidInputError("Polynomial JSON needs a 'coeffs' list")
        return cls(int_list(data["coeffs"], "coeffs"))

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return poly_mul(self, other)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self[k] + other[k] for k in range(size)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __call__(self, t: int) -> int:
        return eval_at(self, t)

    def reversed(self) -> "IntPoly":
        """The reciprocal polynomial z^deg f(1/z)."""
        return IntPoly(self.coeffs[::-1])

    def to_dict(self) -> dict:
        """Convert polynomial to its JSON form."""
        return {"coeffs": list(self.coeffs)}

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "z" if k == 1 else f"z^{k}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """
    Exact product of two polynomials.

    Uses numpy's int64 convolution when max|a| * max|b| * min(len a, len b)
    stays below 2^62, and Python integers otherwise.
    """
    if a.is_zero or b.is_zero:
        return IntPoly.zero()
    ca, cb = a.coeffs, b.coeffs
    bound = max(map(abs, ca)) * max(map(abs, cb)) * min(len(ca), len(cb))
    if bound < _INT64_SAFE:
        product = np.convolve(np.asarray(ca, dtype=np.int64), np.asarray(cb, dtype=np.int64))
        return IntPoly(tuple(product.tolist()))
    out = [0] * (len(ca) + len(cb) - 1)
    for i, x in enumerate(ca):
        if x:
            for j, y in enumerate(cb):
                out[i + j] += x * y
    return IntPoly(tuple(out))


def try_exact_div(a: IntPoly, b: IntPoly) -> IntPoly | None:
    """
    Quotient a / b when b divides a in Z[z], otherwise None.

    Raises:
        PolynomialDivisionByZero: If b is the zero polynomial.
    """
    if b.is_zero:
        raise PolynomialDivisionByZero("Division by the zero polynomial")
    if a.is_zero:
        return IntPoly.zero()
    if a.degree < b.degree:
        return None

    db = b.degree
    lead = b.coeffs[-1]
    rem = list(a.coeffs)
    quotient = [0] * (a.degree - db + 1)
    for k in range(len(quotient) - 1, -1, -1):
        c = rem[k + db]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            return None
        quotient[k] = q
        for j, bj in enumerate(b.coeffs):
            if bj:
                rem[k + j] -= q * bj
    if any(rem[:db]):
        return None
    return IntPoly(tuple(quotient))


def poly_exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """
    Exact quotient a / b.

    Raises:
        PolynomialDivisionByZero: If b is the zero polynomial.
        NotDivisibleError: If the division leaves a remainder or a
            non-integer quotient coefficient.
    """
    quotient = try_exact_div(a, b)
    if quotient is None:
        raise NotDivisibleError(f"{b} does not divide {a}")
    return quotient


def eval_at(f: IntPoly, t: int) -> int:
    """Exact value of f at the integer t (Horner)."""
    value = 0
    for c in reversed(f.coeffs):
        value = value * t + c
    return value


def is_palindromic(f: IntPoly, degree: int | None = None) -> bool:
    """Whether f_i == f_{degree-i} for 0 <= i <= degree (default: deg f)."""
    n = f.degree if degree is None else degree
    if f.degree > n:
        return False
    return all(f[i] == f[n - i] for i in range(n + 1))


# =============================================================================
# Geometric series
# =============================================================================


@lru_cache(maxsize=4096)
def geometric_series(e: int, gamma: int) -> IntPoly:
    """
    1 + z^e + z^(2e) + ... + z^((gamma-1)e).

    Raises:
        InvalidInputError: If e < 1 or gamma < 2.
    """
    if e < 1 or gamma < 2:
        raise InvalidInputError(
            f"Geometric series needs exponent >= 1 and length >= 2, got e={e}, gamma={gamma}"
        )
    coeffs = [0] * ((gamma - 1) * e + 1)
    coeffs[::e] = [1] * gamma
    return IntPoly(tuple(coeffs))


@dataclass(frozen=True, order=True)
class GeomSeries:
    """A geometric series in powers of z with the given exponent and length."""

    exponent: int
    length: int

    def __post_init__(self):
        if self.exponent < 1 or self.length < 2:
            raise InvalidInputError(
                f"Geometric series needs exponent >= 1 and length >= 2, "
                f"got e={self.exponent}, gamma={self.length}"
            )

    def expand(self) -> IntPoly:
        return geometric_series(self.exponent, self.length)

    def to_dict(self) -> dict:
        return {"e": self.exponent, "gamma": self.length}

    def __str__(self) -> str:
        terms = ["1"]
        for i in range(1, self.length):
            power = i * self.exponent
            terms.append("z" if power == 1 else f"z^{power}")
        return "(" + "+".join(terms) + ")"


# =============================================================================
# Cyclotomic polynomials
# =============================================================================


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """
    The d-th cyclotomic polynomial, as (z^d - 1) over the product of
    Phi_e for the proper divisors e of d.

    Raises:
        InvalidInputError: If d < 1.
    """
    if d < 1:
        raise InvalidInputError(f"Cyclotomic index must be positive, got {d}")
    numerator = IntPoly((-1,) + (0,) * (d - 1) + (1,))
    denominator = IntPoly.one()
    for e in divisors(d)[:-1]:
        denominator = denominator * cyclotomic(e)
    return poly_exact_div(numerator, denominator)


@lru_cache(maxsize=1024)
def _kronecker_candidates(degree: int) -> tuple[tuple[int, int], ...]:
    """All (d, phi(d)) with phi(d) <= degree; phi(d) >= sqrt(d/2) caps the scan."""
    limit = 2 * degree * degree + 6
    return tuple(
        (d, phi)
        for d, phi in enumerate(sieve.totientrange(1, limit + 1), start=1)
        if phi <= degree
    )


@lru_cache(maxsize=None)
def _screen_point(d: int) -> tuple[int, int]:
    """A prime p = 1 (mod d) and an element of exact order d modulo p."""
    k = max(1, -(-_SCREEN_PRIME_FLOOR // d))
    while not isprime(k * d + 1):
        k += 1
    p = k * d + 1
    return p, pow(primitive_root(p), k, p)


@lru_cache(maxsize=1024)
def _screen_table(degree: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Candidate orders d with their screen primes and elements, as int64 arrays."""
    orders = [d for d, _ in _kronecker_candidates(degree)]
    points = [_screen_point(d) for d in orders]
    return (
        np.array(orders, dtype=np.int64),
        np.array([p for p, _ in points], dtype=np.int64),
        np.array([w for _, w in points], dtype=np.int64),
    )


def _may_vanish_at_order(f: IntPoly, d: int) -> bool:
    """
    False when Phi_d certainly does not divide f.

    If Phi_d | f then f vanishes mod p at every element of order d, so a
    nonzero residue rules d out. A zero residue still needs exact division.
    """
    p, omega = _screen_point(d)
    value = 0
    for c in reversed(f.coeffs):
        value = (value * omega + c) % p
    return value == 0


def _vanishing_orders(f: IntPoly) -> list[int]:
    """
    Candidate orders d whose screen does not rule out Phi_d | f, ascending.

    All candidates are screened together with one vectorized Horner pass.
    Products of two residues fit in int64 while screen primes stay below 2^31.
    """
    orders, primes, points = _screen_table(f.degree)
    if max(map(abs, f.coeffs)) >= _INT64_SAFE:
        return [int(d) for d in orders if _may_vanish_at_order(f, int(d))]
    residues = np.asarray(f.coeffs, dtype=np.int64)[:, None] % primes[None, :]
    value = np.zeros(len(orders), dtype=np.int64)
    for row in residues[::-1]:
        value = (value * points + row) % primes
    return orders[value == 0].tolist()


@dataclass(frozen=True)
class CyclotomicMultiset:
    """Product of Phi_d^m over entries (d, m), sorted by d."""

    entries: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "CyclotomicMultiset":
        return cls(tuple(sorted((d, m) for d, m in counts.items() if m > 0)))

    def as_counts(self) -> Counter:
        return Counter(dict(self.entries))

    def merge(self, other: "CyclotomicMultiset") -> "CyclotomicMultiset":
        return CyclotomicMultiset.from_counts(self.as_counts() + other.as_counts())

    def expand(self) -> IntPoly:
        product = IntPoly.one()
        for d, m in self.entries:
            for _ in range(m):
                product = product * cyclotomic(d)
        return product

    @property
    def degree(self) -> int:
        return sum(cyclotomic(d).degree * m for d, m in self.entries)

    def to_dict(self) -> list[dict]:
        return [{"d": d, "mult": m} for d, m in self.entries]

    def __str__(self) -> str:
        if not self.entries:
            return "1"
        return " ".join(f"Phi{d}" if m == 1 else f"Phi{d}^{m}" for d, m in self.entries)


def is_kronecker(f: IntPoly) -> tuple[bool, CyclotomicMultiset | None]:
    """
    Decide whether f is a product of cyclotomic polynomials.

    Cheap necessary conditions run first: f monic, |f(0)| = 1, f equal to
    plus or minus its reciprocal, and |f_i| <= C(deg f, i). Then Phi_d is
    divided out for every d with phi(d) <= current degree, in increasing d.

    Args:
        f: Nonzero integer polynomial.

    Returns:
        (True, multiset) when f factors completely; (False, None) otherwise.

    Raises:
        ZeroPolynomialError: If f is zero.
    """
    if f.is_zero:
        raise ZeroPolynomialError("The zero polynomial has no cyclotomic factorization")
    coeffs = f.coeffs
    if coeffs[-1] != 1:
        return False, None
    n = f.degree
    if n == 0:
        return True, CyclotomicMultiset()
    if abs(coeffs[0]) != 1:
        return False, None
    mirrored = coeffs[::-1]
    if mirrored != coeffs and mirrored != tuple(-c for c in coeffs):
        return False, None
    if any(abs(c) > comb(n, i) for i, c in enumerate(coeffs)):
        return False, None

    # Distinct Phi_d are coprime, so screening f once covers every quotient
    remaining = f
    found: Counter = Counter()
    for d in _vanishing_orders(f):
        factor = cyclotomic(d)
        while factor.degree <= remaining.degree:
            quotient = try_exact_div(remaining, factor)
            if quotient is None:
                break
            remaining = quotient
            found[d] += 1
        if remaining.degree == 0:
            break

    if remaining.coeffs == (1,):
        return True, CyclotomicMultiset.from_counts(found)
    return False, None
