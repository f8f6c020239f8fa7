"""
h* and g Polynomials

Closed formulas for the h*-polynomial of Delta_(1,q) and for its cofactor g
after removing the length-ell geometric series:

- hstar: sum over b of z^w(b), w(b) = b - sum_i floor(b q_i / (1 + sum q))
- g_poly: sum over alpha < lcm(r) of z^u(alpha),
  u(alpha) = alpha * ell - sum_i x_i floor(alpha / s_i)
- g_poly_via_crt: the same polynomial summed over compatible residue vectors
- g_two_support_fast: the double sum for r = (a, ka - 1)

Also the two constructions that act predictably on h* and g: appending
lcm(r) to the support, and the free sum of two reflexive simplices.
"""

from collections import Counter
from math import gcd, lcm, prod
from typing import Iterator

import numpy as np

from ..errors import (
    InconsistentResiduesError,
    InvalidInputError,
    InvalidParametersError,
    LengthMismatchError,
    NotDesirableError,
    NotReflexiveError,
)
from ..polyring import IntPoly, is_palindromic
from .qvector import SDivision, SupportedQ, ell, is_reflexive

# Products below this bound are computed on int64 arrays
_INT64_SAFE = 1 << 62


def _histogram(exponents: np.ndarray) -> IntPoly:
    return IntPoly(tuple(np.bincount(exponents).tolist()))


# =============================================================================
# h* and g by enumeration
# =============================================================================


def hstar(q: SupportedQ) -> IntPoly:
    """
    The h*-polynomial of Delta_(1,q).

    Works for any q, reflexive or not. The value at 1 is 1 + qsum.
    """
    total = 1 + q.qsum
    if total * max(q.r) < _INT64_SAFE:
        b = np.arange(total, dtype=np.int64)
        w = b.copy()
        for ri, xi in zip(q.r, q.x):
            w -= xi * (b * ri // total)
        return _histogram(w)
    return IntPoly.from_exponents(
        b - sum(xi * (b * ri // total) for ri, xi in zip(q.r, q.x)) for b in range(total)
    )


def g_poly(q: SupportedQ) -> IntPoly:
    """
    The g-polynomial, with h* = (1 + z + ... + z^(ell-1)) * g.

    Raises:
        NotRMultiplicityError: If q is not reflexive.
    """
    length = ell(q)
    alpha = np.arange(q.lcm_r, dtype=np.int64)
    u = alpha * length
    for si, xi in zip(q.s, q.x):
        u -= xi * (alpha // si)
    return _histogram(u)


def hibi_reflexive(q: SupportedQ) -> bool:
    """Reflexivity read off h*: palindromic of degree exactly n."""
    h = hstar(q)
    return h.degree == q.n and is_palindromic(h, q.n)


def interior_point_count(q: SupportedQ) -> int:
    """Lattice points in the interior of Delta_(1,q); the h* coefficient at z^n."""
    return hstar(q)[q.n]


# =============================================================================
# Generalized CRT
# =============================================================================


def _check_residues(s, i) -> tuple[tuple[int, ...], tuple[int, ...]]:
    s, i = tuple(s), tuple(i)
    if len(s) != len(i):
        raise LengthMismatchError(f"Moduli have {len(s)} entries but residues have {len(i)}")
    if not s:
        raise InvalidInputError("Need at least one modulus")
    for sj, ij in zip(s, i):
        if sj < 1 or not 0 <= ij < sj:
            raise InvalidInputError(f"Residue {ij} is outside res({sj})")
    return s, i


def crt_alpha(s, i) -> int:
    """
    The unique alpha in [0, lcm(s)) with alpha = i_j (mod s_j) for all j.

    Solved by merging congruences pairwise with modular inverses.

    Raises:
        InconsistentResiduesError: If gcd(s_j, s_k) does not divide i_j - i_k.
    """
    s, i = _check_residues(s, i)
    alpha, modulus = i[0], s[0]
    for sj, ij in zip(s[1:], i[1:]):
        g = gcd(modulus, sj)
        if (ij - alpha) % g:
            raise InconsistentResiduesError(f"Residues {i} are incompatible for moduli {s}")
        step = modulus // g
        reduced = sj // g
        t = ((ij - alpha) // g) * pow(step, -1, reduced) % reduced if reduced > 1 else 0
        alpha += modulus * t
        modulus = step * sj
        alpha %= modulus
    return alpha


def crt_alpha_pairwise_coprime(s, i) -> int:
    """
    alpha for pairwise coprime s: sum of i_j M_j (M_j^-1 mod s_j), M_j = prod(s) / s_j.

    Raises:
        InvalidInputError: If s is not pairwise coprime.
    """
    s, i = _check_residues(s, i)
    total = prod(s)
    if lcm(*s) != total:
        raise InvalidInputError(f"Moduli {s} are not pairwise coprime")
    alpha = 0
    for sj, ij in zip(s, i):
        others = total // sj
        alpha += ij * others * (pow(others, -1, sj) if sj > 1 else 0)
    return alpha % total


def omega(q: SupportedQ, i) -> tuple[int, ...]:
    """
    Quotient digits omega_j = floor(alpha(i) / s_j), so alpha = omega_j s_j + i_j.

    Raises:
        InconsistentResiduesError: If i is not a compatible residue vector.
    """
    alpha = crt_alpha(q.s, i)
    return tuple(alpha // sj for sj in q.s)


def crt_indices(s) -> Iterator[tuple[int, ...]]:
    """Residue vectors i with gcd(s_j, s_k) | i_j - i_k, in lexicographic order."""
    s = tuple(s)

    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        j = len(prefix)
        if j == len(s):
            yield prefix
            return
        for ij in range(s[j]):
            if all((ij - ik) % gcd(s[j], sk) == 0 for ik, sk in zip(prefix, s)):
                yield from extend(prefix + (ij,))

    yield from extend(())


def g_poly_via_crt(q: SupportedQ, div: SDivision) -> IntPoly:
    """
    g as a sum over residue vectors i of z^(sum_j c_j i_j - rho_j omega_j(i)).

    Agrees with g_poly for every desirable division.

    Raises:
        NotDesirableError: If div is not a desirable division of q.x.
    """
    if not div.is_division_of(q) or sum(p * ri for p, ri in zip(div.rho, q.r)) != -1:
        raise NotDesirableError(f"c={div.c}, rho={div.rho} is not a desirable division of {q}")
    exponents = []
    for i in crt_indices(q.s):
        alpha = crt_alpha(q.s, i)
        exponents.append(
            sum(cj * ij - pj * (alpha // sj) for cj, ij, pj, sj in zip(div.c, i, div.rho, q.s))
        )
    return IntPoly.from_exponents(exponents)


# =============================================================================
# r = (a, ka - 1)
# =============================================================================


def two_support_q(a: int, k: int, c1: int, c2: int) -> SupportedQ:
    """
    q with r = (a, ka - 1) and x = (c1(ka - 1) - k, c2 a + 1).

    Raises:
        InvalidParametersError: If a < 2, k < 1 or some multiplicity is < 1.
    """
    if a < 2 or k < 1:
        raise InvalidParametersError(f"Need a >= 2 and k >= 1, got a={a}, k={k}")
    x1 = c1 * (k * a - 1) - k
    x2 = c2 * a + 1
    if x1 < 1 or x2 < 1:
        raise InvalidParametersError(
            f"a={a}, k={k}, c1={c1}, c2={c2} gives multiplicities ({x1}, {x2})"
        )
    return SupportedQ((a, k * a - 1), (x1, x2))


def g_two_support_fast(a: int, k: int, c1: int, c2: int) -> IntPoly:
    """
    g for r = (a, ka - 1) from the double sum over res(ka - 1) x res(a)
    of z^(c1 i1 + c2 i2 - floor((i1 - i2) / a)).

    Raises:
        InvalidParametersError: If the parameters give no valid q-vector.
    """
    two_support_q(a, k, c1, c2)
    i1 = np.arange(k * a - 1, dtype=np.int64)[:, None]
    i2 = np.arange(a, dtype=np.int64)[None, :]
    exponents = c1 * i1 + c2 * i2 - np.floor_divide(i1 - i2, a)
    return _histogram(exponents.ravel())


# =============================================================================
# Constructions
# =============================================================================


def extend_by_lcm(q: SupportedQ, y: int) -> SupportedQ:
    """
    Append lcm(r) to the support with multiplicity y.

    ell grows by y and g is unchanged. When lcm(r) is already in the support
    the multiplicities merge.

    Raises:
        NotRMultiplicityError: If q is not reflexive.
        InvalidInputError: If y < 1.
    """
    ell(q)
    if y < 1:
        raise InvalidInputError(f"Extension multiplicity must be positive, got {y}")
    counts = Counter(dict(zip(q.r, q.x)))
    counts[q.lcm_r] += y
    r = tuple(sorted(counts))
    return SupportedQ(r, tuple(counts[v] for v in r))


def free_sum(p: SupportedQ, q: SupportedQ) -> SupportedQ:
    """
    The q-vector of the free sum Delta_(1,p) *_0 Delta_(1,q):
    (p_1, ..., p_n, s q_1, ..., s q_m) with s = 1 + sum(p).

    Its h* is hstar(p) * hstar(q).

    Raises:
        NotReflexiveError: If either summand is not reflexive.
    """
    for name, v in (("p", p), ("q", q)):
        if not is_reflexive(v):
            raise NotReflexiveError(f"Free sum needs reflexive summands; {name}={v} is not")
    scale = 1 + p.qsum
    counts = Counter(dict(zip(p.r, p.x)))
    for ri, xi in zip(q.r, q.x):
        counts[scale * ri] += xi
    r = tuple(sorted(counts))
    return SupportedQ(r, tuple(counts[v] for v in r))
