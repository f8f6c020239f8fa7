"""
Fibonacci Suite

Every other Fibonacci number, a_0 = 1, a_1 = 2, a_n = 3a_(n-1) - a_(n-2),
gives q with r = x = (a_(n+1), a_n), whose g appears to split into two
geometric series. This module builds those instances, tabulates
u(alpha(i_1, i_2)) over res(a_n) x res(a_(n+1)), and checks the identities,
the closed form of u, its boundary values and its stability in n.
"""

import logging
from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from ..errors import InvalidInputError
from ..factorizer import FamilyInstance, GeomFactorization
from ..simplex import SupportedQ, ell, is_reflexive

logger = logging.getLogger(__name__)


def fib_sequence(n: int) -> int:
    """
    a_n for a_0 = 1, a_1 = 2, a_n = 3a_(n-1) - a_(n-2): 1, 2, 5, 13, 34, 89, ...

    Raises:
        InvalidInputError: If n < 0.
    """
    if n < 0:
        raise InvalidInputError(f"Sequence index must be nonnegative, got {n}")
    current, following = 1, 2
    for _ in range(n):
        current, following = following, 3 * following - current
    return current


def beatty_floor(i: int) -> int:
    """
    floor(i (1 + sqrt 5) / 2), exactly, as (i + isqrt(5 i^2)) // 2.

    Raises:
        InvalidInputError: If i < 0.
    """
    if i < 0:
        raise InvalidInputError(f"Beatty index must be nonnegative, got {i}")
    return (i + isqrt(5 * i * i)) // 2


def fibonacci_instance(n: int) -> FamilyInstance:
    """
    q with r = x = (a_(n+1), a_n) and expected g = (sum_(i<a_n) z^i)(sum_(i<a_(n+1)) z^i).

    Raises:
        InvalidInputError: If n < 0.
    """
    low, high = fib_sequence(n), fib_sequence(n + 1)
    return FamilyInstance(
        family="fib",
        q=SupportedQ((high, low), (high, low)),
        expected=GeomFactorization.from_pairs([(1, low), (1, high)]),
        params={"n": n},
    )


# =============================================================================
# u-tables
# =============================================================================


def u_table(n: int) -> np.ndarray:
    """
    u(alpha(i_1, i_2)) = 3 alpha - a_(n+1) floor(alpha / a_n) - a_n floor(alpha / a_(n+1))
    for i_1 in res(a_n) (rows) and i_2 in res(a_(n+1)) (columns), where
    alpha is the residue with alpha = i_1 (mod a_n) and alpha = i_2 (mod a_(n+1)).
    """
    instance = fibonacci_instance(n)
    low, high = fib_sequence(n), fib_sequence(n + 1)
    modulus = low * high
    i1 = np.arange(low, dtype=np.int64)[:, None]
    i2 = np.arange(high, dtype=np.int64)[None, :]
    alpha = (i1 * high * pow(high, -1, low) + i2 * low * pow(low, -1, high)) % modulus
    return ell(instance.q) * alpha - high * (alpha // low) - low * (alpha // high)


def u_table_closed_form(n: int) -> np.ndarray:
    """
    3 i_1 + a_(n-1) ((a_n (i_1 - i_2)) mod a_(n+1)) - a_n ((a_(n-1) (i_1 - i_2)) mod a_n).

    Raises:
        InvalidInputError: If n < 1.
    """
    if n < 1:
        raise InvalidInputError(f"The closed form of u needs n >= 1, got {n}")
    before, low, high = fib_sequence(n - 1), fib_sequence(n), fib_sequence(n + 1)
    i1 = np.arange(low, dtype=np.int64)[:, None]
    i2 = np.arange(high, dtype=np.int64)[None, :]
    diff = i1 - i2
    return 3 * i1 + before * ((low * diff) % high) - low * ((before * diff) % low)


def v_table(n: int) -> np.ndarray:
    """u - 3 i_1, which depends only on i_1 - i_2."""
    table = u_table(n)
    return table - 3 * np.arange(table.shape[0], dtype=np.int64)[:, None]


def _boundary_mismatches(table: np.ndarray) -> list[str]:
    problems = []
    for i in range(table.shape[0]):
        expected = i + beatty_floor(i) + 1 if i else 0
        if table[i, 0] != expected:
            problems.append(f"u({i},0)={table[i, 0]}, expected {expected}")
    for i in range(table.shape[1]):
        expected = 2 * i - beatty_floor(i)
        if table[0, i] != expected:
            problems.append(f"u(0,{i})={table[0, i]}, expected {expected}")
    return problems


# =============================================================================
# Verification
# =============================================================================


@dataclass(frozen=True)
class FibReport:
    """Checks for one index n."""

    n: int
    identities_ok: bool
    factorization_ok: bool
    closed_form_ok: bool
    shift_ok: bool
    boundary_ok: bool
    stability_ok: bool
    u_table: tuple[tuple[int, ...], ...]
    problems: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        """Every check except stability, which is only reported."""
        return (
            self.identities_ok
            and self.factorization_ok
            and self.closed_form_ok
            and self.shift_ok
            and self.boundary_ok
        )

    def to_dict(self, include_table: bool = False) -> dict:
        data = {
            "n": self.n,
            "a": [fib_sequence(self.n), fib_sequence(self.n + 1)],
            "identities_ok": self.identities_ok,
            "factorization_ok": self.factorization_ok,
            "closed_form_ok": self.closed_form_ok,
            "shift_ok": self.shift_ok,
            "boundary_ok": self.boundary_ok,
            "stability_ok": self.stability_ok,
            "problems": list(self.problems),
        }
        if include_table:
            data["u_table"] = [list(row) for row in self.u_table]
        return data


def _identities_hold(n: int) -> bool:
    before, low, high = fib_sequence(n - 1), fib_sequence(n), fib_sequence(n + 1)
    return (
        1 + low * low == before * high
        and 1 + low * low + high * high == 3 * low * high
        and gcd(low, high) == 1
    )


def fibonacci_report(n: int, previous: np.ndarray | None = None) -> FibReport:
    """
    Check one index n >= 1.

    Args:
        n: Sequence index.
        previous: u_table(n - 1), computed when omitted.

    Raises:
        InvalidInputError: If n < 1.
    """
    if n < 1:
        raise InvalidInputError(f"Fibonacci checks start at n = 1, got {n}")
    problems = []
    instance = fibonacci_instance(n)

    identities_ok = _identities_hold(n) and is_reflexive(instance.q) and ell(instance.q) == 3
    if not identities_ok:
        problems.append(f"identities fail at n={n}")

    factorization_ok = instance.holds()
    if not factorization_ok:
        problems.append(f"g does not split as {instance.expected} at n={n}")

    table = u_table(n)
    closed_form_ok = bool(np.array_equal(table, u_table_closed_form(n)))
    if not closed_form_ok:
        problems.append(f"closed form of u disagrees at n={n}")

    shift_ok = bool(np.all(table[1:, 1:] == table[:-1, :-1] + 3))
    if not shift_ok:
        problems.append(f"u(i+1, j+1) != u(i, j) + 3 somewhere at n={n}")

    boundary = _boundary_mismatches(table)
    problems.extend(boundary)

    if previous is None:
        previous = u_table(n - 1)
    rows, cols = previous.shape
    stability_ok = bool(np.array_equal(table[:rows, :cols], previous))
    if not stability_ok:
        problems.append(f"u at n={n} differs from n={n - 1} on the shared {rows}x{cols} block")

    return FibReport(
        n=n,
        identities_ok=identities_ok,
        factorization_ok=factorization_ok,
        closed_form_ok=closed_form_ok,
        shift_ok=shift_ok,
        boundary_ok=not boundary,
        stability_ok=stability_ok,
        u_table=tuple(tuple(int(v) for v in row) for row in table),
        problems=tuple(problems),
    )


def verify_fibonacci(n_max: int) -> list[FibReport]:
    """
    Reports for n = 1..n_max.

    Raises:
        InvalidInputError: If n_max < 1.
    """
    if n_max < 1:
        raise InvalidInputError(f"Need n_max >= 1, got {n_max}")
    reports = []
    previous = u_table(0)
    for n in range(1, n_max + 1):
        report = fibonacci_report(n, previous)
        logger.info("Fibonacci n=%d: %s", n, "ok" if report.ok else "; ".join(report.problems))
        reports.append(report)
        previous = np.array(report.u_table, dtype=np.int64)
    return reports
