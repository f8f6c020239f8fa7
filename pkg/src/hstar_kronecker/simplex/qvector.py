"""
Q-Vector Model

A q-vector is stored by its support r (distinct entries, ascending) and
multiplicities x. Everything about the simplex Delta_(1,q) that depends only
on arithmetic of (r, x) lives here: reflexivity, the quotient ell, and
s-divisions of x.
"""

import json
import operator
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import lcm

from ..errors import (
    EmptyInputError,
    InvalidInputError,
    LengthMismatchError,
    NotRMultiplicityError,
    QSpecSyntaxError,
)
from ..polyring import int_list


@dataclass(frozen=True)
class SupportedQ:
    """
    q = (r_1^x_1, ..., r_d^x_d) with r strictly ascending.

    Pairs passed in any order are sorted by r on construction.
    """

    r: tuple[int, ...]
    x: tuple[int, ...]

    def __post_init__(self):
        try:
            r = tuple(operator.index(v) for v in self.r)
            x = tuple(operator.index(v) for v in self.x)
        except TypeError:
            raise InvalidInputError(
                f"Support and multiplicities must be integers, got r={self.r!r}, x={self.x!r}"
            ) from None
        if len(r) != len(x):
            raise LengthMismatchError(f"Support has {len(r)} entries but multiplicity has {len(x)}")
        if not r:
            raise EmptyInputError("A q-vector needs at least one entry")
        if min(r) < 1 or min(x) < 1:
            raise InvalidInputError(f"Support and multiplicities must be positive, got r={r}, x={x}")
        if len(set(r)) != len(r):
            raise InvalidInputError(f"Support entries must be distinct, got r={r}")
        pairs = sorted(zip(r, x))
        object.__setattr__(self, "r", tuple(p[0] for p in pairs))
        object.__setattr__(self, "x", tuple(p[1] for p in pairs))

    @classmethod
    def from_dict(cls, data: dict) -> "SupportedQ":
        """Build from the JSON form {"r": [...], "x": [...]}."""
        if not isinstance(data, dict):
            raise QSpecSyntaxError(f"q-vector JSON must be an object, got {data!r}")
        missing = [key for key in ("r", "x") if key not in data]
        if missing:
            raise QSpecSyntaxError(f"q-vector JSON is missing {missing}")
        return cls(int_list(data["r"], "r", QSpecSyntaxError), int_list(data["x"], "x", QSpecSyntaxError))

    @property
    def d(self) -> int:
        return len(self.r)

    @cached_property
    def lcm_r(self) -> int:
        return lcm(*self.r)

    @cached_property
    def s(self) -> tuple[int, ...]:
        return tuple(self.lcm_r // ri for ri in self.r)

    @cached_property
    def n(self) -> int:
        """Dimension of the simplex."""
        return sum(self.x)

    @cached_property
    def qsum(self) -> int:
        return sum(xi * ri for xi, ri in zip(self.x, self.r))

    def to_q(self) -> tuple[int, ...]:
        """The explicit q multiset, ascending."""
        return tuple(ri for ri, xi in zip(self.r, self.x) for _ in range(xi))

    def to_dict(self) -> dict:
        return {"r": list(self.r), "x": list(self.x)}

    def key(self) -> tuple:
        """Lexicographic sort key (r, x)."""
        return (self.r, self.x)

    def __str__(self) -> str:
        return format_qspec(self)


# =============================================================================
# Parsing and formatting
# =============================================================================

_TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")


def support(q) -> SupportedQ:
    """
    Collapse a q multiset into its support and multiplicities.

    Raises:
        EmptyInputError: If q is empty.
    """
    counts = Counter(int(v) for v in q)
    if not counts:
        raise EmptyInputError("Cannot take the support of an empty q-vector")
    r = tuple(sorted(counts))
    return SupportedQ(r, tuple(counts[v] for v in r))


def parse_qspec(text: str) -> SupportedQ:
    """
    Parse "r1^x1,r2^x2,...", a bare multiset "2,2,5" or the JSON form.

    Terms may mix both styles; whitespace is ignored and repeated support
    entries are merged.

    Raises:
        EmptyInputError: If the spec has no terms.
        QSpecSyntaxError: If a term is malformed.
    """
    stripped = "".join(text.split())
    if not stripped:
        raise EmptyInputError("Empty q-spec")
    if stripped.startswith("{"):
        try:
            return SupportedQ.from_dict(json.loads(stripped))
        except json.JSONDecodeError as e:
            raise QSpecSyntaxError(f"Malformed q-vector JSON: {e}") from None

    counts: Counter = Counter()
    for term in stripped.split(","):
        match = _TERM.match(term)
        if not match:
            raise QSpecSyntaxError(f"Malformed q-spec term {term!r} in {text!r}")
        value = int(match.group(1))
        mult = int(match.group(2)) if match.group(2) is not None else 1
        if value < 1 or mult < 1:
            raise QSpecSyntaxError(f"q-spec term {term!r} must have positive entries")
        counts[value] += mult
    r = tuple(sorted(counts))
    return SupportedQ(r, tuple(counts[v] for v in r))


def format_qspec(q: SupportedQ) -> str:
    """Render as "r1^x1,r2^x2,..."."""
    return ",".join(f"{ri}^{xi}" for ri, xi in zip(q.r, q.x))


# =============================================================================
# Reflexivity and ell
# =============================================================================


def is_r_multiplicity(r, x) -> bool:
    """
    Whether lcm(r) divides 1 + sum(x_i r_i).

    Raises:
        LengthMismatchError: If r and x differ in length.
    """
    r, x = tuple(r), tuple(x)
    if len(r) != len(x):
        raise LengthMismatchError(f"Support has {len(r)} entries but multiplicity has {len(x)}")
    if not r:
        raise EmptyInputError("Empty support")
    return (1 + sum(xi * ri for xi, ri in zip(x, r))) % lcm(*r) == 0


def is_reflexive(q: SupportedQ) -> bool:
    """Whether Delta_(1,q) is reflexive: every r_i divides 1 + qsum."""
    return (1 + q.qsum) % q.lcm_r == 0


def ell(q: SupportedQ) -> int:
    """
    The quotient (1 + qsum) / lcm(r).

    Raises:
        NotRMultiplicityError: If q is not reflexive.
    """
    quotient, remainder = divmod(1 + q.qsum, q.lcm_r)
    if remainder:
        raise NotRMultiplicityError(
            f"x={q.x} is not an R-multiplicity of r={q.r}: "
            f"lcm {q.lcm_r} does not divide {1 + q.qsum}"
        )
    return quotient


# =============================================================================
# s-divisions
# =============================================================================


@dataclass(frozen=True)
class SDivision:
    """x_i = c_i * s_i + rho_i; desirable when sum(rho_i r_i) = -1."""

    c: tuple[int, ...]
    rho: tuple[int, ...]
    desirable: bool

    @classmethod
    def of(cls, q: SupportedQ, rho) -> "SDivision":
        """
        The division of q.x with the given remainders.

        Raises:
            InvalidInputError: If some rho_i is not congruent to x_i mod s_i.
        """
        rho = tuple(int(v) for v in rho)
        if len(rho) != q.d:
            raise LengthMismatchError(f"Remainder has {len(rho)} entries, q has {q.d}")
        c = []
        for xi, si, ri in zip(q.x, q.s, rho):
            quotient, remainder = divmod(xi - ri, si)
            if remainder:
                raise InvalidInputError(f"rho={rho} is not an s-remainder of x={q.x} (s={q.s})")
            c.append(quotient)
        desirable = sum(p * ri for p, ri in zip(rho, q.r)) == -1
        return cls(tuple(c), rho, desirable)

    def is_division_of(self, q: SupportedQ) -> bool:
        return len(self.c) == q.d and all(
            ci * si + pi == xi for ci, si, pi, xi in zip(self.c, q.s, self.rho, q.x)
        )

    def to_dict(self) -> dict:
        return {"c": list(self.c), "rho": list(self.rho), "desirable": self.desirable}


def desirable_division(q: SupportedQ) -> SDivision:
    """
    The canonical desirable division.

    Start from rho_i = x_i mod s_i, where sum(rho_i r_i) = m * lcm - 1, then
    move the m smallest indices into [-s_i] by subtracting s_i.

    Raises:
        NotRMultiplicityError: If q is not reflexive.
    """
    ell(q)
    rho = [xi % si for xi, si in zip(q.x, q.s)]
    c = [xi // si for xi, si in zip(q.x, q.s)]
    m = (sum(p * ri for p, ri in zip(rho, q.r)) + 1) // q.lcm_r
    for i in range(m):
        rho[i] -= q.s[i]
        c[i] += 1
    return SDivision(tuple(c), tuple(rho), True)


def all_desirable_divisions(q: SupportedQ) -> list[SDivision]:
    """
    Every desirable division with each rho_i in {-s_i, ..., s_i - 1}.

    Raises:
        NotRMultiplicityError: If q is not reflexive.
    """
    ell(q)
    choices = [((xi % si) - si, xi % si) for xi, si in zip(q.x, q.s)]
    divisions = []
    for rho in product(*choices):
        if sum(p * ri for p, ri in zip(rho, q.r)) == -1:
            divisions.append(SDivision.of(q, rho))
    return divisions
