"""
Factorization Families

Constructors for the closed-form families of q-vectors whose g-polynomial
is a known product of geometric series, the membership test used to tell
family instances from exceptional ones, and the classification predicate for
supports r = (2, 2k - 1).

Family ids:
- case0: r = (1, a), any R-multiplicity
- case1: r = (a, ka - 1), x = ((ka-1)c - k, a((ka-1)c - k) + 1)
- case2: r = (a, a - 1), x = ((a-1)c - 1, ac + 1)
- case3: r = (a, a^2 - 1), x = ((a^2-1)c - a, a(ac - 1) + 1)
- s532-1, s532-2, s532-3: r = (6, 10, 15) with s = (5, 3, 2)
- fib: r = x = (a_(n+1), a_n), see explorer.fibonacci
- payne: r = (1, a), x = (at - 1, w + 1), a statement about h* itself
"""

from dataclasses import dataclass, field

from ..errors import InvalidParametersError, NotRMultiplicityError
from ..polyring import IntPoly
from ..simplex import SupportedQ, g_poly, hstar
from .geometric import GeomFactorization


@dataclass(frozen=True)
class FamilyInstance:
    """One member of a family together with the factorization it must have."""

    family: str
    q: SupportedQ
    expected: GeomFactorization
    params: dict = field(default_factory=dict)
    target: str = "g"

    def expected_poly(self) -> IntPoly:
        return self.expected.expand()

    def actual_poly(self) -> IntPoly:
        """g_poly(q), or hstar(q) for families stated about h*."""
        return hstar(self.q) if self.target == "hstar" else g_poly(self.q)

    def holds(self) -> bool:
        return self.expected_poly() == self.actual_poly()

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "q": self.q.to_dict(),
            "target": self.target,
            "expected": self.expected.to_dict(),
        }


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidParametersError(message)


# =============================================================================
# Two-support families
# =============================================================================


def family_case0(a: int, x) -> FamilyInstance:
    """
    r = (1, a): g is the single series sum over res(a) of z^(c1 i).

    Args:
        a: The support entry other than 1, a >= 2.
        x: Multiplicities (x for 1, x for a); x_1 = a c1 - 1.

    Raises:
        InvalidParametersError: If a < 2 or a multiplicity is < 1.
        NotRMultiplicityError: If a does not divide x_1 + 1.
    """
    x1, x2 = x
    _require(a >= 2, f"case0 needs a >= 2, got a={a}")
    _require(x1 >= 1 and x2 >= 1, f"case0 needs positive multiplicities, got x={tuple(x)}")
    c1, remainder = divmod(x1 + 1, a)
    if remainder:
        raise NotRMultiplicityError(f"x={tuple(x)} is not an R-multiplicity of r=(1, {a})")
    return FamilyInstance(
        family="case0",
        q=SupportedQ((1, a), (x1, x2)),
        expected=GeomFactorization.from_pairs([(c1, a)]),
        params={"a": a, "c1": c1, "c2": x2},
    )


def family_case1(a: int, k: int, c: int) -> FamilyInstance:
    """
    r = (a, ka - 1): g = (sum over res(ka-1) of z^((ac-1)j)) (sum over res(a) of z^(cj)).

    When ka - 1 == 1 the support contains 1 and the instance is built as case0.

    Raises:
        InvalidParametersError: If a < 2, k < 1, c < 1 or x_1 <= 0.
    """
    _require(a >= 2 and k >= 1 and c >= 1, f"case1 needs a >= 2, k >= 1, c >= 1, got {a}, {k}, {c}")
    m = k * a - 1
    x1 = m * c - k
    _require(x1 >= 1, f"case1 with a={a}, k={k}, c={c} gives x_1={x1}")
    x2 = a * x1 + 1
    if m == 1:
        return family_case0(a, (x2, x1))
    return FamilyInstance(
        family="case1",
        q=SupportedQ((a, m), (x1, x2)),
        expected=GeomFactorization.from_pairs([(c, a), (a * c - 1, m)]),
        params={"a": a, "k": k, "c": c},
    )


def family_case2(a: int, c: int) -> FamilyInstance:
    """
    r = (a, a - 1): g = (1 + z^(c+1)) (sum_{j <= 2 floor((a-1)/2)} z^(cj))
    (sum_{j < ceil((a-1)/2)} z^(2cj)).

    a == 2 puts 1 in the support and is built as case0.

    Raises:
        InvalidParametersError: If a < 2, c < 1 or (a-1)c - 1 < 1.
    """
    _require(a >= 2 and c >= 1, f"case2 needs a >= 2, c >= 1, got a={a}, c={c}")
    x1 = (a - 1) * c - 1
    _require(x1 >= 1, f"case2 with a={a}, c={c} gives x_1={x1}")
    x2 = a * c + 1
    if a == 2:
        return family_case0(a, (x2, x1))
    half_floor = (a - 1) // 2
    half_ceil = a // 2
    return FamilyInstance(
        family="case2",
        q=SupportedQ((a, a - 1), (x1, x2)),
        expected=GeomFactorization.from_pairs(
            [(c + 1, 2), (c, 2 * half_floor + 1), (2 * c, half_ceil)]
        ),
        params={"a": a, "c": c},
    )


def family_case3(a: int, c: int) -> FamilyInstance:
    """
    r = (a, a^2 - 1): g = (sum over res(a) of z^((ac-1)j))
    (sum over res(a+1) of z^(cj)) (sum over res(a-1) of z^((ac+c-1)j)).

    Raises:
        InvalidParametersError: If a < 2 or c < 1.
    """
    _require(a >= 2 and c >= 1, f"case3 needs a >= 2, c >= 1, got a={a}, c={c}")
    m = a * a - 1
    x1 = m * c - a
    x2 = a * (a * c - 1) + 1
    return FamilyInstance(
        family="case3",
        q=SupportedQ((a, m), (x1, x2)),
        expected=GeomFactorization.from_pairs(
            [(c, a + 1), (a * c - 1, a), (a * c + c - 1, a - 1)]
        ),
        params={"a": a, "c": c},
    )


def payne_instance(a: int, t: int, w: int) -> FamilyInstance:
    """
    r = (1, a), x = (at - 1, w + 1), whose h* is
    (sum over res(a) of z^(ti)) (1 + z + ... + z^(t+w)) and is not unimodal.

    Raises:
        InvalidParametersError: Unless w >= 0, a >= 3 and t >= w + 2.
    """
    _require(w >= 0 and a >= 3 and t >= w + 2, f"Need w >= 0, a >= 3, t >= w + 2, got a={a}, t={t}, w={w}")
    return FamilyInstance(
        family="payne",
        q=SupportedQ((1, a), (a * t - 1, w + 1)),
        expected=GeomFactorization.from_pairs([(t, a), (1, t + w + 1)]),
        params={"a": a, "t": t, "w": w},
        target="hstar",
    )


# =============================================================================
# Three-support family on s = (5, 3, 2)
# =============================================================================


def family_532(case: int, c: int = 1) -> FamilyInstance:
    """
    r = (6, 10, 15) with x = (5c1 - 1, 3c2 - 1, 2c3 + 1) for the three
    parameter lines (c1, c2, c3) = (1, 3, 1), (c, c, 4c - 1) and (c, 3c, 7c - 1).

    Expected products of g:
        case 1: (1+z^3)(1+z^2+z^4)(1+z+z^2+z^3+z^4)
        case 2: (1+z^(4c-1))(1+z^c+z^(2c))(sum_{j<5} z^(cj))
        case 3: (1+z^(7c-1))(1+z^(3c)+z^(6c))(sum_{j<5} z^(cj))
    Case 1 ignores c.

    Raises:
        InvalidParametersError: If case is not 1, 2 or 3, or c < 1.
    """
    _require(c >= 1, f"s532 needs c >= 1, got c={c}")
    if case == 1:
        c1, c2, c3 = 1, 3, 1
        pairs = [(3, 2), (2, 3), (1, 5)]
    elif case == 2:
        c1, c2, c3 = c, c, 4 * c - 1
        pairs = [(4 * c - 1, 2), (c, 3), (c, 5)]
    elif case == 3:
        c1, c2, c3 = c, 3 * c, 7 * c - 1
        pairs = [(7 * c - 1, 2), (3 * c, 3), (c, 5)]
    else:
        raise InvalidParametersError(f"s532 case must be 1, 2 or 3, got {case}")
    x = (5 * c1 - 1, 3 * c2 - 1, 2 * c3 + 1)
    return FamilyInstance(
        family=f"s532-{case}",
        q=SupportedQ((6, 10, 15), x),
        expected=GeomFactorization.from_pairs(pairs),
        params={"case": case, "c": c if case != 1 else 1},
    )


# =============================================================================
# Membership and classification
# =============================================================================


def _case1_matches(a: int, k: int, x_a: int, x_other: int) -> bool:
    """Whether x = (x_a, x_other) on r = (a, ka - 1) is a case1 multiplicity."""
    c, remainder = divmod(x_a + k, k * a - 1)
    return remainder == 0 and c >= 1 and x_other == a * x_a + 1


def _s532_tag(x: tuple[int, ...]) -> str | None:
    if x == (4, 8, 3):
        return "s532-1"
    c, remainder = divmod(x[0] + 1, 5)
    if remainder or c < 1:
        return None
    if x[1:] == (3 * c - 1, 8 * c - 1):
        return "s532-2"
    if x[1:] == (9 * c - 1, 14 * c - 1):
        return "s532-3"
    return None


def family_tag(q: SupportedQ) -> str | None:
    """
    The first family (case0..case3, s532-1..3) containing q, or None.

    Only exact parameter solvability is tested; nothing is factored.
    """
    if q.r == (6, 10, 15):
        return _s532_tag(q.x)
    if q.d != 2:
        return None
    (r1, r2), (x1, x2) = q.r, q.x
    if r1 == 1:
        return "case0"
    if (r2 + 1) % r1 == 0 and _case1_matches(r1, (r2 + 1) // r1, x1, x2):
        return "case1"
    if r2 == r1 + 1:
        # r = (a, a - 1) with a = r2; the x-vector reads in reverse
        if _case1_matches(r2, 1, x2, x1):
            return "case1"
        c, remainder = divmod(x2 + 1, r1)
        if remainder == 0 and c >= 1 and x1 == r2 * c + 1:
            return "case2"
    if r2 == r1 * r1 - 1:
        c, remainder = divmod(x1 + r1, r2)
        if remainder == 0 and c >= 1 and x2 == r1 * (r1 * c - 1) + 1:
            return "case3"
    return None


def classify_2_2km1(k: int, c1: int, c2: int) -> bool:
    """
    Whether g has a geometric factorization for r = (2, 2k - 1),
    x = ((2k - 1)c1 - k, 2c2 + 1).

    True exactly for ((2, 9), (4, 3)), the three r = (2, 3) lines
    c1 = 2(c2 + 1), c2 = c1 - 2 and c2 + 1 = 2c1, and c2 = (2k - 1)c1 - k.

    Raises:
        InvalidParametersError: Unless k >= 2, c1 >= 1 and c2 >= 0.
    """
    _require(k >= 2 and c1 >= 1 and c2 >= 0, f"Need k >= 2, c1 >= 1, c2 >= 0, got {k}, {c1}, {c2}")
    if k == 5 and c1 == 1 and c2 == 1:
        return True
    if k == 2 and (c1 == 2 * (c2 + 1) or c2 == c1 - 2 or c2 + 1 == 2 * c1):
        return True
    return c2 == (2 * k - 1) * c1 - k
