"""
Exhaustive Searches

Sweeps reflexive q-vectors on two- and three-element supports and records,
for each, whether h* is Kronecker, its cyclotomic factors, geometric
factorizations of h* and g, and which closed-form family (if any) covers it.

One work unit is one support r; the runner fans supports out to worker
processes and the records are re-sorted by (r, x) before they are returned.
"""

import logging
from dataclasses import dataclass
from functools import partial
from itertools import combinations, product
from math import gcd, lcm
from typing import Callable

from sympy import divisors

from ..errors import InvalidInputError
from ..factorizer import GeomFactorization, extend_to_hstar, family_tag, find_geometric_factorization
from ..polyring import CyclotomicMultiset, is_kronecker
from ..simplex import SupportedQ, ell, g_poly
from .runner import run_work_units_sync

logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    "r",
    "x",
    "reflexive",
    "ell",
    "kronecker",
    "cyclotomics",
    "hstar_factorization",
    "g_factorization",
    "family_tag",
]


@dataclass(frozen=True)
class SearchRecord:
    """Everything the searches learn about one reflexive q."""

    q: SupportedQ
    reflexive: bool
    ell: int
    kronecker: bool
    cyclotomics: CyclotomicMultiset | None
    geom_fact_hstar: GeomFactorization | None
    geom_fact_g: GeomFactorization | None
    family_tag: str

    def key(self) -> tuple:
        return self.q.key()

    def to_dict(self) -> dict:
        """Convert record to its JSON-lines form."""
        return {
            "r": list(self.q.r),
            "x": list(self.q.x),
            "s": list(self.q.s),
            "reflexive": self.reflexive,
            "ell": self.ell,
            "kronecker": self.kronecker,
            "cyclotomics": self.cyclotomics.to_dict() if self.cyclotomics else None,
            "hstar_factorization": self.geom_fact_hstar.to_dict() if self.geom_fact_hstar else None,
            "g_factorization": self.geom_fact_g.to_dict() if self.geom_fact_g else None,
            "family_tag": self.family_tag,
        }

    def csv_row(self) -> dict:
        """Flat row keyed by CSV_COLUMNS."""
        return {
            "r": "(" + ",".join(map(str, self.q.r)) + ")",
            "x": "(" + ",".join(map(str, self.q.x)) + ")",
            "reflexive": self.reflexive,
            "ell": self.ell,
            "kronecker": self.kronecker,
            "cyclotomics": str(self.cyclotomics) if self.cyclotomics else "",
            "hstar_factorization": str(self.geom_fact_hstar) if self.geom_fact_hstar else "",
            "g_factorization": str(self.geom_fact_g) if self.geom_fact_g else "",
            "family_tag": self.family_tag,
        }


def _series_cyclotomics(length: int) -> CyclotomicMultiset:
    """1 + z + ... + z^(length-1) is the product of Phi_d over d | length, d > 1."""
    return CyclotomicMultiset.from_counts({d: 1 for d in divisors(length)[1:]})


def analyze_q(q: SupportedQ) -> SearchRecord:
    """
    Build the search record of a reflexive q.

    Kronecker is decided on g, since h* = (1 + ... + z^(ell-1)) g and the
    series factor is always Kronecker. h* is only searched directly when
    g has no geometric factorization.

    Raises:
        NotRMultiplicityError: If q is not reflexive.
    """
    length = ell(q)
    g = g_poly(q)
    kronecker, g_cyclotomics = is_kronecker(g)
    geom_g = geom_h = None
    cyclotomics = None
    if kronecker:
        cyclotomics = g_cyclotomics.merge(_series_cyclotomics(length))
        geom_g = find_geometric_factorization(g)
        geom_h = extend_to_hstar(q, geom_g)
    tag = (family_tag(q) or "exceptional") if kronecker else "none"
    return SearchRecord(
        q=q,
        reflexive=True,
        ell=length,
        kronecker=kronecker,
        cyclotomics=cyclotomics,
        geom_fact_hstar=geom_h,
        geom_fact_g=geom_g,
        family_tag=tag,
    )


def search_r_multiplicities(r, x_max: int) -> list[SupportedQ]:
    """
    Every reflexive q on support r with 1 <= x_i <= x_max, ascending in x.

    The leading entries are enumerated and the last is solved from
    r_d x_d = -(1 + sum_(i<d) x_i r_i) (mod lcm(r)).

    Raises:
        InvalidInputError: If r is empty, has repeated entries or is unsorted.
    """
    r = tuple(r)
    if not r or list(r) != sorted(set(r)) or r[0] < 1:
        raise InvalidInputError(f"Support must be strictly ascending positive integers, got {r}")
    if x_max < 1:
        return []
    modulus = lcm(*r)
    last = r[-1]
    g = gcd(last, modulus)
    step = modulus // g
    inverse = pow(last // g, -1, step) if step > 1 else 0

    found = []
    for prefix in product(range(1, x_max + 1), repeat=len(r) - 1):
        target = 1 + sum(xi * ri for xi, ri in zip(prefix, r))
        if target % g:
            continue
        start = (-(target // g) * inverse) % step or step
        for x_last in range(start, x_max + 1, step):
            found.append(SupportedQ(r, prefix + (x_last,)))
    return found


def _support_records(r: tuple[int, ...], x_max: int, kronecker_only: bool) -> list[SearchRecord]:
    records = (analyze_q(q) for q in search_r_multiplicities(r, x_max))
    if kronecker_only:
        return [rec for rec in records if rec.kronecker]
    return list(records)


def _run(
    supports: list[tuple[int, ...]],
    x_max: int,
    kronecker_only: bool,
    workers: int | None,
    on_status: Callable[[str], None] | None,
) -> list[SearchRecord]:
    unit = partial(_support_records, x_max=x_max, kronecker_only=kronecker_only)
    batches = run_work_units_sync(unit, supports, workers=workers, on_status=on_status)
    records = [rec for batch in batches for rec in batch]
    records.sort(key=SearchRecord.key)
    return records


# =============================================================================
# Two-element supports
# =============================================================================


def search_two_support(
    r_max: int,
    x_max: int,
    workers: int | None = None,
    on_status: Callable[[str], None] | None = None,
) -> list[SearchRecord]:
    """
    Records for every reflexive q with r_1 < r_2 <= r_max and x_i <= x_max.

    Args:
        r_max: Largest support entry, >= 2.
        x_max: Largest multiplicity, >= 1.
        workers: Process count for the sweep.
        on_status: Optional callback for progress messages

    Returns:
        One record per reflexive q, sorted by (r, x).

    Raises:
        InvalidInputError: If r_max < 2 or x_max < 1.
    """
    if r_max < 2 or x_max < 1:
        raise InvalidInputError(f"Need r_max >= 2 and x_max >= 1, got {r_max}, {x_max}")
    supports = [(r1, r2) for r1 in range(1, r_max + 1) for r2 in range(r1 + 1, r_max + 1)]
    logger.info("Two-support search over %d supports, x <= %d", len(supports), x_max)
    return _run(supports, x_max, False, workers, on_status)


def find_kronecker_without_geomfact(
    r_max: int,
    x_max: int,
    workers: int | None = None,
    on_status: Callable[[str], None] | None = None,
) -> list[SearchRecord]:
    """Two-support records whose h* is Kronecker but has no geometric factorization."""
    return [
        rec
        for rec in search_two_support(r_max, x_max, workers=workers, on_status=on_status)
        if rec.kronecker and rec.geom_fact_hstar is None
    ]


# =============================================================================
# Three-element supports
# =============================================================================


def coprime_triples(s_max: int) -> list[tuple[int, int, int]]:
    """Pairwise coprime s_1 < s_2 < s_3 with 2 <= s_i <= s_max."""
    return [
        s
        for s in combinations(range(2, s_max + 1), 3)
        if all(gcd(a, b) == 1 for a, b in combinations(s, 2))
    ]


def search_three_support(
    s_max: int,
    x_max: int,
    workers: int | None = None,
    on_status: Callable[[str], None] | None = None,
) -> list[SearchRecord]:
    """
    Kronecker records on supports r_j = prod_(j' != j) s_j' for pairwise
    coprime s.

    Each record's q.s recovers the s vector, since lcm(r) = s_1 s_2 s_3.

    Raises:
        InvalidInputError: If s_max < 2 or x_max < 1.
    """
    if s_max < 2 or x_max < 1:
        raise InvalidInputError(f"Need s_max >= 2 and x_max >= 1, got {s_max}, {x_max}")
    supports = [
        tuple(sorted((s2 * s3, s1 * s3, s1 * s2))) for s1, s2, s3 in coprime_triples(s_max)
    ]
    logger.info("Three-support search over %d supports, x <= %d", len(supports), x_max)
    return _run(supports, x_max, True, workers, on_status)
