"""
Verifiers

Sweeps that check closed-form statements against direct computation and
summarize the outcome as a CheckReport:
- verify_classification_2odd: the r = (2, 2k - 1) predicate against the search
- verify_family_theorems: every family instance against g (or h*)
- verify_ehrhart_positivity: Ehrhart coefficients on two-element supports
- verify_hstar_identity: h* = (1 + ... + z^(ell-1)) g on reflexive two-element supports
- observe_search_records: open observations on two-support search records
- summarize_fibonacci: the Fibonacci reports as one CheckReport

Also loads the shipped table of exceptional two-support instances and diffs
search results against it.
"""

import csv
import io
import logging
from dataclasses import dataclass, field
from functools import partial
from importlib import resources
from itertools import product
from typing import Callable

from ..config import SearchBounds
from ..ehrhart import ehrhart_from_hstar
from ..errors import InvalidParametersError
from ..factorizer import (
    FamilyInstance,
    classify_2_2km1,
    family_532,
    family_case0,
    family_case1,
    family_case2,
    family_case3,
    find_geometric_factorization,
    payne_instance,
)
from ..polyring import IntPoly, geometric_series, is_kronecker
from ..simplex import SupportedQ, ell, g_poly, g_two_support_fast, hstar
from .fibonacci import FibReport, fibonacci_instance
from .runner import run_work_units_sync
from .search import SearchRecord, search_r_multiplicities

logger = logging.getLogger(__name__)

# Failure details kept per report
_MAX_DETAILS = 50


@dataclass
class CheckReport:
    """Outcome of one verification sweep."""

    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, detail: str) -> None:
        """Count one check and keep its detail when it failed."""
        self.checks += 1
        if not passed:
            self.failures.append(detail)

    def merge(self, other: "CheckReport") -> None:
        self.checks += other.checks
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)

    def summary_line(self) -> str:
        """"OK: N checks" or "FAIL: ..." with the first failure."""
        if self.ok:
            return f"OK: {self.checks} checks"
        return (
            f"FAIL: {self.name}: {len(self.failures)} of {self.checks} checks failed "
            f"(first: {self.failures[0]})"
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checks": self.checks,
            "failures": self.failures[:_MAX_DETAILS],
            "failure_count": len(self.failures),
            "notes": self.notes,
        }


def _is_unimodal(f: IntPoly) -> bool:
    c = f.coeffs
    peak = c.index(max(c))
    return all(c[i] <= c[i + 1] for i in range(peak)) and all(
        c[i] >= c[i + 1] for i in range(peak, len(c) - 1)
    )


# =============================================================================
# r = (2, 2k - 1) classification
# =============================================================================


def _classification_unit(k: int, c_max: int) -> CheckReport:
    report = CheckReport(name=f"classify2odd k={k}")
    for c1, c2 in product(range(1, c_max + 1), range(0, c_max + 1)):
        predicted = classify_2_2km1(k, c1, c2)
        found = find_geometric_factorization(g_two_support_fast(2, k, c1, c2))
        label = f"k={k}, c1={c1}, c2={c2}"
        report.record(predicted == (found is not None), f"{label}: predicted {predicted}, search found {found}")
        if found is not None:
            lengths = [gamma for _, gamma in found.pairs()]
            report.record(
                sum(gamma % 2 == 0 for gamma in lengths) == 1 and found.value_at_one == 2 * (2 * k - 1),
                f"{label}: lengths {lengths} need product {2 * (2 * k - 1)} with one even entry",
            )
    return report


def verify_classification_2odd(
    k_max: int,
    c_max: int,
    workers: int | None = None,
    on_status: Callable[[str], None] | None = None,
) -> CheckReport:
    """
    classify_2_2km1 against the factorization search for 2 <= k <= k_max,
    1 <= c1 <= c_max, 0 <= c2 <= c_max.

    Raises:
        InvalidParametersError: If k_max < 2 or c_max < 1.
    """
    if k_max < 2 or c_max < 1:
        raise InvalidParametersError(f"Need k_max >= 2 and c_max >= 1, got {k_max}, {c_max}")
    report = CheckReport(name="classify2odd")
    unit = partial(_classification_unit, c_max=c_max)
    for part in run_work_units_sync(unit, range(2, k_max + 1), workers=workers, on_status=on_status):
        report.merge(part)
    return report


# =============================================================================
# Family statements
# =============================================================================


def family_instances(bounds: SearchBounds) -> list[FamilyInstance]:
    """Every family instance within the family bounds, in a fixed order."""
    a_range = range(2, bounds.family_a_max + 1)
    c_range = range(1, bounds.family_c_max + 1)
    builders = []
    builders += [partial(family_case0, a, (a * c1 - 1, c2)) for a in a_range for c1 in c_range for c2 in c_range]
    builders += [
        partial(family_case1, a, k, c)
        for a in a_range
        for k in range(1, bounds.family_k_max + 1)
        for c in c_range
    ]
    builders += [partial(family_case2, a, c) for a in a_range for c in c_range]
    builders += [partial(family_case3, a, c) for a in a_range for c in c_range]
    builders += [partial(family_532, 1)]
    builders += [
        partial(family_532, case, c)
        for case in (2, 3)
        for c in range(1, bounds.family_532_c_max + 1)
    ]
    builders += [
        partial(payne_instance, a, t, w)
        for a in range(3, bounds.family_a_max + 1)
        for w in range(0, 3)
        for t in range(w + 2, w + 5)
    ]
    builders += [partial(fibonacci_instance, n) for n in range(0, bounds.n_max + 1)]

    instances = []
    for build in builders:
        try:
            instances.append(build())
        except InvalidParametersError:
            continue
    return instances


def _family_unit(instance: FamilyInstance) -> CheckReport:
    label = f"{instance.family} {instance.params}"
    report = CheckReport(name=label)
    actual = instance.actual_poly()
    report.record(instance.expected_poly() == actual, f"{label}: expected {instance.expected}, got {actual}")
    report.record(is_kronecker(actual)[0], f"{label}: {instance.target} is not Kronecker")
    if instance.family == "payne":
        report.record(not _is_unimodal(actual), f"{label}: h* is unimodal")
    return report


def verify_family_theorems(
    bounds: SearchBounds,
    workers: int | None = None,
    on_status: Callable[[str], None] | None = None,
) -> CheckReport:
    """Expected factorization and the Kronecker property for every family instance."""
    instances = family_instances(bounds)
    logger.info("Checking %d family instances", len(instances))
    report = CheckReport(name="families")
    for part in run_work_units_sync(_family_unit, instances, workers=workers, on_status=on_status):
        report.merge(part)
    return report


# =============================================================================
# Ehrhart positivity and the h* identity
# =============================================================================


def _positivity_unit(r: tuple[int, ...], x_max: int) -> CheckReport:
    report = CheckReport(name=f"positivity r={r}")
    for x in product(range(1, x_max + 1), repeat=len(r)):
        q = SupportedQ(r, x)
        poly = ehrhart_from_hstar(hstar(q), q.n)
        report.record(poly.is_positive(), f"{q}: L(t) = {poly}")
    return report


def verify_ehrhart_positivity(
    r_max: int,
    x_max: int,
    workers: int | None = None,
    on_status: Callable[[str], None] | None = None,
) -> CheckReport:
    """
    Ehrhart positivity of every q on supports (r_1, r_2) with r_2 <= r_max and
    multiplicities at most x_max, reflexive or not, plus the standard
    simplices q = (1, ..., 1).
    """
    supports = [(1,)]
    supports += [(r1, r2) for r1 in range(1, r_max + 1) for r2 in range(r1 + 1, r_max + 1)]
    report = CheckReport(name="positivity")
    unit = partial(_positivity_unit, x_max=x_max)
    for part in run_work_units_sync(unit, supports, workers=workers, on_status=on_status):
        report.merge(part)
    return report


def _identity_unit(r: tuple[int, ...], x_max: int) -> CheckReport:
    report = CheckReport(name=f"identity r={r}")
    for q in search_r_multiplicities(r, x_max):
        length = ell(q)
        series = geometric_series(1, length) if length > 1 else IntPoly.one()
        report.record(hstar(q) == series * g_poly(q), f"{q}: h* != (1 + ... + z^{length - 1}) g")
    return report


def verify_hstar_identity(
    r_max: int,
    x_max: int,
    workers: int | None = None,
    on_status: Callable[[str], None] | None = None,
) -> CheckReport:
    """h* = (1 + ... + z^(ell-1)) g for every reflexive q with r_1 < r_2 <= r_max."""
    supports = [(r1, r2) for r1 in range(1, r_max + 1) for r2 in range(r1 + 1, r_max + 1)]
    report = CheckReport(name="hstar-identity")
    unit = partial(_identity_unit, x_max=x_max)
    for part in run_work_units_sync(unit, supports, workers=workers, on_status=on_status):
        report.merge(part)
    return report


def check_search_records(records: list[SearchRecord]) -> CheckReport:
    """Internal consistency of search records."""
    report = CheckReport(name="records")
    for rec in records:
        label = f"{rec.q}"
        if rec.geom_fact_g is not None:
            report.record(rec.kronecker, f"{label}: g factors but is not Kronecker")
            report.record(rec.geom_fact_hstar is not None, f"{label}: g factors but h* has no factorization")
        if rec.kronecker:
            report.record(
                rec.cyclotomics is not None and rec.cyclotomics.expand() == hstar(rec.q),
                f"{label}: cyclotomic factors do not multiply to h*",
            )
    return report


def is_single_series(f: IntPoly) -> bool:
    """Whether f = 1 + z^e + ... + z^(e(gamma-1)) for some e >= 1, gamma >= 2."""
    coeffs = f.coeffs
    if len(coeffs) < 2 or coeffs[0] != 1 or sum(coeffs) < 2:
        return False
    e = next(k for k in range(1, len(coeffs)) if coeffs[k])
    return f == geometric_series(e, sum(coeffs))


def observe_search_records(records: list[SearchRecord]) -> CheckReport:
    """
    Two open observations read off two-support search records.

    For r = (1, a), g = sum_(alpha < a) z^(alpha (ell - x_2)) is a single
    geometric series; that direction is checked on every such record. Notes
    list the records that bear on the open converse (g a single series with
    r_1 > 1) and every q whose h* has a geometric factorization while g has
    none.
    """
    report = CheckReport(name="observations")
    single_elsewhere = []
    hstar_only = []
    for rec in records:
        if len(rec.q.r) != 2 or not rec.kronecker:
            continue
        single = is_single_series(g_poly(rec.q))
        if rec.q.r[0] == 1:
            report.record(single, f"{rec.q}: g is not a single geometric series for r = {rec.q.r}")
        elif single:
            single_elsewhere.append(rec.q)
        if rec.geom_fact_hstar is not None and rec.geom_fact_g is None:
            hstar_only.append(rec.q)
    report.notes += [f"g is a single geometric series with r_1 > 1: r={q.r}, x={q.x}" for q in single_elsewhere]
    report.notes += [f"h* factors but g does not: r={q.r}, x={q.x}" for q in hstar_only]
    report.notes.append(
        f"{len(single_elsewhere)} single-series g with r_1 > 1, {len(hstar_only)} h*-only factorizations"
    )
    return report


def summarize_fibonacci(reports: list[FibReport]) -> CheckReport:
    """One CheckReport for the Fibonacci suite; stability mismatches become notes."""
    summary = CheckReport(name="fib")
    for rep in reports:
        for name in ("identities_ok", "factorization_ok", "closed_form_ok", "shift_ok", "boundary_ok"):
            summary.record(getattr(rep, name), f"n={rep.n}: {name} is false; {'; '.join(rep.problems)}")
        if not rep.stability_ok:
            summary.notes.append(f"n={rep.n}: u-table differs from n={rep.n - 1} on the shared block")
    return summary


# =============================================================================
# Exceptional two-support table
# =============================================================================


@dataclass(frozen=True, order=True)
class Table1Row:
    """One shipped exceptional instance."""

    r: tuple[int, int]
    x: tuple[int, int]
    column: str

    def to_dict(self) -> dict:
        return {"r": list(self.r), "x": list(self.x), "column": self.column}


def table1_rows() -> list[Table1Row]:
    """The shipped table, in file order."""
    text = resources.files("hstar_kronecker.explorer").joinpath("data/table1.csv").read_text()
    lines = [line for line in text.splitlines() if line.strip() and not line.startswith("#")]
    return [
        Table1Row(
            r=(int(row["r1"]), int(row["r2"])),
            x=(int(row["x1"]), int(row["x2"])),
            column=row["column"],
        )
        for row in csv.DictReader(io.StringIO("\n".join(lines)))
    ]


@dataclass
class Table1Diff:
    """Exceptional search records compared with the shipped table."""

    matched: list[tuple] = field(default_factory=list)
    missing: list[tuple] = field(default_factory=list)
    extra: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra

    def to_report(self) -> CheckReport:
        report = CheckReport(name="table1", checks=len(self.matched))
        for r, x in self.missing:
            report.record(False, f"missing r={r}, x={x}")
        for r, x in self.extra:
            report.record(False, f"extra r={r}, x={x}")
        return report

    def to_dict(self) -> dict:
        def rows(pairs):
            return [{"r": list(r), "x": list(x)} for r, x in pairs]

        return {
            "ok": self.ok,
            "matched": rows(self.matched),
            "missing": rows(self.missing),
            "extra": rows(self.extra),
        }


def diff_table1(records: list[SearchRecord], r_max: int, x_max: int) -> Table1Diff:
    """
    Compare records tagged "exceptional" with the table rows inside
    r_i <= r_max, x_i <= x_max.
    """
    expected = {
        (row.r, row.x) for row in table1_rows() if max(row.r) <= r_max and max(row.x) <= x_max
    }
    found = {(rec.q.r, rec.q.x) for rec in records if rec.family_tag == "exceptional"}
    return Table1Diff(
        matched=sorted(expected & found),
        missing=sorted(expected - found),
        extra=sorted(found - expected),
    )
