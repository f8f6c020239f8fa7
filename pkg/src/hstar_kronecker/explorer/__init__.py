"""
Explorer Module

Exhaustive searches and verification sweeps:
- runner: deterministic process-pool fan-out of work units
- search: two- and three-support searches for Kronecker h*
- fibonacci: the r = x = (a_(n+1), a_n) suite and its u-tables
- verify: check reports for the family statements, the r = (2, 2k - 1)
  classification, Ehrhart positivity and the shipped exception table
"""

from .runner import run_work_units, run_work_units_sync

from .search import (
    CSV_COLUMNS,
    SearchRecord,
    analyze_q,
    search_r_multiplicities,
    search_two_support,
    find_kronecker_without_geomfact,
    coprime_triples,
    search_three_support,
)

from .fibonacci import (
    FibReport,
    fib_sequence,
    beatty_floor,
    fibonacci_instance,
    u_table,
    u_table_closed_form,
    v_table,
    fibonacci_report,
    verify_fibonacci,
)

from .verify import (
    CheckReport,
    Table1Row,
    Table1Diff,
    verify_classification_2odd,
    family_instances,
    verify_family_theorems,
    verify_ehrhart_positivity,
    verify_hstar_identity,
    check_search_records,
    is_single_series,
    observe_search_records,
    summarize_fibonacci,
    table1_rows,
    diff_table1,
)

__all__ = [
    # Runner
    "run_work_units",
    "run_work_units_sync",
    # Search
    "CSV_COLUMNS",
    "SearchRecord",
    "analyze_q",
    "search_r_multiplicities",
    "search_two_support",
    "find_kronecker_without_geomfact",
    "coprime_triples",
    "search_three_support",
    # Fibonacci
    "FibReport",
    "fib_sequence",
    "beatty_floor",
    "fibonacci_instance",
    "u_table",
    "u_table_closed_form",
    "v_table",
    "fibonacci_report",
    "verify_fibonacci",
    # Verification
    "CheckReport",
    "Table1Row",
    "Table1Diff",
    "verify_classification_2odd",
    "family_instances",
    "verify_family_theorems",
    "verify_ehrhart_positivity",
    "verify_hstar_identity",
    "check_search_records",
    "is_single_series",
    "observe_search_records",
    "summarize_fibonacci",
    "table1_rows",
    "diff_table1",
]
