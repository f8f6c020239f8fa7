"""
Command-Line Interface

``ehrk <subcommand> ...`` exposes every operation of the library.

Exit codes: 0 on success, 1 when a verification reports failures, 2 on a
usage or input error.
"""

import argparse
import dataclasses
import json
import logging
import sys
from dataclasses import dataclass

from .config import SearchBounds, get_log_level
from .ehrhart import count_lattice_points, ehrhart_from_hstar, is_ehrhart_positive
from .errors import HStarError, InvalidInputError
from .explorer import (
    CheckReport,
    analyze_q,
    check_search_records,
    diff_table1,
    find_kronecker_without_geomfact,
    observe_search_records,
    search_three_support,
    search_two_support,
    summarize_fibonacci,
    u_table,
    verify_classification_2odd,
    verify_ehrhart_positivity,
    verify_family_theorems,
    verify_fibonacci,
    verify_hstar_identity,
)
from .factorizer import find_geometric_factorization, hstar_geometric_factorization
from .polyring import IntPoly, is_kronecker
from .report import format_markdown_report, format_records_table, records_to_csv, to_json_lines, write_output
from .simplex import (
    all_desirable_divisions,
    desirable_division,
    ell,
    g_poly,
    hibi_reflexive,
    hstar,
    is_reflexive,
    parse_qspec,
)

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """Rendered output of one subcommand."""

    text: str
    markdown: str | None = None
    ok: bool = True


def parse_poly(text: str) -> IntPoly:
    """
    Parse "c0,c1,...,cn" (ascending powers) or {"coeffs": [...]}.

    Raises:
        InvalidInputError: If the text is empty or a coefficient is not an integer.
    """
    stripped = "".join(text.split())
    if not stripped:
        raise InvalidInputError("Empty polynomial")
    if stripped.startswith("{"):
        try:
            return IntPoly.from_dict(json.loads(stripped))
        except json.JSONDecodeError as e:
            raise InvalidInputError(f"Malformed polynomial JSON: {e}") from None
    try:
        return IntPoly(tuple(int(c) for c in stripped.split(",")))
    except ValueError:
        raise InvalidInputError(f"Polynomial coefficients must be integers, got {text!r}") from None


def _poly_result(args, label: str, poly: IntPoly) -> CommandResult:
    if args.format == "json":
        return CommandResult(json.dumps({"q": parse_qspec(args.q).to_dict(), label: list(poly.coeffs)}))
    if args.format == "csv":
        rows = ["power,coefficient"] + [f"{k},{c}" for k, c in enumerate(poly.coeffs)]
        return CommandResult("\n".join(rows))
    return CommandResult(str(poly))


def _check_result(args, reports: list[CheckReport], title: str, bounds: dict | None = None) -> CommandResult:
    total = CheckReport(name=title)
    for rep in reports:
        total.merge(rep)
    markdown = format_markdown_report(title, reports, parameters=bounds)
    if args.format == "json":
        text = json.dumps({"ok": total.ok, "reports": [rep.to_dict() for rep in reports]})
    elif args.format == "csv":
        rows = ["name,ok,checks,failures"] + [
            f"{rep.name},{rep.ok},{rep.checks},{len(rep.failures)}" for rep in reports
        ]
        text = "\n".join(rows)
    else:
        lines = [f"{rep.name}: {rep.summary_line()}" for rep in reports]
        lines += [f"  {detail}" for rep in reports for detail in rep.failures[:20]]
        lines += [f"  note: {note}" for rep in reports for note in rep.notes]
        lines.append(total.summary_line())
        text = "\n".join(lines)
    return CommandResult(text, markdown, total.ok)


# =============================================================================
# Single q-vector commands
# =============================================================================


def _cmd_hstar(args, bounds) -> CommandResult:
    return _poly_result(args, "hstar", hstar(parse_qspec(args.q)))


def _cmd_g(args, bounds) -> CommandResult:
    return _poly_result(args, "g", g_poly(parse_qspec(args.q)))


def _cmd_ell(args, bounds) -> CommandResult:
    q = parse_qspec(args.q)
    value = ell(q)
    if args.format == "json":
        return CommandResult(json.dumps({"q": q.to_dict(), "ell": value, "lcm": q.lcm_r}))
    return CommandResult(str(value))


def _cmd_reflexive(args, bounds) -> CommandResult:
    q = parse_qspec(args.q)
    reflexive = is_reflexive(q)
    if args.format == "json":
        return CommandResult(json.dumps({"q": q.to_dict(), "reflexive": reflexive, "palindromic": hibi_reflexive(q)}))
    return CommandResult("true" if reflexive else "false")


def _cmd_division(args, bounds) -> CommandResult:
    q = parse_qspec(args.q)
    divisions = all_desirable_divisions(q) if args.all else [desirable_division(q)]
    if args.format == "json":
        return CommandResult(json.dumps({"q": q.to_dict(), "s": list(q.s), "divisions": [d.to_dict() for d in divisions]}))
    return CommandResult("\n".join(f"c={d.c} rho={d.rho}" for d in divisions))


def _target_poly(args) -> IntPoly:
    if args.poly is not None:
        return parse_poly(args.poly)
    if args.q is None:
        raise InvalidInputError("Give a q-spec or --poly")
    q = parse_qspec(args.q)
    return g_poly(q) if getattr(args, "target", "hstar") == "g" else hstar(q)


def _cmd_kronecker(args, bounds) -> CommandResult:
    f = _target_poly(args)
    kronecker, cyclotomics = is_kronecker(f)
    if args.format == "json":
        return CommandResult(
            json.dumps({"kronecker": kronecker, "cyclotomics": cyclotomics.to_dict() if cyclotomics else None})
        )
    return CommandResult(f"true: {cyclotomics}" if kronecker else "false")


def _cmd_factor(args, bounds) -> CommandResult:
    if args.poly is None and args.q is not None and args.target == "hstar":
        found = hstar_geometric_factorization(parse_qspec(args.q))
    else:
        found = find_geometric_factorization(_target_poly(args))
    if args.format == "json":
        return CommandResult(json.dumps({"factorization": found.to_dict() if found is not None else None}))
    return CommandResult(str(found) if found is not None else "none")


def _cmd_ehrhart(args, bounds) -> CommandResult:
    if args.poly is not None:
        if args.dim is None:
            raise InvalidInputError("--poly needs --dim")
        poly = ehrhart_from_hstar(parse_poly(args.poly), args.dim)
    elif args.q is not None:
        q = parse_qspec(args.q)
        poly = ehrhart_from_hstar(hstar(q), q.n)
    else:
        raise InvalidInputError("Give a q-spec or --poly with --dim")
    if args.format == "json":
        return CommandResult(json.dumps({**poly.to_dict(), "positive": poly.is_positive()}))
    return CommandResult(str(poly))


def _cmd_count(args, bounds) -> CommandResult:
    q = parse_qspec(args.q)
    count = count_lattice_points(q, args.t)
    expected = ehrhart_from_hstar(hstar(q), q.n)(args.t)
    agrees = count == expected
    if args.format == "json":
        return CommandResult(json.dumps({"q": q.to_dict(), "t": args.t, "count": count, "ehrhart": str(expected)}), ok=agrees)
    text = str(count)
    if not agrees:
        text += f"\nFAIL: Ehrhart polynomial gives {expected}"
    return CommandResult(text, ok=agrees)


# =============================================================================
# Sweeps
# =============================================================================


def _on_status(args):
    if args.verbose:
        return lambda msg: print(msg, file=sys.stderr)
    return None


def _records_result(args, records, reports: list[CheckReport], title: str, params: dict) -> CommandResult:
    total = CheckReport(name=title)
    for rep in reports:
        total.merge(rep)
    kronecker = [rec for rec in records if rec.kronecker]
    markdown = format_markdown_report(title, reports, records=kronecker, parameters=params)
    if args.format == "csv":
        return CommandResult(records_to_csv(records).rstrip("\n"), markdown, total.ok)
    if args.format == "json":
        return CommandResult(to_json_lines(records).rstrip("\n"), markdown, total.ok)
    lines = [f"{len(records)} records, {len(kronecker)} Kronecker", format_records_table(kronecker)]
    lines += [f"  {detail}" for rep in reports for detail in rep.failures[:20]]
    lines += [f"  note: {note}" for rep in reports for note in rep.notes]
    lines.append(total.summary_line())
    return CommandResult("\n".join(lines), markdown, total.ok)


def _cmd_search2(args, bounds) -> CommandResult:
    params = {"r_max": bounds.r_max, "x_max": bounds.x_max}
    if args.without_geomfact:
        records = find_kronecker_without_geomfact(
            bounds.r_max, bounds.x_max, workers=args.workers, on_status=_on_status(args)
        )
        return _records_result(args, records, [check_search_records(records)], "Kronecker h* without geometric factorization", params)
    records = search_two_support(bounds.r_max, bounds.x_max, workers=args.workers, on_status=_on_status(args))
    reports = [
        check_search_records(records),
        diff_table1(records, bounds.r_max, bounds.x_max).to_report(),
        observe_search_records(records),
    ]
    return _records_result(args, records, reports, "Two-support search", params)


def _cmd_search3(args, bounds) -> CommandResult:
    params = {"s_max": bounds.s_max, "x_max": bounds.s_x_max}
    records = search_three_support(bounds.s_max, bounds.s_x_max, workers=args.workers, on_status=_on_status(args))
    return _records_result(args, records, [check_search_records(records)], "Three-support search", params)


def _cmd_classify2odd(args, bounds) -> CommandResult:
    report = verify_classification_2odd(bounds.k_max, bounds.c_max, workers=args.workers, on_status=_on_status(args))
    return _check_result(args, [report], "r = (2, 2k - 1) classification", {"k_max": bounds.k_max, "c_max": bounds.c_max})


def _cmd_fib(args, bounds) -> CommandResult:
    reports = verify_fibonacci(bounds.n_max)
    summary = summarize_fibonacci(reports)
    result = _check_result(args, [summary], "Fibonacci suite", {"n_max": bounds.n_max})
    if args.format == "json":
        result.text = json.dumps({"ok": summary.ok, "reports": [rep.to_dict() for rep in reports]})
    elif args.format == "text":
        lines = [
            f"n={rep.n} identities={rep.identities_ok} factorization={rep.factorization_ok} "
            f"closed_form={rep.closed_form_ok} shift={rep.shift_ok} boundary={rep.boundary_ok} "
            f"stability={rep.stability_ok}"
            for rep in reports
        ]
        if args.table is not None:
            table = u_table(args.table)[: args.rows, : args.cols]
            lines += [" ".join(str(int(v)) for v in row) for row in table]
        result.text = "\n".join(lines + [result.text])
    return result


def _cmd_families(args, bounds) -> CommandResult:
    report = verify_family_theorems(bounds, workers=args.workers, on_status=_on_status(args))
    return _check_result(args, [report], "Family statements", bounds.to_dict())


def _cmd_positivity(args, bounds) -> CommandResult:
    if args.q is not None:
        q = parse_qspec(args.q)
        report = CheckReport(name="positivity")
        report.record(is_ehrhart_positive(q), f"{q}: not Ehrhart positive")
        return _check_result(args, [report], "Ehrhart positivity")
    report = verify_ehrhart_positivity(
        bounds.positivity_r_max, bounds.positivity_x_max, workers=args.workers, on_status=_on_status(args)
    )
    params = {"r_max": bounds.positivity_r_max, "x_max": bounds.positivity_x_max}
    return _check_result(args, [report], "Ehrhart positivity", params)


def _cmd_identity(args, bounds) -> CommandResult:
    report = verify_hstar_identity(
        bounds.identity_r_max, bounds.identity_x_max, workers=args.workers, on_status=_on_status(args)
    )
    params = {"r_max": bounds.identity_r_max, "x_max": bounds.identity_x_max}
    return _check_result(args, [report], "h* = (1 + ... + z^(ell-1)) g", params)


def _cmd_verify(args, bounds) -> CommandResult:
    workers, on_status = args.workers, _on_status(args)
    reports = [
        verify_hstar_identity(bounds.identity_r_max, bounds.identity_x_max, workers=workers, on_status=on_status),
        verify_classification_2odd(bounds.k_max, bounds.c_max, workers=workers, on_status=on_status),
        verify_family_theorems(bounds, workers=workers, on_status=on_status),
        summarize_fibonacci(verify_fibonacci(bounds.n_max)),
        verify_ehrhart_positivity(
            bounds.positivity_r_max, bounds.positivity_x_max, workers=workers, on_status=on_status
        ),
    ]
    return _check_result(args, reports, "Verification sweeps", bounds.to_dict())


# =============================================================================
# Parser
# =============================================================================


def _bounds(args) -> SearchBounds:
    """Desk or full-scale bounds, with any explicit flag applied on top."""
    bounds = SearchBounds.full_scale() if args.full_scale else SearchBounds.from_env()
    overrides = {
        "r_max": args.rmax,
        "x_max": args.xmax,
        "k_max": args.kmax,
        "c_max": args.cmax,
        "n_max": args.nmax,
        "s_max": args.smax,
        "s_x_max": args.xmax if args.command == "search3" else None,
        "positivity_r_max": args.rmax if args.command == "positivity" else None,
        "positivity_x_max": args.xmax if args.command == "positivity" else None,
        "identity_r_max": args.rmax if args.command == "identity" else None,
        "identity_x_max": args.xmax if args.command == "identity" else None,
    }
    return dataclasses.replace(bounds, **{k: v for k, v in overrides.items() if v is not None})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--out", help="Write the result to FILE (.pdf renders a report)")
    common.add_argument("-v", "--verbose", action="store_true", help="Log progress to stderr")
    common.add_argument("--workers", type=int, default=None, help="Worker processes (default: EHRK_THREADS)")
    for flag in ("--rmax", "--xmax", "--kmax", "--cmax", "--nmax", "--smax"):
        common.add_argument(flag, type=int, default=None)
    common.add_argument("--full-scale", action="store_true", help="Use the published search ranges")

    parser = argparse.ArgumentParser(
        prog="ehrk",
        description="h*-polynomials, Kronecker tests and geometric factorizations for Delta_(1,q)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str, q: str = "required"):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if q == "required":
            p.add_argument("q", help='q-spec such as "2^7,5^5" or "2,2,5"')
        elif q == "optional":
            p.add_argument("q", nargs="?", default=None, help="q-spec")
        p.set_defaults(handler=handler)
        return p

    command("hstar", _cmd_hstar, "h*-polynomial of Delta_(1,q)")
    command("g", _cmd_g, "g-polynomial (h* over the ell-series)")
    command("ell", _cmd_ell, "ell = (1 + sum q) / lcm(r)")
    command("reflexive", _cmd_reflexive, "Reflexivity test")
    command("division", _cmd_division, "Desirable s-division").add_argument(
        "--all", action="store_true", help="Every desirable division in the standard range"
    )
    for name, handler, help_text in (
        ("kronecker", _cmd_kronecker, "Kronecker test with cyclotomic factors"),
        ("factor", _cmd_factor, "Geometric factorization search"),
    ):
        p = command(name, handler, help_text, q="optional")
        p.add_argument("--poly", help='Coefficients "c0,c1,..." instead of a q-spec')
        p.add_argument("--target", choices=["hstar", "g"], default="g" if name == "factor" else "hstar")
    p = command("ehrhart", _cmd_ehrhart, "Ehrhart polynomial from h*", q="optional")
    p.add_argument("--poly", help='h* coefficients "c0,c1,..."')
    p.add_argument("--dim", type=int, help="Dimension for --poly")
    command("count", _cmd_count, "Lattice points of t Delta_(1,q) by enumeration").add_argument(
        "--t", type=int, default=1, help="Dilation factor"
    )
    command("search2", _cmd_search2, "Two-support search", q=None).add_argument(
        "--without-geomfact", action="store_true", help="Only Kronecker h* with no geometric factorization"
    )
    command("search3", _cmd_search3, "Three-support search over pairwise coprime s", q=None)
    command("classify2odd", _cmd_classify2odd, "r = (2, 2k - 1) classification sweep", q=None)
    p = command("fib", _cmd_fib, "Fibonacci suite", q=None)
    p.add_argument("--table", type=int, default=None, help="Also print the u-table for this n")
    p.add_argument("--rows", type=int, default=5)
    p.add_argument("--cols", type=int, default=13)
    command("families", _cmd_families, "Family factorization statements", q=None)
    command("positivity", _cmd_positivity, "Ehrhart positivity sweep (or one q)", q="optional")
    command("identity", _cmd_identity, "h* = (1 + ... + z^(ell-1)) g on two-element supports", q=None)
    command("verify", _cmd_verify, "Every verification sweep at the configured bounds", q=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Run the CLI and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    logging.basicConfig(
        level=logging.INFO if args.verbose else get_log_level(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        bounds = _bounds(args)
        result = args.handler(args, bounds)
    except HStarError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    if args.out:
        path = write_output(result.text, args.out, result.markdown)
        print(f"Wrote {path}", file=sys.stderr)
    else:
        print(result.text)
    return 0 if result.ok else 1


if __name__ == "__main__":
    sys.exit(main())
