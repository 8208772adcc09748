"""
Intersection array analyzer, command-line front end.

Usage:
    python cli.py analyze "21,10,3;1,6,15" [--ordering N]
    python cli.py classical 3 1 2 7
    python cli.py type2 7 7/2 13/2 3
    python cli.py pseudo-partition 2 3 1
    python cli.py screen-known
    python cli.py verify halved-cube 7
    python cli.py export-graph folded-johnson 12 -o fj12.txt

Every command accepts --json, --pdf PATH, --tolerance, --root-tolerance,
--max-vertices, --config and -v/-vv.  Rationals are written as p/q.

Exit codes: 0 ok, 1 a check failed, 2 usage or parse error,
3 infeasible input or analysis not possible (e.g. D < 3).
"""
from __future__ import annotations

import argparse
import logging
import sys
import time
from typing import Dict, List, Optional, Tuple

from core.algebra import same_multiset, to_rational
from core.drg import (
    intersection_numbers,
    q_polynomial_orderings,
    spectrum,
    srg_eigenvalues,
    srg_parameters,
    valencies,
    dual_eigenvalues,
)
from core.errors import (
    ArrayParseError,
    DegenerateDuals,
    DiameterTooSmall,
    DisconnectedGraph,
    GraphTooLarge,
    InfeasibleArray,
    InfeasibleParameters,
    NotDistanceRegular,
    ParameterInconsistency,
    UnsupportedDegree,
)
from core.parser import parse_array
from core.registry import Settings, load_settings
from core.report import build_pdf, dump_json, flatten, report_frame
from modules.classical.parameters import (
    ClassicalParameters,
    PseudoPartitionParameters,
    classical_array,
    classical_ordering,
    classical_p_minus_minus,
    classical_tau,
    classical_terwilliger_polynomial,
    classical_triple_root_list,
    imprimitivity,
    pseudo_partition_array,
)
from modules.oracle.checks import check_distance_regular, export_edge_list, verify_spear, verify_terwilliger
from modules.oracle.graphs import FAMILIES, build
from modules.terwilliger.polynomial import analyze_orderings, terwilliger_polynomial
from modules.type2.parameters import (
    Type2Parameters,
    bannai_ito_parameters,
    condition_check,
    dual_parameters,
    gamma_r,
    leading_coefficient,
    pseudo_partition_type2,
    type2_array,
    type2_eigenvalues,
    type2_ordering,
    type2_terwilliger_roots,
)
from modules.type2.screening import KNOWN_OPEN_VERDICTS, screen, screen_known

log = logging.getLogger("cli")

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3

Report = Dict[str, object]


def _spectrum_rows(spec) -> List[dict]:
    return [{"theta": e.theta, "multiplicity": e.multiplicity} for e in spec]


# --- commands ---

def _infeasible(report: Report, exc: InfeasibleArray) -> Tuple[Report, int]:
    report["feasible"] = False
    report["violations"] = exc.violations
    return report, EXIT_INFEASIBLE


def cmd_analyze(args, settings: Settings) -> Tuple[Report, int]:
    report: Report = {"command": "analyze", "input": args.array}
    try:
        ia = parse_array(args.array)
    except ArrayParseError as exc:
        if exc.diameter is None or exc.diameter >= 3:
            raise
        # too short for T(λ) either way; refuse on the diameter, keep the parse note
        report["D"] = exc.diameter
        report["parse_error"] = str(exc)
        report["error"] = str(DiameterTooSmall(3, exc.diameter, "the Terwilliger polynomial"))
        return report, EXIT_INFEASIBLE
    except InfeasibleArray as exc:
        return _infeasible(report, exc)
    try:
        report["array"] = str(ia)
        report["D"] = ia.D
        vals = valencies(ia)
        P = intersection_numbers(ia)
        spec = spectrum(ia, settings.root_tolerance)
        orderings = q_polynomial_orderings(ia, spec, tolerance=settings.tolerance)
    except InfeasibleArray as exc:
        return _infeasible(report, exc)
    report["feasible"] = True
    report["valencies"] = list(vals)
    report["v"] = vals.v
    report["warnings"] = list(ia.warnings + vals.warnings + P.warnings + spec.warnings)
    report["spectrum"] = _spectrum_rows(spec)
    report["q_polynomial_orderings"] = [str(o) for o in orderings]

    if ia.D < 3:
        if ia.D == 2:
            report["srg"] = list(srg_parameters(ia))
            report["srg_eigenvalues"] = list(srg_eigenvalues(*srg_parameters(ia)))
        report["error"] = str(DiameterTooSmall(3, ia.D, "the Terwilliger polynomial"))
        return report, EXIT_INFEASIBLE
    analyses = analyze_orderings(ia, spec, orderings, args.ordering, settings.tolerance, settings.root_tolerance)
    report["orderings"] = [a.to_dict() for a in analyses]
    return report, EXIT_OK


def cmd_classical(args, settings: Settings) -> Tuple[Report, int]:
    cp = ClassicalParameters(args.D, args.b, args.alpha, args.beta)
    ia = classical_array(cp)
    spec = spectrum(ia, settings.root_tolerance)
    ordering, duals = classical_ordering(cp, ia, spec, tolerance=settings.tolerance)
    data = terwilliger_polynomial(ia, duals, settings.root_tolerance)
    closed = classical_triple_root_list(cp)
    kind = imprimitivity(cp)
    checks = {
        "roots_match_closed_form": same_multiset(closed, data.roots.values(), settings.tolerance),
        "T_matches_closed_form": classical_terwilliger_polynomial(cp) == data.T,
        "tau_matches_closed_form": tuple(classical_tau(cp)) == tuple(data.tau),
        "p_minus_minus_matches_closed_form": classical_p_minus_minus(cp) == data.p_minus_minus,
        "T_vanishes_at_minus_one": data.T(to_rational(-1)) == 0,
    }
    report: Report = {
        "command": "classical",
        "parameters": {"D": cp.D, "b": cp.b, "alpha": cp.alpha, "beta": cp.beta},
        "array": str(ia),
        "bipartite": kind.bipartite,
        "antipodal": kind.antipodal,
        "spectrum": _spectrum_rows(spec),
        "ordering": str(ordering),
        "dual_eigenvalues": list(duals.theta_star),
        "terwilliger": data.to_dict(),
        "closed_form_roots": sorted(closed),
        "checks": checks,
    }
    return report, EXIT_OK if all(checks.values()) else EXIT_FAILED


def cmd_type2(args, settings: Settings) -> Tuple[Report, int]:
    p = Type2Parameters(args.t, args.x, args.y, args.D)
    ia = type2_array(p)
    spec = spectrum(ia, settings.root_tolerance)
    thetas = type2_eigenvalues(p, ia, spec)
    ordering = type2_ordering(p, ia, spec, q_polynomial_orderings(ia, spec, tolerance=settings.tolerance))
    data = terwilliger_polynomial(ia, dual_eigenvalues(ia, spec, ordering, tolerance=settings.tolerance),
                                  settings.root_tolerance)
    formulas = type2_terwilliger_roots(p, ia)
    duals = dual_parameters(p, ia, spec, ordering=ordering)
    bi = bannai_ito_parameters(p)
    expected_lead = leading_coefficient(p, ia)
    checks = {
        "roots_match_formulas": same_multiset(data.roots.values(), formulas.values, settings.tolerance),
        "root_identities_hold": formulas.consistent,
        "leading_coefficient_matches": data.leading == expected_lead,
        "dual_parameters_consistent": not duals.discrepancies,
    }
    report: Report = {
        "command": "type2",
        "parameters": p.to_dict(),
        "h": p.h,
        "t_star": p.t_star,
        "array": str(ia),
        "eigenvalues": list(thetas),
        "ordering": str(ordering),
        "gamma2": gamma_r(ia, 2),
        "condition": condition_check(ia),
        "bannai_ito": {"r1": bi.r1, "r2": bi.r2, "r3": bi.r3, "s": bi.s, "s_star": bi.s_star},
        "dual_parameters": duals.to_dict(),
        "terwilliger": data.to_dict(),
        "formula_roots": sorted(formulas.values),
        "root_mismatches": list(formulas.mismatches),
        "expected_leading_coefficient": expected_lead,
        "screening": screen(p, settings.tolerance, settings.root_tolerance).to_dict(),
        "checks": checks,
    }
    return report, EXIT_OK if all(checks.values()) else EXIT_FAILED


def cmd_pseudo_partition(args, settings: Settings) -> Tuple[Report, int]:
    pp = PseudoPartitionParameters(args.alpha, args.Dprime, args.gamma)
    ia = pseudo_partition_array(pp)
    report: Report = {
        "command": "pseudo-partition",
        "parameters": {"alpha": pp.alpha, "Dprime": pp.Dprime, "gamma": pp.gamma},
        "cover_diameter": pp.cover_diameter,
        "array": str(ia),
    }
    if pp.alpha == 0:
        return report, EXIT_OK
    p = pseudo_partition_type2(pp)
    same = type2_array(p) == ia
    report["type2"] = p.to_dict()
    report["checks"] = {"type2_array_matches": same}
    report["screening"] = screen(p, settings.tolerance, settings.root_tolerance).to_dict()
    return report, EXIT_OK if same else EXIT_FAILED


def cmd_screen_known(args, settings: Settings) -> Tuple[Report, int]:
    reports = screen_known(settings.tolerance, settings.root_tolerance)
    verdicts_ok = [r.verdict == want for r, want in zip(reports, KNOWN_OPEN_VERDICTS)]
    bound_ok = [r.interval_bound == 0 for r in reports]
    report: Report = {
        "command": "screen-known",
        "reports": [r.to_dict() for r in reports],
        "checks": {"verdicts_as_expected": all(verdicts_ok), "interval_bound_equality": all(bound_ok)},
    }
    return report, EXIT_OK if all(verdicts_ok) and all(bound_ok) else EXIT_FAILED


def cmd_verify(args, settings: Settings) -> Tuple[Report, int]:
    g = build(args.family, args.params, settings.max_vertices)
    report: Report = {"command": "verify", "graph": g.name, "vertices": g.n}
    try:
        ia = check_distance_regular(g)
    except (NotDistanceRegular, DisconnectedGraph) as exc:
        report["distance_regular"] = False
        report["error"] = str(exc)
        report["witness"] = list(getattr(exc, "witness", ()))
        return report, EXIT_FAILED
    report["distance_regular"] = True
    report["array"] = str(ia)
    spec = spectrum(ia, settings.root_tolerance)
    orderings = q_polynomial_orderings(ia, spec, tolerance=settings.tolerance)
    if args.ordering is not None:
        if not 0 <= args.ordering < len(orderings):
            raise IndexError(f"ordering index {args.ordering} out of range, {len(orderings)} ordering(s) found")
        orderings = [orderings[args.ordering]]
    results = []
    passed = True
    for ordering in orderings:
        entry = {"ordering": str(ordering), "spear": verify_spear(g, ordering, ia, tolerance=settings.tolerance).to_dict()}
        if ia.D >= 3:
            entry["terwilliger"] = verify_terwilliger(g, ordering, ia, tolerance=settings.tolerance).to_dict()
        passed = passed and entry["spear"]["passed"] and entry.get("terwilliger", {"passed": True})["passed"]
        results.append(entry)
    report["orderings"] = results
    report["passed"] = passed
    return report, EXIT_OK if passed else EXIT_FAILED


def cmd_export_graph(args, settings: Settings) -> Tuple[Optional[Report], int]:
    g = build(args.family, args.params, settings.max_vertices)
    if args.output in (None, "-"):
        export_edge_list(g, sys.stdout)
        return None, EXIT_OK
    with open(args.output, "w") as fh:
        edges = export_edge_list(g, fh)
    return {"command": "export-graph", "graph": g.name, "vertices": g.n, "edges": edges, "output": args.output}, EXIT_OK


# --- argument parsing ---

def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--pdf", metavar="PATH", help="also write the report as a PDF")
    common.add_argument("--tolerance", type=float, help="approximate-path tolerance")
    common.add_argument("--root-tolerance", type=float, help="residual-root tolerance")
    common.add_argument("--max-vertices", type=int, help="graph size cap")
    common.add_argument("--config", help="settings file (TOML)")
    common.add_argument("-v", "--verbose", action="count", default=0)
    return common


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cli.py", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)
    common = _common()

    p = sub.add_parser("analyze", parents=[common], help="spectrum, Q-orderings and T(λ) of an array")
    p.add_argument("array", help='"b0,...;c1,..." with p/q entries, braces optional')
    p.add_argument("--ordering", type=int, help="restrict to one Q-polynomial ordering (index)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classical", parents=[common], help="array and closed forms for classical parameters")
    p.add_argument("D", type=int)
    p.add_argument("b", type=to_rational)
    p.add_argument("alpha", type=to_rational)
    p.add_argument("beta", type=to_rational)
    p.set_defaults(func=cmd_classical)

    p = sub.add_parser("type2", parents=[common], help="type-2 parameters: array, roots, duals and screening")
    p.add_argument("t", type=to_rational)
    p.add_argument("x", type=to_rational)
    p.add_argument("y", type=to_rational)
    p.add_argument("D", type=int)
    p.set_defaults(func=cmd_type2)

    p = sub.add_parser("pseudo-partition", parents=[common], help="pseudo-partition array for (alpha, D', gamma)")
    p.add_argument("alpha", type=int, choices=(0, 1, 2))
    p.add_argument("Dprime", type=int)
    p.add_argument("gamma", type=int, choices=(1, 2))
    p.set_defaults(func=cmd_pseudo_partition)

    p = sub.add_parser("screen-known", parents=[common], help="screen the four open type-2 arrays")
    p.set_defaults(func=cmd_screen_known)

    p = sub.add_parser("verify", parents=[common], help="build a graph and run the brute-force oracles")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--ordering", type=int, help="restrict to one Q-polynomial ordering (index)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-graph", parents=[common], help="write a graph as a 0-indexed edge list")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("-o", "--output", help="file to write, default stdout")
    p.set_defaults(func=cmd_export_graph)
    return ap


def _settings(args) -> Settings:
    base = load_settings(args.config)
    return Settings(
        tolerance=args.tolerance if args.tolerance is not None else base.tolerance,
        root_tolerance=args.root_tolerance if args.root_tolerance is not None else base.root_tolerance,
        max_vertices=args.max_vertices if args.max_vertices is not None else base.max_vertices,
    )


def _emit(report: Report, args) -> None:
    if args.json:
        print(dump_json(report))
    else:
        print(report_frame(report).to_string(index=False))
    if args.pdf:
        with open(args.pdf, "wb") as fh:
            fh.write(build_pdf(f"{args.command} {' '.join(_subject(args))}", flatten(report)))


def _subject(args) -> List[str]:
    for name in ("array", "family"):
        if getattr(args, name, None):
            return [str(getattr(args, name))] + [str(x) for x in getattr(args, "params", [])]
    return [str(getattr(args, name)) for name in ("D", "b", "alpha", "beta", "t", "x", "y", "Dprime", "gamma")
            if getattr(args, name, None) is not None]


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    level = logging.WARNING if args.verbose == 0 else (logging.INFO if args.verbose == 1 else logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    started = time.perf_counter()
    try:
        settings = _settings(args)
        report, code = args.func(args, settings)
    except ArrayParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InfeasibleArray, InfeasibleParameters, ParameterInconsistency, DiameterTooSmall,
            DegenerateDuals, UnsupportedDegree) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (NotDistanceRegular, DisconnectedGraph) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (GraphTooLarge, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if report is not None:
        report["elapsed_seconds"] = round(time.perf_counter() - started, 3)
        _emit(report, args)
    log.info("%s finished with exit code %d", args.command, code)
    return code


if __name__ == "__main__":
    sys.exit(main())
