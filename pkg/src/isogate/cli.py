"""Command-line front end.

verify runs registered claims (one or all) and reports pass/fail;
search, curves, and torsion-bound expose the underlying computations
directly.  Exit codes: 0 success (for verify: nothing failed), 1 a claim
failed, 2 usage or computation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .claims import (
    CLAIM_IDS,
    Config,
    claim_description,
    run_all,
    run_claim,
    write_reports,
)
from .errors import IsogateError
from .gatefinder import find_gate_groups
from .matgroup import format_matrix
from .modcurve import named_curve, torsion_bound_cyclotomic
from .ratcurves import disc_square_class_of_j, parse_rational_expr


def _load_config(args) -> Config:
    if getattr(args, "config", None):
        return Config.from_json(args.config)
    return Config()


def _cmd_verify(args) -> int:
    config = _load_config(args)
    if args.all:
        reports = run_all(args.json, config=config)
        return 0 if all(rep.status != "fail" for rep in reports) else 1
    if not args.claim:
        print("verify needs --claim <id> or --all", file=sys.stderr)
        return 2
    moduli = tuple(args.r) if args.r else None
    report = run_claim(args.claim, moduli=moduli, config=config)
    print(f"{report.claim_id}: {claim_description(report.claim_id)}")
    print(f"status: {report.status}  ({report.elapsed_ms} ms)")
    if report.status != "pass":
        print("expected:", json.dumps(report.expected, sort_keys=True))
        print("computed:", json.dumps(report.computed, sort_keys=True))
    if args.json:
        write_reports(args.json, [report])
    return 0 if report.status == "pass" else 1


def _cmd_search(args) -> int:
    result = find_gate_groups(args.r)
    payload = {
        "r": result.r,
        "classes": [
            {
                "order": group.order,
                "index": index,
                "generators": [format_matrix(g, args.r) for g in group.generators],
            }
            for group, index in zip(result.groups, result.indices)
        ],
        "plus_minus_pairs": [list(p) for p in result.plus_minus_pairs],
    }
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    print(f"r={result.r}: {len(result.groups)} conjugacy classes")
    for i, entry in enumerate(payload["classes"]):
        print(f"  class {i}: order {entry['order']}, index {entry['index']}")
        for gen in entry["generators"]:
            print(f"    {gen}")
    if result.plus_minus_pairs:
        for i, j in result.plus_minus_pairs:
            print(f"  class {i} = <-I, class {j}>")
    return 0


def _cmd_disc_class(args) -> int:
    j = parse_rational_expr(args.j)
    print(disc_square_class_of_j(j))
    return 0


def _cmd_torsion_bound(args) -> int:
    curve = named_curve(args.curve)
    report = torsion_bound_cyclotomic(curve, args.r)
    print(f"{report.curve_label} over the {report.r}th cyclotomic field")
    for q, n in zip(report.primes, report.counts):
        print(f"  q={q}: {n} points")
    print(f"gcd bound: {report.gcd_bound}")
    print(f"rational points found: {report.rational_points_found}")
    print(f"note: {report.caveat}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isogate",
        description="recompute and verify the finite checks behind "
        "r-isogenies of rational-j elliptic curves over cyclotomic fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run one claim or the whole registry")
    verify.add_argument("--claim", choices=CLAIM_IDS, metavar="ID",
                        help="claim id, one of: " + ", ".join(CLAIM_IDS))
    verify.add_argument("--all", action="store_true", help="run every claim")
    verify.add_argument("--r", type=int, nargs="+",
                        help="restrict to these moduli (claims that take them)")
    verify.add_argument("--json", metavar="PATH", help="also write a JSON report")
    verify.add_argument("--config", metavar="PATH",
                        help="JSON file overriding prime lists and bounds")
    verify.set_defaults(func=_cmd_verify)

    search = sub.add_parser("search", help="run a search directly")
    search_sub = search.add_subparsers(dest="target", required=True)
    gate = search_sub.add_parser("gate-groups",
                                 help="proper applicable subgroups with "
                                 "line-fixing determinant-one part")
    gate.add_argument("--r", type=int, required=True)
    gate.add_argument("--json", metavar="PATH")
    gate.set_defaults(func=_cmd_search)

    curves = sub.add_parser("curves", help="invariant computations")
    curves_sub = curves.add_subparsers(dest="target", required=True)
    disc = curves_sub.add_parser("disc-class",
                                 help="discriminant square class of a j-invariant")
    disc.add_argument("--j", required=True, metavar="EXPR",
                      help="rational j, plain or factored like -3^3*5^3")
    disc.set_defaults(func=_cmd_disc_class)

    torsion = sub.add_parser("torsion-bound",
                             help="reduction-based torsion bound report")
    torsion.add_argument("--curve", required=True, metavar="LABEL",
                         help='curve label such as "X0(14)"')
    torsion.add_argument("--r", type=int, required=True)
    torsion.set_defaults(func=_cmd_torsion_bound)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (IsogateError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
