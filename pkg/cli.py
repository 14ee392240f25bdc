"""
ShiftLab command line
parse-ds, certify-threshold, build, check and verify
"""

import argparse
import json
import logging
import sys
from typing import Dict, List, Optional

from pydantic import ValidationError

from core.complex_parser import ComplexFileParser, format_complex_text
from core.complexes import is_pure
from core.config import configure_logging, get_settings
from core.ds_string import canonicalize, evaluate, label_from_string, parse_ds
from core.errors import ShiftLabError
from core.graphical import (
    closed_neighborhood_complex,
    dominance_complex,
    find_balanced_coloring,
    gen_independence_complex,
    independence_complex,
    is_flag,
    is_pencil,
    neighborhood_complex,
)
from core.harness import run_theorem
from core.models import TheoremId
from core.shifted import find_shifted_labeling
from core.storage import LocalStorage
from core.threshold import certify, creation_sequence, stuck_vertices

logger = logging.getLogger("shiftlab.cli")

EXIT_OK = 0
EXIT_FOUND = 1
EXIT_USAGE = 2

GRAPH_BUILDERS = {
    "indep": independence_complex,
    "dom": dominance_complex,
    "nbhd": neighborhood_complex,
    "closed-nbhd": closed_neighborhood_complex,
}
PROPERTIES = ("flag", "balanced", "pencil", "pure", "shifted")


def _print_json(data) -> None:
    print(json.dumps(data, sort_keys=True, indent=2))


def cmd_parse_ds(args: argparse.Namespace) -> int:
    s = parse_ds(args.string)
    canonical = canonicalize(s)
    labels = label_from_string(s)
    K = evaluate(s)
    if args.json:
        _print_json(
            {
                "canonical": canonical.render(),
                "labels": [labels.rank(i) for i in range(1, s.vertex_count + 1)],
                "facets": [list(f) for f in K.facets],
            }
        )
    else:
        print(f"canonical: {canonical.render()}")
        print("labels:    " + " ".join(str(labels.rank(i)) for i in range(1, s.vertex_count + 1)))
        print(format_complex_text(K), end="")
    return EXIT_OK


def cmd_certify_threshold(args: argparse.Namespace) -> int:
    G = ComplexFileParser().parse_graph_file(args.graph_file)
    sequence = creation_sequence(G)
    if sequence is None:
        _print_json({"is_threshold": False, "stuck_vertices": list(stuck_vertices(G))})
        return EXIT_FOUND
    certificate = certify(G)
    _print_json(
        {
            "is_threshold": True,
            "creation_sequence": sequence.to_ds_string().render(),
            "creation_vertices": list(sequence.vertices),
            "weights": {str(v): w for v, w in certificate.weights.items()},
            "t": certificate.threshold,
        }
    )
    return EXIT_OK


def cmd_build(args: argparse.Namespace) -> int:
    parser = ComplexFileParser()
    if args.op == "gen-indep":
        result = gen_independence_complex(parser.parse_complex_file(args.file))
    else:
        result = GRAPH_BUILDERS[args.op](parser.parse_graph_file(args.file))
    print(format_complex_text(result), end="")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    K = ComplexFileParser().parse_complex_file(args.file)
    witness: Optional[Dict] = None
    if args.property == "flag":
        holds = is_flag(K)
    elif args.property == "pure":
        holds = is_pure(K)
    elif args.property == "pencil":
        holds = is_pencil(K)
    elif args.property == "balanced":
        coloring = find_balanced_coloring(K)
        holds = coloring is not None
        witness = coloring.colors if coloring else None
    else:
        labeling = find_shifted_labeling(K)
        holds = labeling is not None
        witness = labeling.ranks if labeling else None
    if args.json:
        payload = {"property": args.property, "holds": holds}
        if witness is not None:
            payload["witness"] = {str(k): v for k, v in witness.items()}
        _print_json(payload)
    else:
        print(f"{args.property}: {'true' if holds else 'false'}")
        if witness is not None:
            print("witness: " + " ".join(f"{k}:{v}" for k, v in sorted(witness.items())))
    return EXIT_OK if holds else EXIT_FOUND


def cmd_verify(args: argparse.Namespace) -> int:
    theorem = TheoremId.parse(args.theorem)
    report = run_theorem(
        theorem,
        bound=args.max_n,
        jobs=args.jobs,
        first_counterexample=args.first_counterexample,
        allow_large=args.allow_large,
    )
    if args.json:
        print(report.to_json())
    else:
        print(f"{report.theorem.value} n={report.bound}: checked {report.checked}, "
              f"{len(report.counterexamples)} counterexample(s), {report.elapsed_ms} ms")
        for name, count in report.tallies.items():
            print(f"  {name}: {count}")
        for c in report.counterexamples:
            print(f"  {c.input}: {c.detail}")
    if args.save:
        path = LocalStorage().save_report(report)
        logger.info("report saved to %s", path)
    if theorem is TheoremId.HOPE:
        return EXIT_OK
    return EXIT_OK if report.passed else EXIT_FOUND


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiftlab", description="Shifted complexes, threshold graphs and their theorems"
    )
    parser.add_argument("--log-level", default=None, help="root log level (default from SHIFTLAB_LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse-ds", help="parse a construction string and print its complex")
    p.add_argument("string")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_parse_ds)

    p = sub.add_parser("certify-threshold", help="weights and threshold for a graph file")
    p.add_argument("graph_file")
    p.set_defaults(handler=cmd_certify_threshold)

    p = sub.add_parser("build", help="build a complex from a graph or complex file")
    p.add_argument("--op", required=True, choices=sorted(list(GRAPH_BUILDERS) + ["gen-indep"]))
    p.add_argument("file")
    p.set_defaults(handler=cmd_build)

    p = sub.add_parser("check", help="test one property of a complex file")
    p.add_argument("--property", required=True, choices=PROPERTIES)
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("verify", help="run a theorem sweep, the HOPE search or the golden replays")
    p.add_argument("--theorem", required=True, type=_theorem_arg)
    p.add_argument("--max-n", type=int, default=None, help="sweep bound (default from settings)")
    p.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="worker processes, 0 = one per CPU (HOPE at n=7 needs 3 or more to finish within ten minutes)",
    )
    p.add_argument("--json", action="store_true")
    p.add_argument("--first-counterexample", action="store_true")
    p.add_argument("--allow-large", action="store_true", help="run above the enumeration guard")
    p.add_argument("--save", action="store_true", help="persist the report under the data dir")
    p.set_defaults(handler=cmd_verify)

    return parser


def _theorem_arg(value: str) -> str:
    try:
        return TheoremId.parse(value).value
    except ValueError:
        choices = ", ".join(t.value for t in TheoremId)
        raise argparse.ArgumentTypeError(f"unknown theorem {value!r} (choose from {choices})")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        configure_logging(args.log_level or get_settings().log_level)
        return args.handler(args)
    except (ShiftLabError, ValidationError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
