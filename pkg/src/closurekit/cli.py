"""Command-line driver: parse, normalize, verify, and emit results.

Exit codes: 0 success, 2 parse error, 3 algorithm error (iteration limit,
radical strategy failure, unsupported characteristic), 4 verification or
--check failure.  Diagnostics go to stderr; with --json nothing but the
result document ever reaches stdout.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    ClosureKitError,
    IterationLimitExceeded,
    NonPrimeModulus,
    ParseError,
    StrategyFailed,
    UnsupportedCharacteristic,
    VerificationFailed,
)
from .groebner import Ideal, ideals_equal
from .idealops import radical
from .normalize import NormalizationResult, normalize, presentation, verify_result
from .parser import InputDocument, parse_input
from .ring import DEGREVLEX, LEX

SCHEMA = "closure-kit/1"

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_ALGORITHM = 3
EXIT_VERIFY = 4

_ORDERS = {"lex": LEX, "degrevlex": DEGREVLEX}


def build_result_document(result: NormalizationResult, options: dict,
                          include_trace: bool) -> dict:
    components = []
    for comp in result.components:
        pres = comp.presentation
        components.append({
            "variables": list(pres.ring.variables),
            "relations": [g.input_form() for g in pres.defining.groebner_basis()],
            "adjoined": [
                {
                    "name": adj.name,
                    "level": adj.level,
                    "numerator": adj.numerator.input_form(),
                    "denominator": adj.denominator.input_form(),
                }
                for adj in pres.adjoined
            ],
            "iterations": comp.iterations,
        })
    return {
        "schema": SCHEMA,
        "components": components,
        "trace": list(result.trace) if include_trace else [],
        "options": {
            "order": options["order"],
            "radical": options["radical"],
            "max_iter": options["max_iter"],
        },
    }


def emit_json(document: dict) -> str:
    return json.dumps(document, separators=(",", ":"))


def _emit_text(document: dict, out):
    print(f"components: {len(document['components'])}", file=out)
    for i, comp in enumerate(document["components"]):
        print(f"component {i}:", file=out)
        print(f"  variables: {', '.join(comp['variables'])}", file=out)
        relations = comp["relations"] or ["0"]
        print(f"  relations: {', '.join(relations)}", file=out)
        for adj in comp["adjoined"]:
            print(f"  adjoined: {adj['name']} = ({adj['numerator']}) / "
                  f"({adj['denominator']})  [level {adj['level']}]", file=out)
        print(f"  iterations: {comp['iterations']}", file=out)
    for event in document["trace"]:
        print(f"trace: {event}", file=out)


def _check_radical_input(doc: InputDocument) -> bool:
    ideal = Ideal(doc.ring, doc.generators)
    if ideal.is_zero():
        return True
    return ideals_equal(radical(ideal), Ideal(doc.ring, list(ideal.generators)))


def run_cli(argv) -> int:
    parser = argparse.ArgumentParser(
        prog="closure-kit",
        description="Normalization of reduced affine rings over QQ or GF(p).")
    sub = parser.add_subparsers(dest="command", required=True)
    norm = sub.add_parser("normalize", help="normalize the ring in FILE")
    norm.add_argument("file")
    norm.add_argument("--order", choices=sorted(_ORDERS), default="degrevlex")
    norm.add_argument("--radical", choices=["auto", "zerodim", "general"],
                      default="auto")
    norm.add_argument("--max-iter", type=int, default=32)
    norm.add_argument("--json", action="store_true",
                      help="emit the result document as JSON on stdout")
    norm.add_argument("--verify", action="store_true",
                      help="run the independent certification checks")
    norm.add_argument("--check", action="store_true",
                      help="require the input ideal to be radical")
    norm.add_argument("--trace", action="store_true",
                      help="include the event trace in the output")

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK

    try:
        text = open(args.file, encoding="utf-8").read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    try:
        doc = parse_input(text, _ORDERS[args.order])
    except ParseError as exc:
        print(f"{args.file}:{exc.location()}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NonPrimeModulus as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_PARSE

    options = {"order": args.order, "radical": args.radical,
               "max_iter": args.max_iter}

    try:
        if args.check and not _check_radical_input(doc):
            print("check failed: input ideal is not radical", file=sys.stderr)
            return EXIT_VERIFY
        start = presentation(doc.ring, doc.generators)
        result = normalize(start, max_iterations=args.max_iter,
                           radical_strategy=args.radical)
        if args.verify:
            verify_result(start, result)
    except (IterationLimitExceeded, StrategyFailed, UnsupportedCharacteristic) as exc:
        print(f"algorithm error: {exc}", file=sys.stderr)
        return EXIT_ALGORITHM
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ClosureKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ALGORITHM

    document = build_result_document(result, options, args.trace)
    if args.json:
        print(emit_json(document))
    else:
        _emit_text(document, sys.stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))
