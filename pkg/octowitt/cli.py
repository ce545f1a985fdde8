# -*- coding: utf-8 -*-
"""
Command-line front end.

Usage:
    octowitt tables <kind> [--n N] [--format json|text]
    octowitt decompose <coords | file | -> [--n N] [--multi]
    octowitt apply <operator> <polynomial | file | ->
    octowitt verify [--n-max N] [--samples S] [--seed SEED] [--report PATH] [--no-timings]

Exit status: 0 on success, 1 when verification finds a failure or a
decomposition does not reconstruct exactly, 2 on usage errors (bad
arguments, malformed JSON, wrong dimensions).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .codec import (
    decode_coordinates,
    decode_polynomial,
    dumps,
    encode_element,
    encode_matrix,
    encode_polynomial,
    load_json_argument,
)
from .config import settings
from .diffops import op_apply, parse_operator_spec
from .errors import OctowittError
from .models import DecompositionBlock, DecompositionResult
from .tables import TABLE_KINDS, build_table, render_table
from .verification import run_verification
from .witt import witt_decompose, witt_decompose_multi

logger = logging.getLogger(__name__)


def _read_source(source: str) -> object:
    stdin_text = sys.stdin.read() if source == "-" else ""
    return load_json_argument(source, stdin_text)


def cmd_tables(args: argparse.Namespace) -> int:
    """Print one of the algebra tables."""
    table = build_table(args.kind, args.n)
    print(render_table(table, args.format))
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    """Witt decomposition of a vector of ℝ^{8n}."""
    coords = decode_coordinates(_read_source(args.input), 8 * args.n)
    if args.multi:
        result = witt_decompose_multi(coords, args.n, strict=False)
    else:
        result = witt_decompose(coords, args.n, strict=False)
    blocks = [
        DecompositionBlock(
            block=frame.block,
            twistor=encode_matrix(frame.vectors),
            hermitian=[encode_element(z) for z in hermitian.variables],
        )
        for frame, hermitian in zip(result.twistors, result.hermitians)
    ]
    output = DecompositionResult(
        n=result.n,
        multi=result.multi,
        blocks=blocks,
        reconstruction=encode_element(result.reconstruction),
        reconstruction_exact=result.exact,
    )
    print(dumps(output.model_dump(mode="json")))
    if not result.exact:
        logger.error("reconstruction of X from the Hermitian variables is not exact (n=%d)", result.n)
        return 1
    return 0


def cmd_apply(args: argparse.Namespace) -> int:
    """Apply a differential operator to a polynomial."""
    poly = decode_polynomial(_read_source(args.polynomial))
    op = parse_operator_spec(args.operator, poly.nvars)
    print(dumps(encode_polynomial(op_apply(op, poly))))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    """Run every identity suite and report failures."""
    n_max = args.n_max if args.n_max is not None else settings.n_max
    samples = args.samples if args.samples is not None else settings.samples
    seed = args.seed if args.seed is not None else settings.seed
    if n_max < 1:
        raise OctowittError(f"--n-max must be at least 1, got {n_max}")
    if samples < 0:
        raise OctowittError(f"--samples must be non-negative, got {samples}")

    report = run_verification(
        n_max=n_max,
        samples=samples,
        seed=seed,
        sample_bound=settings.sample_bound,
        timings=not args.no_timings,
    )
    exclude = {"suites": {"__all__": {"wall_time"}}} if args.no_timings else None
    text = dumps(report.model_dump(mode="json", exclude=exclude))

    if args.report:
        Path(args.report).write_text(text + "\n", encoding="utf-8")
        for suite in report.suites:
            status = "ok" if suite.passed else f"{len(suite.failures)} failed"
            print(f"{suite.name}: {suite.checks_run} checks, {status}")
        print(f"Report written to: {args.report}")
    else:
        print(text)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octowitt",
        description="Exact octonionic Witt basis computations",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "--log-level",
        default=None,
        type=str.upper,
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        help=f"Logging level (default: {settings.log_level})",
    )

    subparsers = parser.add_subparsers(dest="command", help="Commands")

    # tables command
    tables_parser = subparsers.add_parser("tables", help="Print an algebra table")
    tables_parser.add_argument("kind", choices=TABLE_KINDS, help="Table to print")
    tables_parser.add_argument("--n", type=int, default=1, help="Number of 8-blocks (default: 1)")
    tables_parser.add_argument(
        "--format",
        choices=("json", "text"),
        default="json",
        help="Output format (default: json)",
    )

    # decompose command
    decompose_parser = subparsers.add_parser("decompose", help="Witt decomposition of a vector")
    decompose_parser.add_argument("input", help="JSON array of 8n rationals, a file path, or - for stdin")
    decompose_parser.add_argument("--n", type=int, default=1, help="Number of 8-blocks (default: 1)")
    decompose_parser.add_argument(
        "--multi",
        action="store_true",
        help="Use the O^n coefficient variant",
    )

    # apply command
    apply_parser = subparsers.add_parser("apply", help="Apply an operator to a polynomial")
    apply_parser.add_argument("operator", help="dirac | twistor:i[:block] | hermitian:i[:block]")
    apply_parser.add_argument("polynomial", help="Polynomial JSON, a file path, or - for stdin")

    # verify command
    verify_parser = subparsers.add_parser("verify", help="Run the identity suites")
    verify_parser.add_argument("--n-max", type=int, default=None, help="Largest block count")
    verify_parser.add_argument("--samples", type=int, default=None, help="Random samples per property")
    verify_parser.add_argument("--seed", type=int, default=None, help="Random seed")
    verify_parser.add_argument("--report", help="Write the JSON report to this path")
    verify_parser.add_argument(
        "--no-timings",
        action="store_true",
        help="Leave wall times out of the report",
    )
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=(args.log_level or settings.log_level).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    if not args.command:
        parser.print_help()
        return 2

    commands = {
        "tables": cmd_tables,
        "decompose": cmd_decompose,
        "apply": cmd_apply,
        "verify": cmd_verify,
    }

    try:
        return commands[args.command](args)
    except OctowittError as exc:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"Error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
