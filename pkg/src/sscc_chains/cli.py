"""Command-line front end.

Detection (default)::

    sscc-chains --fen "1b4rk/n1p3pr/p1np3p/1p2pp2/3pP3/P1NPPQ2/N1PRK3/1B6" --last-move f3

Fuzzing against the oracles::

    sscc-chains --fuzz 1000 --seed 7 --densities 0.5

Exit codes: 0 chain found (or fuzz clean), 1 not found (or fuzz
disagreements), 2 invalid input.
"""

from __future__ import annotations

import argparse
import sys
from .board import DetectorConfig, parse_fen, square_to_index
from .chains import detect_chain
from .exceptions import InvalidConfig, InvalidFen, InvalidSquare, StartSquareEmpty
from .fuzzing import run_campaign
from .oracles import DENSITIES, oracle_disjoint_paths
from .render import machine_line, render_transcript, verdict_line

EXIT_FOUND, EXIT_NOT_FOUND, EXIT_INVALID = 0, 1, 2


def _densities(text):
    try:
        values = tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid density list {text!r}")
    if not values or any(not 0.0 <= v <= 1.0 for v in values):
        raise argparse.ArgumentTypeError(f"densities must lie in [0, 1]: {text!r}")
    return values


def _non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sscc-chains",
        description="Detect Switch-Side Chain-Chess chains through the last-moved square.")
    parser.add_argument("--fen", help="FEN record; only the placement field is read")
    parser.add_argument("--last-move", help="destination square of the last move, e.g. f3")
    parser.add_argument("--min-ea-size", type=int, default=2)
    parser.add_argument("--width", type=int, default=8)
    parser.add_argument("--height", type=int, default=8)
    parser.add_argument("--trace", action=argparse.BooleanOptionalAction, default=True,
                        help="print every pipeline stage (default on)")
    parser.add_argument("--oracle", action="store_true",
                        help="also run the max-flow oracle and report agreement")
    parser.add_argument("--parallel", action="store_true",
                        help="search first-ring branches concurrently; disables the trace")
    parser.add_argument("--quiet", action="store_true",
                        help="print one machine-readable line")
    parser.add_argument("--fuzz", type=_non_negative, metavar="N",
                        help="run N random samples against the oracles")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--densities", type=_densities, default=DENSITIES,
                        help="comma-separated occupancy densities for --fuzz")
    return parser


def run_detect(args, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    if args.fen is None or args.last_move is None:
        print("error: invalid input: --fen and --last-move are required", file=err)
        return EXIT_INVALID
    try:
        config = DetectorConfig(width=args.width, height=args.height,
                                min_ea_size=args.min_ea_size,
                                parallel_branches=args.parallel)
        board = parse_fen(args.fen, config)
        start = square_to_index(args.last_move, config)
        show_trace = args.trace and not args.parallel and not args.quiet
        verdict, trace = detect_chain(board, start, config)
    except (InvalidFen, InvalidSquare, InvalidConfig, StartSquareEmpty) as exc:
        print(f"error: invalid input: {exc}", file=err)
        return EXIT_INVALID

    if args.quiet:
        print(machine_line(verdict, config), file=out)
    else:
        if show_trace:
            # verdict line goes last, after any oracle report
            stages = render_transcript(trace).rstrip("\n").rsplit("\n", 1)[0]
            print(stages, file=out)
        if args.oracle:
            flow = oracle_disjoint_paths(board, trace.after_compaction, start)
            agreement = "agree" if flow == verdict.found else "DISAGREE"
            print(f"Flow oracle: found={flow} ({agreement})", file=out)
        print(verdict_line(verdict.found), file=out)
    return EXIT_FOUND if verdict.found else EXIT_NOT_FOUND


def run_fuzz(args, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        config = DetectorConfig(width=args.width, height=args.height,
                                min_ea_size=args.min_ea_size)
    except InvalidConfig as exc:
        print(f"error: invalid input: {exc}", file=err)
        return EXIT_INVALID
    result = run_campaign(args.fuzz, args.seed, args.densities, config)
    for record in result.records:
        print(record, file=out)
    print(result.summary(), file=out)
    return EXIT_FOUND if result.disagreements == 0 else EXIT_NOT_FOUND


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.fuzz is not None:
        return run_fuzz(args)
    return run_detect(args)


if __name__ == "__main__":
    sys.exit(main())
