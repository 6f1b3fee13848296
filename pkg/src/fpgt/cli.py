"""Command-line front end: ``fpgt --window N [options] [INPUT]``."""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from .ingest import STDIN, open_source
from .miner import MinerConfig
from .pipeline import render_report, run_stream
from .window import WindowConfig

EXIT_OK = 0
EXIT_IO = 1
EXIT_CONFIG = 2

log = logging.getLogger("fpgt")


def parse_min_support(text: str) -> int | Fraction:
    """``"3"`` is an absolute count; ``"0.2"`` or ``"1e-1"`` a fraction."""
    try:
        if any(c in text for c in ".eE"):
            return Fraction(text)
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid support value {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fpgt",
        description="Mine closed frequent itemsets over a sliding window of a transaction stream.",
    )
    p.add_argument("input", nargs="?", default=STDIN, help="transaction file, or '-' for stdin")
    p.add_argument("--window", type=int, required=True, help="window size in transactions")
    p.add_argument("--slide", type=int, default=1, help="arrivals between mining runs")
    p.add_argument(
        "--min-support",
        type=parse_min_support,
        default=Fraction(1, 5),
        help="fraction of the window (0.2) or absolute count (3)",
    )
    p.add_argument("--top-k", type=int, default=10)
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.add_argument(
        "--include-nonclosed",
        action="store_true",
        help="also report frequent itemsets that are not closed",
    )
    return p


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr, format="fpgt: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_CONFIG

    try:
        window = WindowConfig(capacity=args.window, slide=args.slide)
        miner = MinerConfig(min_support=args.min_support, k=args.top_k)
    except ValueError as exc:
        print(f"fpgt: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        source = open_source(args.input)
        for report in run_stream(source, window, miner, args.include_nonclosed):
            sys.stdout.write(render_report(report, args.output) + "\n")
            if args.output == "text":
                sys.stdout.write("\n")
            sys.stdout.flush()
    except (OSError, UnicodeDecodeError) as exc:
        print(f"fpgt: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO

    stats = source.stats
    print(
        f"fpgt: {stats.transactions_emitted} transactions, "
        f"{stats.malformed_lines} malformed lines",
        file=sys.stderr,
    )
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
