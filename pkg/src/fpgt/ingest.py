"""Line-oriented transaction input.

One transaction per line. A line containing a comma is split on commas,
otherwise on whitespace. Blank lines and ``#`` comments are skipped.
"""

from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from .window import Transaction

log = logging.getLogger(__name__)

STDIN = "-"


class MalformedLine(ValueError):
    def __init__(self, line: str, lineno: int | None = None):
        self.line = line
        self.lineno = lineno
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(f"{where}no items in {line.rstrip()!r}")


@dataclass
class SourceStats:
    lines_read: int = 0
    transactions_emitted: int = 0
    malformed_lines: int = 0
    skipped_lines: int = 0


def parse_transaction(line: str, seq: int) -> Transaction | None:
    """Parse one line; None for blank/comment lines, MalformedLine if no items."""
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    if "," in stripped:
        tokens = [t.strip() for t in stripped.split(",")]
    else:
        tokens = stripped.split()
    items = [t for t in tokens if t]
    if not items:
        raise MalformedLine(line)
    return Transaction(seq, items)


class TransactionSource:
    """Single-pass iterator of transactions over an iterable of lines."""

    def __init__(self, lines: Iterable[str]):
        self._lines = lines
        self.stats = SourceStats()

    def __iter__(self) -> Iterator[Transaction]:
        stats = self.stats
        seq = 0
        for lineno, line in enumerate(self._lines, 1):
            stats.lines_read += 1
            try:
                txn = parse_transaction(line, seq + 1)
            except MalformedLine:
                stats.malformed_lines += 1
                log.warning("skipping malformed line %d: %r", lineno, line.rstrip("\n"))
                continue
            if txn is None:
                stats.skipped_lines += 1
                continue
            seq += 1
            stats.transactions_emitted += 1
            yield txn


def _read_lines(handle: TextIO, close: bool) -> Iterator[str]:
    try:
        yield from handle
    finally:
        if close:
            handle.close()


def open_source(spec: str) -> TransactionSource:
    """Open a path, or standard input for ``"-"``. Raises OSError if unreadable."""
    if spec == STDIN:
        return TransactionSource(_read_lines(sys.stdin, close=False))
    handle = open(spec, encoding="utf-8")
    return TransactionSource(_read_lines(handle, close=True))
