"""Ingest -> window -> miner wiring and report rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .miner import MinedPattern, MinerConfig, mine, top_k
from .window import SlidingWindow, Transaction, WindowConfig, WindowSnapshot


@dataclass(frozen=True)
class WindowReport:
    window_end: int
    occupied: int
    threshold: int
    patterns: tuple[MinedPattern, ...]
    top_k: tuple[tuple[str, ...], ...]

    def to_dict(self) -> dict:
        return {
            "window_end": self.window_end,
            "occupied": self.occupied,
            "threshold": self.threshold,
            "patterns": [
                {"items": list(p.itemset), "support": p.support, "closed": p.closed}
                for p in self.patterns
            ],
            "top_k": [list(t) for t in self.top_k],
        }


def make_report(
    snap: WindowSnapshot, config: MinerConfig, include_nonclosed: bool = False
) -> WindowReport:
    mined = mine(snap, config)
    best = top_k(mined, config.k)
    shown = mined if include_nonclosed else [p for p in mined if p.closed]
    return WindowReport(
        window_end=snap.window_end_seq,
        occupied=snap.occupied,
        threshold=config.threshold(snap.occupied),
        patterns=tuple(shown),
        top_k=tuple(p.itemset for p in best),
    )


def run_stream(
    transactions: Iterable[Transaction],
    window: WindowConfig,
    miner: MinerConfig,
    include_nonclosed: bool = False,
) -> Iterator[WindowReport]:
    """Yield one report per mining trigger, including the end-of-stream flush."""
    win = SlidingWindow(window)
    for txn in transactions:
        if win.push(txn):
            yield make_report(win.snapshot(), miner, include_nonclosed)
    if win.flush():
        yield make_report(win.snapshot(), miner, include_nonclosed)


def render_json(report: WindowReport) -> str:
    return json.dumps(report.to_dict(), separators=(",", ":"))


def render_text(report: WindowReport) -> str:
    head = (
        f"window ending at T{report.window_end}  "
        f"occupied={report.occupied}  threshold={report.threshold}"
    )
    rows = [("support", "closed", "itemset")]
    rows += [
        (str(p.support), "yes" if p.closed else "no", " ".join(p.itemset))
        for p in report.patterns
    ]
    w0 = max(len(r[0]) for r in rows)
    w1 = max(len(r[1]) for r in rows)
    lines = [head]
    lines += [f"  {a:>{w0}}  {b:<{w1}}  {c}".rstrip() for a, b, c in rows]
    if not report.patterns:
        lines.append("  (no frequent patterns)")
    topk = ", ".join("{" + " ".join(t) + "}" for t in report.top_k) or "-"
    lines.append(f"  top-{len(report.top_k)}: {topk}")
    return "\n".join(lines)


def render_report(report: WindowReport, mode: str = "json") -> str:
    if mode == "json":
        return render_json(report)
    if mode == "text":
        return render_text(report)
    raise ValueError(f"unknown output mode {mode!r}")
