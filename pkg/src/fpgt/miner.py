"""Frequent Pattern Generation Tree: level-wise closed itemset mining.

Level 1 holds one node per item. Level ``i+1`` is built by joining pairs of
non-dead level-``i`` nodes that share their first ``i-1`` items; the child's
vector is the ternary combine of its parents. Nodes under the support
threshold are DEAD. After each expansion, lower-level nodes with an
equal-support superset one level up are marked NOT_CLOSED: they are kept as
join parents but left out of the closed output.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from .ternary import TernaryVector, combine
from .window import WindowSnapshot

Itemset = tuple[str, ...]


class Status(enum.Enum):
    LIVE = "live"
    DEAD = "dead"
    NOT_CLOSED = "not_closed"


@dataclass(frozen=True)
class MinerConfig:
    """``min_support`` is an absolute count (int >= 1) or a fraction in (0, 1]."""

    min_support: Union[int, float, Fraction] = 0.2
    k: int = 10

    def __post_init__(self):
        ms = self.min_support
        if isinstance(ms, bool):
            raise ValueError("min_support must be a number")
        if isinstance(ms, int):
            if ms < 1:
                raise ValueError(f"absolute min_support must be >= 1, got {ms}")
        elif not 0 < ms <= 1:
            raise ValueError(f"fractional min_support must be in (0, 1], got {ms}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")

    def threshold(self, occupied: int) -> int:
        ms = self.min_support
        if isinstance(ms, int):
            return ms
        # Fraction(str(x)) reads 0.2 as 1/5 so that 0.2 * 5 is exactly 1
        frac = ms if isinstance(ms, Fraction) else Fraction(str(ms))
        return max(1, math.ceil(frac * occupied))


@dataclass(eq=False)
class PatternNode:
    itemset: Itemset
    vector: TernaryVector
    support: int
    status: Status = Status.LIVE

    @property
    def alive(self) -> bool:
        return self.status is not Status.DEAD


@dataclass(frozen=True, order=False)
class MinedPattern:
    itemset: Itemset
    support: int
    closed: bool

    def sort_key(self):
        return pattern_key(self.itemset, self.support)


def pattern_key(itemset: Itemset, support: int):
    return (-support, len(itemset), itemset)


@dataclass
class FPGTree:
    threshold: int
    levels: list[list[PatternNode]] = field(default_factory=list)
    _index: list[dict[Itemset, PatternNode]] = field(default_factory=list, repr=False)

    def add_level(self, nodes: list[PatternNode]) -> None:
        self.levels.append(nodes)
        self._index.append({n.itemset: n for n in nodes})

    def level(self, i: int) -> list[PatternNode]:
        """Nodes of level ``i`` (1-based)."""
        return self.levels[i - 1]

    def lookup(self, itemset: Itemset) -> PatternNode | None:
        i = len(itemset)
        if i == 0 or i > len(self._index):
            return None
        return self._index[i - 1].get(itemset)

    def nodes(self) -> Iterable[PatternNode]:
        for level in self.levels:
            yield from level


def _status(support: int, threshold: int) -> Status:
    return Status.DEAD if support < threshold else Status.LIVE


def build_level1(snap: WindowSnapshot, config: MinerConfig) -> FPGTree:
    tree = FPGTree(threshold=config.threshold(snap.occupied))
    nodes = []
    for item in snap.item_order:
        vec = snap.item_vector(item)
        sup = vec.support
        nodes.append(PatternNode((item,), vec, sup, _status(sup, tree.threshold)))
    tree.add_level(nodes)
    return tree


def expand_level(tree: FPGTree, level: int) -> list[PatternNode]:
    """Generate level ``level + 1`` by prefix join and append it to the tree.

    Returns the new nodes (DEAD ones included). Nothing is appended when no
    candidate can be formed.
    """
    parents = [n for n in tree.level(level) if n.alive]
    threshold = tree.threshold
    new: list[PatternNode] = []
    # nodes are in canonical itemset order, so equal prefixes are contiguous
    start = 0
    while start < len(parents):
        prefix = parents[start].itemset[:-1]
        stop = start + 1
        while stop < len(parents) and parents[stop].itemset[:-1] == prefix:
            stop += 1
        for a in range(start, stop):
            left = parents[a]
            for b in range(a + 1, stop):
                right = parents[b]
                vec = combine(left.vector, right.vector)
                sup = vec.support
                new.append(
                    PatternNode(
                        left.itemset + right.itemset[-1:],
                        vec,
                        sup,
                        _status(sup, threshold),
                    )
                )
        start = stop
    if new:
        tree.add_level(new)
    return new


def prune_nonclosed(tree: FPGTree, level: int) -> int:
    """Mark level-``level`` nodes subsumed by an equal-support child as NOT_CLOSED."""
    if level >= len(tree.levels):
        return 0
    marked = 0
    for child in tree.level(level + 1):
        if not child.alive:
            continue
        items = child.itemset
        for drop in range(len(items)):
            sub = tree.lookup(items[:drop] + items[drop + 1 :])
            if (
                sub is not None
                and sub.status is Status.LIVE
                and sub.support == child.support
            ):
                sub.status = Status.NOT_CLOSED
                marked += 1
    return marked


def grow_tree(snap: WindowSnapshot, config: MinerConfig) -> FPGTree:
    tree = build_level1(snap, config)
    level = 1
    while expand_level(tree, level):
        prune_nonclosed(tree, level)
        level += 1
    return tree


def mine(snap: WindowSnapshot, config: MinerConfig) -> list[MinedPattern]:
    """All frequent itemsets of the snapshot, each flagged closed or not."""
    tree = grow_tree(snap, config)
    out = [
        MinedPattern(n.itemset, n.support, n.status is Status.LIVE)
        for n in tree.nodes()
        if n.alive
    ]
    out.sort(key=MinedPattern.sort_key)
    return out


def top_k(patterns: Iterable[MinedPattern], k: int) -> list[MinedPattern]:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    closed = sorted((p for p in patterns if p.closed), key=MinedPattern.sort_key)
    return closed[:k]
