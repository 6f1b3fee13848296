"""Brute-force reference miner.

Supports are counted by checking every itemset against every slot's
transaction directly, without going through ternary vectors, so it can serve
as an independent check on the tree miner.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .window import WindowSnapshot

Itemset = tuple[str, ...]

DEFAULT_MAX_ITEMS = 20


class IntractableEnumeration(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    frequent: dict[Itemset, int]
    closed: frozenset[Itemset]


def slot_transactions(snap: WindowSnapshot) -> list[frozenset[str]]:
    """Recover each occupied slot's item set by reading single vector positions."""
    slots = []
    for i in range(snap.occupied):
        slots.append(
            frozenset(
                item
                for item in snap.item_order
                if str(snap.item_vector(item)[i]) == "1"
            )
        )
    return slots


def oracle_mine_transactions(
    transactions: list[frozenset[str]],
    threshold: int,
    max_items: int = DEFAULT_MAX_ITEMS,
) -> OracleResult:
    items = sorted(set().union(*transactions)) if transactions else []
    if len(items) > max_items:
        raise IntractableEnumeration(
            f"{len(items)} items exceeds the enumeration bound of {max_items}"
        )
    support: dict[Itemset, int] = {}
    for size in range(1, len(items) + 1):
        for itemset in combinations(items, size):
            wanted = set(itemset)
            support[itemset] = sum(1 for t in transactions if wanted <= t)

    frequent = {s: c for s, c in support.items() if c >= threshold}
    closed = set()
    for itemset, count in frequent.items():
        members = set(itemset)
        extended = (
            tuple(sorted(members | {b})) for b in items if b not in members
        )
        if all(support[e] != count for e in extended):
            closed.add(itemset)
    return OracleResult(frequent, frozenset(closed))


def oracle_mine(
    snap: WindowSnapshot, threshold: int, max_items: int = DEFAULT_MAX_ITEMS
) -> OracleResult:
    if len(snap.item_order) > max_items:
        raise IntractableEnumeration(
            f"{len(snap.item_order)} items exceeds the enumeration bound of {max_items}"
        )
    return oracle_mine_transactions(slot_transactions(snap), threshold, max_items)
