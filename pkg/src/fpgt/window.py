"""Count-based sliding window of per-item ternary vectors."""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

from .ternary import TernaryVector, from_memberships


class StreamOrderError(ValueError):
    """A transaction arrived with a non-consecutive sequence number."""


class UnknownItem(KeyError):
    pass


@dataclass(frozen=True)
class Transaction:
    seq: int
    items: frozenset[str]

    def __init__(self, seq: int, items: Iterable[str]):
        object.__setattr__(self, "seq", seq)
        object.__setattr__(self, "items", frozenset(items))

    @property
    def ordered_items(self) -> list[str]:
        return sorted(self.items)


@dataclass(frozen=True)
class WindowConfig:
    capacity: int
    slide: int = 1

    def __post_init__(self):
        if self.capacity < 1:
            raise ValueError(f"window capacity must be >= 1, got {self.capacity}")
        if not 1 <= self.slide <= self.capacity:
            raise ValueError(
                f"slide must be in [1, {self.capacity}], got {self.slide}"
            )


@dataclass(frozen=True)
class WindowSnapshot:
    occupied: int
    window_end_seq: int
    capacity: int
    item_order: tuple[str, ...]
    vectors: Mapping[str, TernaryVector] = field(compare=False)

    def __eq__(self, other):
        if not isinstance(other, WindowSnapshot):
            return NotImplemented
        return (
            self.occupied == other.occupied
            and self.window_end_seq == other.window_end_seq
            and self.capacity == other.capacity
            and self.item_order == other.item_order
            and dict(self.vectors) == dict(other.vectors)
        )

    def __hash__(self):
        return hash((self.occupied, self.window_end_seq, self.item_order))

    def item_vector(self, item: str) -> TernaryVector:
        try:
            return self.vectors[item]
        except KeyError:
            raise UnknownItem(item) from None

    def slot_items(self) -> list[frozenset[str]]:
        """Transactions of the occupied slots, oldest first."""
        slots: list[set[str]] = [set() for _ in range(self.occupied)]
        for item, vec in self.vectors.items():
            bits = vec.presence
            for i in range(self.occupied):
                if (bits >> i) & 1:
                    slots[i].add(item)
        return [frozenset(s) for s in slots]


def item_vector(snap: WindowSnapshot, item: str) -> TernaryVector:
    return snap.item_vector(item)


class SlidingWindow:
    """The ``capacity`` most recent transactions, held as item bitsets.

    Bit ``i`` of an item's presence int is slot ``i`` (oldest first). Items
    whose presence drops to zero after eviction are forgotten, so state is
    bounded by (distinct items in window) x capacity bits.
    """

    def __init__(self, config: WindowConfig):
        self.config = config
        self.occupied = 0
        self.last_seq = 0
        self.arrivals_since_mine = 0
        self._mined_once = False
        self._presence: dict[str, int] = {}

    @property
    def capacity(self) -> int:
        return self.config.capacity

    @property
    def items(self) -> list[str]:
        return sorted(self._presence)

    def push(self, txn: Transaction) -> bool:
        """Add a transaction; return True when a mining run is due."""
        if self.last_seq and txn.seq != self.last_seq + 1:
            raise StreamOrderError(
                f"expected seq {self.last_seq + 1}, got {txn.seq}"
            )
        if not self.last_seq and txn.seq < 1:
            raise StreamOrderError(f"sequence numbers start at 1, got {txn.seq}")

        presence = self._presence
        if self.occupied == self.capacity:
            for item in list(presence):
                bits = presence[item] >> 1
                if bits:
                    presence[item] = bits
                else:
                    del presence[item]
            slot = self.capacity - 1
        else:
            slot = self.occupied
            self.occupied += 1

        bit = 1 << slot
        for item in txn.items:
            # unseen items default to 0: earlier occupied slots were observed absent
            presence[item] = presence.get(item, 0) | bit
        self.last_seq = txn.seq
        self.arrivals_since_mine += 1

        if not self._mined_once:
            due = self.occupied == self.capacity
        else:
            due = self.arrivals_since_mine >= self.config.slide
        if due:
            self._mark_mined()
        return due

    def flush(self) -> bool:
        """End of stream: True if un-mined arrivals remain in a non-empty window."""
        if self.occupied and self.arrivals_since_mine:
            self._mark_mined()
            return True
        return False

    def _mark_mined(self) -> None:
        self._mined_once = True
        self.arrivals_since_mine = 0

    def snapshot(self) -> WindowSnapshot:
        known = (1 << self.occupied) - 1
        order = tuple(sorted(self._presence))
        vectors = {
            item: TernaryVector(self.capacity, self._presence[item], known)
            for item in order
        }
        return WindowSnapshot(
            occupied=self.occupied,
            window_end_seq=self.last_seq,
            capacity=self.capacity,
            item_order=order,
            vectors=MappingProxyType(vectors),
        )

    def state_bits(self) -> int:
        """Bits of window state held for item vectors (excluding counters)."""
        return len(self._presence) * self.capacity


def build_snapshot(
    transactions: Iterable[Iterable[str]], capacity: int, window_end_seq: int = 0
) -> WindowSnapshot:
    """Build a snapshot from scratch over the given slots (oldest first)."""
    txns = [frozenset(t) for t in transactions]
    if len(txns) > capacity:
        raise ValueError("more transactions than window capacity")
    occupied = len(txns)
    order = tuple(sorted(set().union(*txns))) if txns else ()
    vectors = {
        item: from_memberships([item in t for t in txns], occupied, capacity)
        for item in order
    }
    return WindowSnapshot(
        occupied=occupied,
        window_end_seq=window_end_seq,
        capacity=capacity,
        item_order=order,
        vectors=MappingProxyType(vectors),
    )
