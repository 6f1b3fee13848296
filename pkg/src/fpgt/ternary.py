"""Ternary presence vectors over window slots.

Each position holds ONE (item present in that slot's transaction), ZERO
(slot observed, item absent) or UNKNOWN (no information). A vector is stored
as two parallel bitsets packed into ints: ``presence`` and ``known``. Bit ``i``
is window position ``i``, oldest transaction first.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence


class TernaryBit(enum.Enum):
    ZERO = "0"
    ONE = "1"
    UNKNOWN = "U"

    def __str__(self) -> str:
        return self.value


ONE = TernaryBit.ONE
ZERO = TernaryBit.ZERO
UNKNOWN = TernaryBit.UNKNOWN


class IncompatibleVectors(ValueError):
    """Raised when combining vectors taken from windows of different sizes."""


def combine_bit(a: TernaryBit, b: TernaryBit) -> TernaryBit:
    if a is UNKNOWN or b is UNKNOWN:
        return UNKNOWN
    if a is ONE and b is ONE:
        return ONE
    if a is ZERO and b is ZERO:
        # (0, 0) yields Z in the combine table; kept distinct from ZERO
        return UNKNOWN
    return ZERO


class TernaryVector:
    """Immutable fixed-length ternary vector."""

    __slots__ = ("length", "presence", "known")

    def __init__(self, length: int, presence: int = 0, known: int = 0):
        if length < 0:
            raise ValueError("length must be non-negative")
        mask = (1 << length) - 1
        known &= mask
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "known", known)
        object.__setattr__(self, "presence", presence & known)

    def __setattr__(self, name, value):
        raise AttributeError("TernaryVector is immutable")

    @classmethod
    def from_bits(cls, bits: Iterable[TernaryBit]) -> TernaryVector:
        presence = known = 0
        n = 0
        for i, bit in enumerate(bits):
            n = i + 1
            if bit is not UNKNOWN:
                known |= 1 << i
                if bit is ONE:
                    presence |= 1 << i
        return cls(n, presence, known)

    @classmethod
    def from_string(cls, text: str) -> TernaryVector:
        """Parse ``"10U00"``-style notation (``Z`` is accepted as ``U``)."""
        lookup = {"0": ZERO, "1": ONE, "U": UNKNOWN, "Z": UNKNOWN}
        try:
            return cls.from_bits(lookup[ch] for ch in text.upper())
        except KeyError as exc:
            raise ValueError(f"invalid ternary digit {exc.args[0]!r}") from None

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> TernaryBit:
        if i < 0:
            i += self.length
        if not 0 <= i < self.length:
            raise IndexError(i)
        if not (self.known >> i) & 1:
            return UNKNOWN
        return ONE if (self.presence >> i) & 1 else ZERO

    def __iter__(self):
        return (self[i] for i in range(self.length))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TernaryVector):
            return NotImplemented
        return (self.length, self.presence, self.known) == (
            other.length,
            other.presence,
            other.known,
        )

    def __hash__(self) -> int:
        return hash((self.length, self.presence, self.known))

    def __str__(self) -> str:
        return "".join(str(b) for b in self)

    def __repr__(self) -> str:
        return f"TernaryVector({str(self)!r})"

    @property
    def support(self) -> int:
        return self.presence.bit_count()

    @property
    def known_count(self) -> int:
        return self.known.bit_count()


def combine(x: TernaryVector, y: TernaryVector) -> TernaryVector:
    """Apply :func:`combine_bit` position-wise."""
    if x.length != y.length:
        raise IncompatibleVectors(
            f"cannot combine vectors of length {x.length} and {y.length}"
        )
    # known only where both are known and at least one is ONE; (0,0) -> UNKNOWN
    known = x.known & y.known & (x.presence | y.presence)
    return TernaryVector(x.length, x.presence & y.presence, known)


def support(x: TernaryVector) -> int:
    return x.support


def from_memberships(
    present: Sequence[bool], occupied: int, length: int | None = None
) -> TernaryVector:
    """Build a vector whose first ``occupied`` slots are known.

    ``length`` defaults to ``len(present)``; slots past ``occupied`` are UNKNOWN.
    """
    if length is None:
        length = len(present)
    if occupied > len(present) or occupied > length:
        raise ValueError("occupied exceeds the number of memberships given")
    presence = 0
    for i in range(occupied):
        if present[i]:
            presence |= 1 << i
    return TernaryVector(length, presence, (1 << occupied) - 1)
