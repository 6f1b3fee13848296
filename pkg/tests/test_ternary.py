from itertools import product

import pytest
from hypothesis import given, strategies as st

from fpgt.ternary import (
    ONE,
    UNKNOWN,
    ZERO,
    IncompatibleVectors,
    TernaryBit,
    TernaryVector,
    combine,
    combine_bit,
    from_memberships,
    support,
)

V = TernaryVector.from_string


def test_three_values():
    assert len(TernaryBit) == 3


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (ONE, ONE, ONE),
        (ZERO, ONE, ZERO),
        (ZERO, ZERO, UNKNOWN),
        (UNKNOWN, ONE, UNKNOWN),
    ],
)
def test_combine_bit_examples(a, b, expected):
    assert combine_bit(a, b) is expected


def test_combine_known_vectors():
    assert combine(V("10100"), V("11111")) == V("10100")


def test_combine_zero_zero_is_unknown():
    out = combine(V("10100"), V("01001"))
    assert list(out) == [ZERO, ZERO, ZERO, UNKNOWN, ZERO]
    assert support(out) == 0


def test_combine_with_all_unknown():
    assert combine(V("10110"), V("UUUUU")) == V("UUUUU")


def test_combine_length_mismatch():
    with pytest.raises(IncompatibleVectors):
        combine(V("101"), V("1010"))


def test_support():
    assert support(V("11111")) == 5
    assert support(V("10100")) == 2
    assert support(V("UUU")) == 0


def test_from_memberships():
    assert from_memberships([1, 0, 1, 0, 0], 5) == V("10100")
    assert len(from_memberships([], 0)) == 0
    partial = from_memberships([1, 0, 0], 3, length=5)
    assert list(partial) == [ONE, ZERO, ZERO, UNKNOWN, UNKNOWN]
    assert support(partial) == 1


def test_unknown_positions_normalized():
    v = TernaryVector(4, presence=0b1111, known=0b0011)
    assert v.presence == 0b0011
    assert v == V("11UU")


def test_immutable():
    v = V("10")
    with pytest.raises(AttributeError):
        v.presence = 0


def test_string_round_trip():
    assert str(V("10U1")) == "10U1"
    assert str(V("Z1")) == "U1"
    with pytest.raises(ValueError):
        V("102")


ternary_strings = st.integers(0, 24).flatmap(
    lambda n: st.tuples(
        st.text(alphabet="01U", min_size=n, max_size=n),
        st.text(alphabet="01U", min_size=n, max_size=n),
    )
)


@given(ternary_strings)
def test_combine_commutative(pair):
    x, y = V(pair[0]), V(pair[1])
    assert combine(x, y) == combine(y, x)


@given(ternary_strings)
def test_combine_pointwise_and_support_scan(pair):
    x, y = V(pair[0]), V(pair[1])
    out = combine(x, y)
    assert list(out) == [combine_bit(a, b) for a, b in zip(x, y)]
    both = sum(1 for a, b in zip(pair[0], pair[1]) if a == b == "1")
    assert support(out) == both
    assert support(out) <= min(support(x), support(y))


@given(st.text(alphabet="01", max_size=30))
def test_idempotent_on_known(bits):
    x = V(bits)
    assert support(combine(x, x)) == support(x)


def test_all_nine_pairs_symmetric():
    for a, b in product(TernaryBit, repeat=2):
        assert combine_bit(a, b) is combine_bit(b, a)
