from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sigwalk.sigcore import (
    check_signature,
    dimension,
    dominant,
    format_signature,
    interlaces,
    is_signature,
    parse_signature,
    shift,
    signatures_in_box,
    signatures_with_sum,
    weyl_act,
)

signatures = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.lists(st.integers(-6, 6), min_size=n, max_size=n)
).map(lambda parts: tuple(sorted(parts, reverse=True)))


def test_check_signature_rejects_increasing():
    with pytest.raises(ValueError):
        check_signature((0, 1))
    assert check_signature((3, 1, -2)) == (3, 1, -2)
    assert not is_signature((0, 1))


def test_dimension_examples():
    assert dimension((1, 0)) == 2
    assert dimension((1, 0, 0)) == 3
    assert dimension((2, 1)) == 2
    assert dimension((0,) * 5) == 1


def test_dimension_weyl_formula():
    # hook length style cross-check for a hand-computed case
    assert dimension((2, 1, 0)) == 8


@given(signatures, st.integers(-5, 5))
def test_dimension_shift_invariant(lam, c):
    assert dimension(shift(lam, c)) == dimension(lam)


def test_interlacing_examples():
    assert interlaces((1, 0), (2, 0))
    assert interlaces((1, 0), (1, 1))
    assert not interlaces((2, 0), (1, 0))
    assert not interlaces((0, 0), (2, 2))


@given(signatures)
def test_interlacing_reflexive_and_prepend(lam):
    assert interlaces(lam, lam)
    # growing the top row and pushing the rest down is a horizontal strip
    up = (lam[0] + 1,) + lam[:-1]
    assert interlaces(lam, up)


def test_weyl_act_cycle():
    # a 3-cycle permutes coordinates cyclically
    assert weyl_act((1, 2, 0), (1, 0, -1)) == (0, -1, 1)
    assert dominant((0, 2, -1)) == (2, 0, -1)


def test_parse_format_roundtrip():
    for s in ("2,1,0", "3,1,-2", "0"):
        assert format_signature(parse_signature(s)) == s
    with pytest.raises(ValueError):
        parse_signature("1,2")


@given(signatures)
def test_format_parse_identity(lam):
    assert parse_signature(format_signature(lam)) == lam


def test_signatures_in_box():
    box = list(signatures_in_box(2, -1, 1))
    assert len(box) == 6
    assert all(is_signature(s) for s in box)
    assert len(set(box)) == len(box)


def test_signatures_with_sum():
    out = list(signatures_with_sum(2, 2, [2, 2], [0, 0]))
    assert set(out) == {(2, 0), (1, 1)}
