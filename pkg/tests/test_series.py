import pytest
from hypothesis import given
from hypothesis import strategies as st

from serrecalc.errors import TruncationError
from serrecalc.series import (
    BigradedSeries,
    CharOffset,
    IntPoly,
    RationalSeries,
    bigraded_from_json,
    bigraded_shift_twist,
    bigraded_sum,
    bigraded_to_json,
    expand,
    rational_from_json,
    rational_to_json,
)

polys = st.lists(st.integers(min_value=-9, max_value=9), max_size=6).map(
    lambda cs: IntPoly(tuple(cs))
)


def long_division(num: list[int], pole: int, n: int) -> list[int]:
    """Independent oracle: repeated synthetic division by the denominator."""
    # coefficients of (1-t)^pole
    den = [1]
    for _ in range(pole):
        den = [a - (den[i - 1] if i else 0) for i, a in enumerate(den)] + [-den[-1]]
    out = []
    rem = list(num) + [0] * (n + 1)
    for d in range(n + 1):
        c = rem[d] // den[0]
        out.append(c)
        for i, dc in enumerate(den):
            if d + i < len(rem):
                rem[d + i] -= c * dc
    return out


def test_trailing_zeros_normalized():
    assert IntPoly((1, 0, 0)).coeffs == (1,)
    assert IntPoly((0, 0)).coeffs == ()
    assert IntPoly(()).is_zero()


def test_expand_geometric():
    assert expand(RationalSeries(IntPoly.of(1), 1), 3) == [1, 1, 1, 1]


def test_expand_three_plus_t():
    assert expand(RationalSeries(IntPoly.of(3, 1), 1), 3) == [3, 4, 4, 4]


def test_expand_split_f2_closed_form():
    num = IntPoly.of(3, 1) ** 2 + IntPoly.of(1, -1) ** 2
    assert num.coeffs == (10, 4, 2)
    got = expand(RationalSeries(num, 2), 2)
    assert got == long_division([10, 4, 2], 2, 2) == [10, 24, 40]


@given(polys, polys, st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=8))
def test_expand_linear(a, b, pole, n):
    lhs = expand(RationalSeries(a + b, pole), n)
    ra = expand(RationalSeries(a, pole), n)
    rb = expand(RationalSeries(b, pole), n)
    assert lhs == [x + y for x, y in zip(ra, rb)]


@given(polys, st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=8))
def test_expand_matches_long_division(p, pole, n):
    got = expand(RationalSeries(p, pole), n)
    assert got == long_division(list(p.coeffs), pole, n)


def test_rational_equality_cross_multiplied():
    # (1+t)/(1-t) == (1-t^2)/(1-t)^2
    a = RationalSeries(IntPoly.of(1, 1), 1)
    b = RationalSeries(IntPoly.of(1, 0, -1), 2)
    assert a == b
    assert a != RationalSeries(IntPoly.of(1, 1), 2)


def test_rational_reduced():
    r = RationalSeries(IntPoly.of(1, 0, -1), 2).reduced()
    assert r.num.coeffs == (1, 1) and r.pole == 1


def test_rational_shift_down():
    r = RationalSeries(IntPoly.of(0, 1), 2).shift_down(1)
    assert r.num.coeffs == (1,) and r.pole == 2
    with pytest.raises(ValueError):
        RationalSeries(IntPoly.of(1, 1), 1).shift_down(1)


def test_binomial_identities():
    for n in range(13):
        plus = IntPoly.of(2, 1) ** n
        minus = IntPoly.of(2, -1) ** n
        odd = IntPoly.zero()
        even = IntPoly.zero()
        from math import comb

        for i in range(n + 1):
            term = IntPoly.t_power(i, comb(n, i) * 2 ** (n - i))
            odd, even = (odd + term, even) if i % 2 else (odd, even + term)
        assert plus - minus == odd.scale(2)
        assert plus + minus == even.scale(2)


def off(*xs):
    return CharOffset(tuple(xs))


def test_shift_twist_zero_series():
    z = BigradedSeries(4)
    assert bigraded_shift_twist(z, 2, off(1)).is_zero()


def test_shift_twist_single_entry():
    b = BigradedSeries(4, {(1, off(0)): 1})
    out = bigraded_shift_twist(b, 1, off(0))
    assert out.mult(2, off(0)) == 1 and len(out.entries) == 1


def test_shift_twist_out_of_range():
    b = BigradedSeries(2, {(2, off(0)): 1})
    with pytest.raises(TruncationError):
        bigraded_shift_twist(b, 1, off(0))
    with pytest.raises(TruncationError):
        bigraded_shift_twist(b, -3, off(0))


def test_bigraded_sum_identity_and_multiplicity():
    b = BigradedSeries(3, {(0, off(1, -1)): 2, (2, off(0, 0)): 1})
    z = BigradedSeries(3)
    assert bigraded_sum([b, z]) == b
    doubled = bigraded_sum([b, b])
    assert doubled.mult(0, off(1, -1)) == 4


def test_bigraded_sum_mismatched_truncations():
    with pytest.raises(TruncationError):
        bigraded_sum([BigradedSeries(2), BigradedSeries(3)])


def test_json_round_trips():
    r = RationalSeries(IntPoly.of(10, 4, 2), 2)
    assert rational_from_json(rational_to_json(r)) == r
    b = BigradedSeries(3, {(1, off(2, -1)): 5})
    assert bigraded_from_json(bigraded_to_json(b)) == b


def test_char_offset_arithmetic():
    a, b = off(1, -2), off(0, 3)
    assert (a + b).exps == (1, 1)
    assert (a - b).exps == (1, -5)
    assert (-a).exps == (-1, 2)
    assert a.l1() == 3
