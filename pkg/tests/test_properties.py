"""Property-based tests pitting the closed forms against slow definitions."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from almost_squares.core import (
    RatioValue,
    _icbrt,
    count_le,
    count_triangular_le,
    flock_members,
    floor_almost_square,
    is_almost_square,
    isqrt,
    nth,
    seq_a,
    seq_b,
    tri_decompose,
    triangular,
)
from almost_squares.oracle import brute_is_member, brute_semiperimeter


@given(st.integers(min_value=0, max_value=10**80))
def test_isqrt_brackets(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) * (r + 1)


@given(st.integers(min_value=0, max_value=10**60))
def test_icbrt_brackets(n):
    r = _icbrt(n)
    assert r**3 <= n < (r + 1) ** 3


@given(st.integers(min_value=0, max_value=100_000))
def test_triangular_count_closed_form(x):
    i = 1
    count = 0
    while triangular(i) <= x:
        count += 1
        i += 1
    assert count_triangular_le(x) == count


@given(st.integers(min_value=2, max_value=10**9))
def test_flock_extent_identities(m):
    a, b = seq_a(m), seq_b(m)
    assert a <= b <= a + 1
    assert b * b * (2 * m - 1) <= m * m < (b + 1) * (b + 1) * (2 * m - 1)
    assert a + b == isqrt(2 * m) - 1


@given(
    st.tuples(
        st.integers(min_value=1, max_value=10**12),
        st.integers(min_value=1, max_value=10**12),
    ),
    st.tuples(
        st.integers(min_value=1, max_value=10**12),
        st.integers(min_value=1, max_value=10**12),
    ),
)
def test_ratio_value_agrees_with_fraction(p, q):
    lhs, rhs = RatioValue(*p), RatioValue(*q)
    lf, rf = Fraction(*p), Fraction(*q)
    assert (lhs == rhs) == (lf == rf)
    assert (lhs < rhs) == (lf < rf)
    assert (lhs <= rhs) == (lf <= rf)


@settings(max_examples=300)
@given(st.integers(min_value=1, max_value=5000))
def test_membership_matches_oracle(record_set_small, n):
    assert (is_almost_square(n) is not None) == brute_is_member(n, record_set_small)


@settings(max_examples=200)
@given(st.integers(min_value=1, max_value=5000))
def test_count_matches_oracle(record_set_small, n):
    expected = sum(1 for v in record_set_small.members if v <= n)
    assert count_le(n) == expected


@given(st.integers(min_value=1, max_value=10**6))
def test_rank_round_trip(j):
    rec = nth(j)
    assert count_le(rec.value) == j
    assert is_almost_square(rec.value) == rec.rect


@given(st.integers(min_value=1, max_value=10**9))
def test_floor_is_tight(n):
    rec = floor_almost_square(n)
    assert rec.value <= n
    assert count_le(n) == count_le(rec.value)
    assert is_almost_square(rec.value) == rec.rect


@given(st.integers(min_value=1, max_value=10**6))
def test_tri_decompose_round_trip(j):
    value = nth(j).value
    k, h = tri_decompose(value)
    assert value == k * (k + h)
    assert 0 <= h <= count_triangular_le(k)


@settings(max_examples=100)
@given(st.integers(min_value=4, max_value=400))
def test_flock_members_agree_with_brute_semiperimeter(k):
    members = flock_members(k)
    expected = 1 + (seq_a((k + 1) // 2) if k % 2 else seq_b(k // 2))
    assert len(members) == expected
    for rec in members:
        assert brute_semiperimeter(rec.value) == k


@given(st.integers(min_value=1, max_value=10**18))
def test_membership_certificate(n):
    rect = is_almost_square(n)
    if rect is not None:
        assert rect.area == n
        assert rect.width <= rect.length
        # certificate optimality spot check: the square-nearest divisor
        # can be no closer than the one reported
        assert rect.width <= isqrt(n) <= rect.length
