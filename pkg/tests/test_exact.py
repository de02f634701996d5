"""Core arithmetic: combinatorial primitives and certified root enclosures."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridmeans.exact import (
    RootBound,
    binomial,
    factorial,
    integer_nth_root,
    nth_root_bounds,
    sum_powers,
)


def pascal_table(rows: int) -> list[list[int]]:
    """Independent binomial oracle: Pascal's triangle by the addition rule."""
    table = [[1]]
    for n in range(1, rows + 1):
        prev = table[-1]
        table.append(
            [1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1]
        )
    return table


@pytest.mark.parametrize(
    "n, k, expected",
    [(5, 0, 1), (5, 2, 10), (2, 5, 0), (0, 0, 1), (40, 20, 137846528820)],
)
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_matches_pascal_recurrence():
    table = pascal_table(60)
    for n in range(61):
        for k in range(n + 1):
            assert binomial(n, k) == table[n][k]
        assert binomial(n, n + 1) == 0
        assert binomial(n, n + 7) == 0


@given(n=st.integers(0, 300), k=st.integers(0, 300))
def test_binomial_symmetry(n, k):
    if k <= n:
        assert binomial(n, k) == binomial(n, n - k)


@given(n=st.integers(0, 200), k=st.integers(0, 200))
def test_binomial_factorial_identity(n, k):
    if k <= n:
        assert binomial(n, k) * factorial(k) * factorial(n - k) == factorial(n)


@pytest.mark.parametrize("n, expected", [(0, 1), (4, 24), (10, 3628800)])
def test_factorial_examples(n, expected):
    assert factorial(n) == expected


def test_factorial_matches_direct_product():
    product = 1
    for n in range(1, 120):
        product *= n
        assert factorial(n) == product


@pytest.mark.parametrize("m, k, expected", [(3, 0, 3), (3, 1, 6), (3, 2, 14)])
def test_sum_powers_examples(m, k, expected):
    assert sum_powers(m, k) == expected


@pytest.mark.parametrize("m", [1, 2, 7, 50, 123])
def test_sum_powers_matches_faulhaber_closed_forms(m):
    # independent closed-form route for the first few exponents
    assert sum_powers(m, 0) == m
    assert sum_powers(m, 1) == m * (m + 1) // 2
    assert sum_powers(m, 2) == m * (m + 1) * (2 * m + 1) // 6
    assert sum_powers(m, 3) == (m * (m + 1) // 2) ** 2


@given(m=st.integers(2, 300), k=st.integers(0, 8))
def test_sum_powers_recurrence(m, k):
    assert sum_powers(m, k) - sum_powers(m - 1, k) == m**k


def test_sum_powers_rejects_bad_arguments():
    with pytest.raises(ValueError):
        sum_powers(0, 2)
    with pytest.raises(ValueError):
        sum_powers(3, -1)


@given(x=st.integers(0, 10**40), d=st.integers(1, 40))
@settings(max_examples=300)
def test_integer_nth_root_floor_property(x, d):
    r = integer_nth_root(x, d)
    assert r >= 0
    assert r**d <= x < (r + 1) ** d


def test_integer_nth_root_rejects_bad_arguments():
    with pytest.raises(ValueError):
        integer_nth_root(-1, 2)
    with pytest.raises(ValueError):
        integer_nth_root(4, 0)


class TestNthRootBounds:
    def test_perfect_square_collapses(self):
        bound = nth_root_bounds(Fraction(4, 9), 2, 6)
        assert bound.lo == bound.hi == Fraction(2, 3)
        assert bound.is_exact

    def test_sqrt_two_frozen_enclosure(self):
        # integer square root of 2 * 10**6 scaled back: isqrt = 1414
        bound = nth_root_bounds(Fraction(2), 2, 3)
        assert bound.lo == Fraction(1414, 1000)
        assert bound.hi == Fraction(1415, 1000)
        assert bound.encloses(2)

    def test_unit_root_any_degree(self):
        bound = nth_root_bounds(Fraction(1), 7, 1)
        assert bound.lo == bound.hi == 1

    def test_zero(self):
        bound = nth_root_bounds(Fraction(0), 3, 2)
        assert bound.lo == bound.hi == 0

    def test_degree_one_is_identity(self):
        q = Fraction(22, 7)
        bound = nth_root_bounds(q, 1, 4)
        assert bound.lo == bound.hi == q

    def test_rejects_negative_value(self):
        with pytest.raises(ValueError):
            nth_root_bounds(Fraction(-1, 2), 2, 3)

    @given(
        num=st.integers(0, 10**9),
        den=st.integers(1, 10**9),
        d=st.integers(1, 6),
        digits=st.integers(1, 8),
    )
    @settings(max_examples=300, deadline=None)
    def test_enclosure_invariants(self, num, den, d, digits):
        q = Fraction(num, den)
        bound = nth_root_bounds(q, d, digits)
        assert bound.lo >= 0
        assert bound.lo <= bound.hi
        assert bound.encloses(q)
        assert bound.width <= Fraction(1, 10**digits)

    @given(
        a=st.integers(0, 50),
        b=st.integers(1, 50),
        d=st.integers(1, 5),
        digits=st.integers(1, 6),
    )
    def test_exact_powers_collapse(self, a, b, d, digits):
        root = Fraction(a, b)
        bound = nth_root_bounds(root**d, d, digits)
        assert bound.lo == bound.hi == root


class TestRootBoundValidation:
    def test_rejects_reversed_bounds(self):
        with pytest.raises(ValueError):
            RootBound(Fraction(2), Fraction(1), 2, 3)

    def test_rejects_negative_lower(self):
        with pytest.raises(ValueError):
            RootBound(Fraction(-1), Fraction(1), 2, 3)

    def test_rejects_wide_enclosure(self):
        with pytest.raises(ValueError):
            RootBound(Fraction(0), Fraction(1), 2, 3)

    def test_rejects_bad_degree_and_digits(self):
        with pytest.raises(ValueError):
            RootBound(Fraction(1), Fraction(1), 0, 3)
        with pytest.raises(ValueError):
            RootBound(Fraction(1), Fraction(1), 2, 0)

    def test_midpoint_and_width(self):
        bound = RootBound(Fraction(1, 4), Fraction(3, 10), 2, 1)
        assert bound.width == Fraction(1, 20)
        assert bound.midpoint == Fraction(11, 40)


@given(
    a_num=st.integers(-1000, 1000),
    a_den=st.integers(1, 1000),
    b_num=st.integers(-1000, 1000),
    b_den=st.integers(1, 1000),
)
def test_rational_arithmetic_stays_canonical(a_num, a_den, b_num, b_den):
    a = Fraction(a_num, a_den)
    b = Fraction(b_num, b_den)
    results = [a + b, a - b, a * b]
    if b != 0:
        results.append(a / b)
    for r in results:
        assert r.denominator > 0
        assert gcd(abs(r.numerator), r.denominator) == 1
        assert r == Fraction(r.numerator, r.denominator)


def test_zero_is_canonical():
    assert Fraction(0, 5).numerator == 0
    assert Fraction(0, 5).denominator == 1
