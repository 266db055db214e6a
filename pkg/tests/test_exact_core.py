"""Exact-arithmetic utilities: Bernoulli numbers, bracket symbols, 1-d series."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgeint.combinat import (
    bernoulli,
    bracket,
    double_factorial,
    harmonic,
    multinomial,
    stirling_s2,
)
from hodgeint.series1d import Series1D, b_closed_form, b_sequence

F = Fraction


class TestBernoulli:
    def test_small_values(self):
        want = {
            0: F(1),
            1: F(-1, 2),
            2: F(1, 6),
            4: F(-1, 30),
            6: F(1, 42),
            8: F(-1, 30),
            10: F(5, 66),
            12: F(-691, 2730),
        }
        for n, v in want.items():
            assert bernoulli(n) == v

    def test_odd_vanish(self):
        assert all(bernoulli(n) == 0 for n in range(3, 30, 2))

    def test_sum_identity(self):
        # sum_{j<n} C(n,j) B_j = 0 for n >= 2
        from math import comb

        for n in range(2, 20):
            assert sum(comb(n, j) * bernoulli(j) for j in range(n)) == 0


class TestBracket:
    def test_empty_product(self):
        # k = -1: the empty product, only the constant coefficient survives
        assert bracket(F(7, 3), -1, 0) == 1

    def test_linear(self):
        # k = 0: single factor t + x
        x = F(5, 2)
        assert bracket(x, 0, 0) == x
        assert bracket(x, 0, 1) == 1

    @given(
        p=st.integers(-8, 8),
        q=st.integers(1, 4),
        k=st.integers(0, 5),
    )
    @settings(max_examples=100, deadline=None)
    def test_matches_polynomial_product(self, p, q, k):
        """[x]^k_i is the t^i coefficient of prod_{j=0}^k (t + x + j)."""
        x = F(p, q)
        coeffs = [F(1)]  # polynomial in t, low degree first
        for j in range(k + 1):
            root = x + j
            new = [F(0)] * (len(coeffs) + 1)
            for d, c in enumerate(coeffs):
                new[d + 1] += c
                new[d] += root * c
            coeffs = new
        for i in range(k + 2):
            assert bracket(x, k, i) == coeffs[i]

    @given(p=st.integers(-8, 8), q=st.integers(1, 4), k=st.integers(0, 5))
    @settings(max_examples=60, deadline=None)
    def test_reflection(self, p, q, k):
        """[-x-k]^k_i = (-1)^{k+1+i} [x]^k_i."""
        x = F(p, q)
        for i in range(k + 2):
            assert bracket(-x - k, k, i) == (-1) ** (k + 1 + i) * bracket(x, k, i)


class TestCombinatorics:
    def test_double_factorial(self):
        assert double_factorial(-1) == 1
        assert double_factorial(0) == 1
        assert double_factorial(1) == 1
        assert double_factorial(5) == 15
        assert double_factorial(6) == 48
        assert double_factorial(7) == 105

    def test_multinomial(self):
        assert multinomial(0, ()) == 1
        assert multinomial(3, (1, 1, 1)) == 6
        assert multinomial(4, (2, 2)) == 6
        assert multinomial(5, (3, 1, 1)) == 20

    def test_harmonic(self):
        assert harmonic(1) == 1
        assert harmonic(4) == F(25, 12)

    def test_stirling_first_kind_column_two(self):
        # unsigned Stirling numbers of the first kind c(n, 2)
        assert stirling_s2(3) == 3
        assert stirling_s2(4) == 11
        assert stirling_s2(5) == 50
        assert stirling_s2(6) == 274


class TestSeries1D:
    def test_inverse_round_trip(self):
        s = Series1D([F(1), F(3), F(-2), F(7)], cap=3)
        prod = s * s.inverse()
        assert prod.coeffs[0] == 1
        assert all(c == 0 for c in prod.coeffs[1:4])

    def test_compose(self):
        # geometric series composed with 2t: 1/(1-2t)
        geo = Series1D([F(1)] * 5, cap=4)
        double = Series1D([F(0), F(2)], cap=4)
        got = geo.compose(double)
        assert got.coeffs == [F(1), F(2), F(4), F(8), F(16)]

    def test_b_sequence_matches_bernoulli_closed_form(self):
        seq = b_sequence(10)
        assert seq[0] == 1
        for g in range(11):
            assert seq[g] == b_closed_form(g)

    def test_b_closed_form_values(self):
        assert b_closed_form(1) == F(1, 24)
        assert b_closed_form(2) == F(7, 5760)
        assert b_closed_form(5) == F(73, 3503554560)
