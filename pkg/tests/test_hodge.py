"""Hodge-class integral families: closed forms, solvers, golden constants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgeint.errors import DomainError
from hodgeint.hodge import (
    b_constant,
    c_constant,
    gg_const,
    hodge_table,
    kappa_lambda_integral,
    lambda_cube,
    lambda_g,
    lambda_g_gm1,
    lambda_g_gm1_solver,
    lambda_g_gm2_or_none,
    lambda_g_solver,
    lambda_gm1,
)

F = Fraction

GOLDEN = {
    1: (F(1, 24), F(1, 24)),
    2: (F(7, 5760), F(1, 480)),
    3: (F(31, 967680), F(41, 580608)),
    4: (F(127, 154828800), F(13, 6220800)),
    5: (F(73, 3503554560), F(21481, 367873228800)),
}


def _dim_multisets(n, total):
    out = []

    def rec(remaining, slots, cap, acc):
        if slots == 0:
            if remaining == 0:
                out.append(tuple(acc))
            return
        for v in range(min(cap, remaining), -1, -1):
            acc.append(v)
            rec(remaining - v, slots - 1, v, acc)
            acc.pop()

    if total >= 0:
        rec(total, n, total, [])
    return out


class TestGoldenConstants:
    def test_table(self):
        rows = hodge_table(5)
        assert [(g, b, c) for g, b, c in rows] == [
            (g, GOLDEN[g][0], GOLDEN[g][1]) for g in range(1, 6)
        ]

    def test_b_and_c_constants(self):
        for g, (b, c) in GOLDEN.items():
            assert b_constant(g) == b
            assert c_constant(g) == c

    def test_gg_const(self):
        # |B_2g| / (2^{2g-1} (2g-1)!! 2g): g = 1 gives (1/6)/(2*1*2) = 1/24
        assert gg_const(1) == F(1, 24)
        assert gg_const(2) == F(1, 30) / (8 * 3 * 4)

    def test_lambda_cube(self):
        assert lambda_cube(2) == F(1, 2880)
        assert lambda_cube(3) == F(1, 725760)


class TestClosedVsRecursion:
    @pytest.mark.parametrize("g", [0, 1, 2, 3])
    def test_lambda_g(self, g):
        for n in range(3 if g == 0 else 1, 5):
            for ks in _dim_multisets(n, 2 * g - 3 + n):
                assert lambda_g(g, ks) == lambda_g_solver(g, ks)

    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_lambda_g_gm1(self, g):
        for n in range(1, 5):
            for ks in _dim_multisets(n, g - 2 + n):
                assert lambda_g_gm1(g, ks) == lambda_g_gm1_solver(g, ks)

    def test_lambda_g_genus_zero_is_psi(self):
        from hodgeint.psi import psi_integral

        assert lambda_g(0, (0, 0, 0)) == psi_integral(0, (0, 0, 0))
        assert lambda_g(0, (1, 0, 0, 0)) == psi_integral(0, (1, 0, 0, 0))


class TestLambdaGm1:
    def test_one_point_is_c_constant(self):
        for g in range(1, 5):
            assert lambda_gm1(g, (2 * g - 1,)) == c_constant(g)

    def test_genus_one_reduces_to_psi(self):
        from hodgeint.psi import psi_integral

        # lambda_0 = 1, so the genus-1 family is the pure psi integral
        assert lambda_gm1(1, (1, 1)) == psi_integral(1, (1, 1))
        assert lambda_gm1(1, (2, 1, 0)) == psi_integral(1, (2, 1, 0))

    def test_string_and_dilaton(self):
        for g in (2, 3):
            base = (2 * g - 1,)
            v = lambda_gm1(g, base)
            assert lambda_gm1(g, base + (1,)) == (2 * g - 1) * v
            assert lambda_gm1(g, (2 * g, 0)) == v  # string lowers 2g -> 2g-1

    def test_dimension_mismatch_is_zero(self):
        assert lambda_gm1(2, (1, 1)) == 0
        assert lambda_gm1(3, (2,)) == 0


class TestGm2Provider:
    def test_genus_one_vanishes(self):
        # lambda_{-1} = 0
        assert lambda_g_gm2_or_none(1, (0,)) == 0

    def test_genus_two_is_lambda_g(self):
        # lambda_0 = 1, so the pair collapses to lambda_2 alone
        assert lambda_g_gm2_or_none(2, (1,)) == lambda_g(2, (1,))

    def test_genus_three_unknown(self):
        assert lambda_g_gm2_or_none(3, (3, 1)) is None


class TestKappa:
    def test_single_index_is_one_point_descendent(self):
        # <kappa_a l_g l_{g-1}>_g = <tau_{a+1} l_g l_{g-1}>_{g,1}
        assert kappa_lambda_integral(3, (1,)) == lambda_g_gm1(3, (2,))
        assert kappa_lambda_integral(4, (2,)) == lambda_g_gm1(4, (3,))

    def test_two_indices_partition_formula(self):
        # <kappa_1^2 l l> = <tau_2 tau_2 l l> - <tau_3 l l>
        want = lambda_g_gm1(4, (2, 2)) - lambda_g_gm1(4, (3,))
        assert kappa_lambda_integral(4, (1, 1)) == want

    def test_dimension_mismatch_is_zero(self):
        assert kappa_lambda_integral(3, (2,)) == 0
        assert kappa_lambda_integral(5, (1, 1)) == 0

    def test_bad_indices(self):
        with pytest.raises(DomainError):
            kappa_lambda_integral(3, (0, 1))


class TestDomain:
    def test_bad_genus(self):
        with pytest.raises(DomainError):
            lambda_g_gm1(0, (0,))
        with pytest.raises(DomainError):
            lambda_gm1(0, (0,))
        with pytest.raises(DomainError):
            lambda_cube(1)

    def test_negative_exponent(self):
        with pytest.raises(DomainError):
            lambda_g(2, (-1, 2))


@st.composite
def gg_inputs(draw):
    g = draw(st.integers(1, 3))
    n = draw(st.integers(1, 4))
    ks = draw(st.lists(st.integers(0, 4), min_size=n, max_size=n))
    return g, tuple(ks)


class TestProperties:
    @given(gg_inputs())
    @settings(max_examples=60, deadline=None)
    def test_lambda_g_gm1_permutation_invariance(self, gk):
        g, ks = gk
        assert lambda_g_gm1(g, ks) == lambda_g_gm1(g, tuple(sorted(ks)))

    @given(gg_inputs())
    @settings(max_examples=60, deadline=None)
    def test_lambda_g_dilaton(self, gk):
        g, ks = gk
        lhs = lambda_g(g, ks + (1,))
        assert lhs == (2 * g - 2 + len(ks)) * lambda_g(g, ks)
