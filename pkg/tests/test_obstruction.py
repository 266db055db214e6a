"""Lambda-class ring reduction, obstruction Euler classes, degree-zero
descendent invariants."""

from fractions import Fraction

import pytest

from hodgeint.errors import DomainError, UnderdeterminedError
from hodgeint.hodge import lambda_cube, lambda_g, lambda_g_gm1
from hodgeint.mumford import (
    LambdaRingElem,
    degree0_gw,
    euler_class,
    euler_class_genus1,
    mumford_relations,
    reduce_lambda_monomial,
)

F = Fraction


class TestMumfordRelations:
    @pytest.mark.parametrize("g", range(1, 7))
    def test_relations_reduce_to_zero(self, g):
        import sympy as sp

        syms = [sp.Symbol(f"lam{i}") for i in range(1, g + 1)]
        for rel in mumford_relations(g):
            poly = sp.Poly(sp.expand(rel), *syms)
            raw = {}
            for powers, coeff in poly.terms():
                key = []
                for idx, e in enumerate(powers):
                    key.extend([idx + 1] * e)
                raw[tuple(sorted(key, reverse=True))] = {(): F(sp.Rational(coeff))}
            assert LambdaRingElem.build(g, 0, raw).is_zero()

    @pytest.mark.parametrize("g", range(2, 7))
    def test_top_square_vanishes(self, g):
        assert reduce_lambda_monomial(g, (g, g)) == ()

    @pytest.mark.parametrize("g", range(2, 7))
    def test_subtop_square_rewrites(self, g):
        got = reduce_lambda_monomial(g, (g - 1, g - 1))
        want_key = (g, g - 2) if g > 2 else (g,)
        assert got == ((F(2), want_key),)

    @pytest.mark.parametrize("g", range(3, 6))
    def test_subtop_cube_rewrites(self, g):
        # lambda_{g-1}^3 = 2 lambda_g lambda_{g-1} lambda_{g-2}
        got = reduce_lambda_monomial(g, (g - 1, g - 1, g - 1))
        assert got == ((F(2), (g, g - 1, g - 2)),)

    def test_out_of_range_index_kills_product(self):
        assert reduce_lambda_monomial(2, (3,)) == ()
        assert reduce_lambda_monomial(2, (0,)) == ()


class TestEulerClasses:
    @pytest.mark.parametrize("g", [2, 3, 4, 5])
    def test_dim_one(self, g):
        sgn = F((-1) ** g)
        want = LambdaRingElem.build(
            g, 1, {(g,): {(): sgn}, (g - 1,): {(1,): -sgn}}
        )
        assert euler_class(1, g) == want

    @pytest.mark.parametrize("g", [2, 3, 4, 5])
    def test_dim_two(self, g):
        gm2 = (g, g - 2) if g > 2 else (g,)
        want = LambdaRingElem.build(
            g, 2, {(g, g - 1): {(1,): F(-1)}, gm2: {(1, 1): F(1)}}
        )
        got = euler_class(2, g)
        assert got == want
        # c_2 never appears: only the first Chern class of the surface enters
        assert all((2,) not in dict(cp) for _, cp in got.terms)

    @pytest.mark.parametrize("g", [2, 3, 4])
    def test_dim_three(self, g):
        sgn = F((-1) ** g)
        want = LambdaRingElem.build(
            g,
            3,
            {(g - 1, g - 1, g - 1): {(3,): sgn / 2, (1, 2): -sgn / 2}},
        )
        assert euler_class(3, g) == want

    def test_genus_one(self):
        for r in (1, 2, 3):
            got = euler_class_genus1(r)
            want = LambdaRingElem.build(
                1,
                r,
                {(): {(r,): F(1)}, (1,): {(() if r == 1 else (r - 1,)): F(-1)}},
            )
            assert got == want

    def test_high_dim_rejected(self):
        with pytest.raises(DomainError):
            euler_class(4, 2)


class TestDegreeZeroGW:
    def test_curve_target_spot_values(self):
        assert degree0_gw(1, 2, [(1, 2)]) == F(7, 5760)
        assert degree0_gw(1, 2, [(0, 3)]) == F(-1, 240)

    def test_curve_target_genus_one(self):
        # <tau_0(w)>_{1,0} = -int lambda_1 over the 1-pointed genus-1 space
        assert degree0_gw(1, 1, [(1, 0)]) == F(-1, 24)

    def test_derivation_chain_dim_one(self):
        # the spot values unfold through the Euler class (-1)^g(l_g - c1 l_{g-1})
        # with int c_1 = 2 on the dimension-1 target: the degree-1 insertion
        # pairs with the l_g term, the degree-0 one with the c_1 l_{g-1} term
        from hodgeint.hodge import b_constant, lambda_gm1

        assert degree0_gw(1, 2, [(1, 2)]) == lambda_g(2, (2,)) == b_constant(2)
        assert degree0_gw(1, 2, [(0, 3)]) == -2 * lambda_gm1(2, (3,))

    def test_threefold_dilaton_value(self):
        # <tau_1(1)>_{2,0} on the dimension-3 target:
        # (1/2)(int c_3 - int c_2 c_1)(2g - 2) lambda-cube = -1/144
        assert degree0_gw(3, 2, [(0, 1)]) == F(-1, 144)
        assert degree0_gw(3, 2, [(0, 1)]) == F(1, 2) * (4 - 24) * 2 * lambda_cube(2)

    def test_threefold_higher_genus(self):
        assert degree0_gw(3, 4, [(0, 1)]) == F(1, 2) * (4 - 24) * 6 * lambda_cube(4)

    def test_dimension_mismatch_vanishes(self):
        assert degree0_gw(3, 2, [(3, 0)]) == 0
        assert degree0_gw(2, 2, [(0, 0)]) == 0

    def test_underdetermined_raises(self):
        with pytest.raises(UnderdeterminedError):
            # hits <tau_3 | l_3 l_1> on the surface target, outside the
            # solvable families
            degree0_gw(2, 3, [(0, 3)])

    def test_bad_insertions(self):
        with pytest.raises(DomainError):
            degree0_gw(1, 2, [(2, 0)])  # class power above the dimension
        with pytest.raises(DomainError):
            degree0_gw(1, 0, [(0, 0)])
