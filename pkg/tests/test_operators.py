"""Constraint operators: construction, algebra, specializations, application."""

from fractions import Fraction

import pytest

from hodgeint.combinat import bracket
from hodgeint.errors import DomainError
from hodgeint.operators import (
    DifferentialOperator,
    apply_operator,
    commutator,
    curve_operator,
    general_operator,
    p1_data,
    p2_data,
    p3_data,
    point_data,
    point_operator,
    surface_operator,
)
from hodgeint.phase_space import Caps, TruncatedSeries

F = Fraction
H = F(1, 2)
CAP = 8


class TestPointOperator:
    def test_level_minus_one_terms(self):
        op = point_operator(-1, CAP)
        # -d_{t_0} + sum t_m d_{t_{m-1}} + t_0^2 / (2 hbar)
        assert op.terms[(0, (), ((0, 0),))] == -1
        assert op.terms[(0, ((0, 1),), ((0, 0),))] == 1
        assert op.terms[(-1, ((0, 0), (0, 0)), ())] == H

    def test_level_zero_constant(self):
        op = point_operator(0, CAP)
        assert op.terms[(0, (), ())] == F(1, 16)
        # (m + 1/2) t_m d_{t_m}
        assert op.terms[(0, ((0, 3),), ((0, 3),))] == F(7, 2)

    def test_level_two_coefficients(self):
        op = point_operator(2, CAP)
        # leading shift term: bracket(3/2, 2, 0) on the dilaton-shifted t_1
        assert op.terms[(0, (), ((0, 3),))] == -bracket(F(3, 2), 2, 0)
        # hbar quadratic term: m = 0 and m = 1 both normal-order to d_0 d_1
        want = H * (-bracket(-H, 2, 0) + bracket(-F(3, 2), 2, 0))
        assert op.terms[(1, (), ((0, 0), (0, 1)))] == want

    def test_bad_level(self):
        with pytest.raises(DomainError):
            point_operator(-2, CAP)


class TestSpecializations:
    @pytest.mark.parametrize("k", range(-1, 4))
    def test_point_matches_general(self, k):
        direct = point_operator(k, CAP)
        generic = general_operator(k, point_data(), CAP)
        assert (direct - generic).is_zero()

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_curve_matches_general_p1(self, k):
        direct = curve_operator(k, 0, CAP)
        generic = general_operator(k, p1_data(), CAP)
        assert (direct - generic).is_zero()

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_surface_matches_general_p2(self, k):
        data = p2_data()
        direct = surface_operator(k, [F(3)], [[F(1)]], CAP)
        generic = general_operator(k, data, CAP)
        assert (direct - generic).is_zero()


class TestAlgebra:
    @pytest.mark.parametrize("maker", [point_data, p1_data, p2_data, p3_data])
    def test_commutators(self, maker):
        data = maker()
        big = 4 + 8
        ops = {k: general_operator(k, data, big) for k in range(-1, 5)}
        for k in (-1, 0, 1, 2):
            for l in (-1, 0, 1, 2):
                if k + l < -1:
                    continue
                lhs = commutator(ops[k], ops[l]).level_filter(4)
                rhs = ops[k + l].scale(F(k - l)).level_filter(4)
                assert (lhs - rhs).is_zero(), (maker.__name__, k, l)

    def test_operator_arithmetic(self):
        a = DifferentialOperator()
        a.add_term(F(2), mult=[(0, 1)])
        b = DifferentialOperator()
        b.add_term(F(3), diff=[(0, 1)])
        # [mult by 2 t_1, 3 d_1] picks up the contraction -6
        comm = commutator(b, a)
        assert comm.terms == {(0, (), ()): F(6)}

    def test_level_filter(self):
        op = DifferentialOperator()
        op.add_term(F(1), mult=[(0, 5)])
        op.add_term(F(1), mult=[(0, 1)])
        assert op.level_filter(3).terms == {(0, ((0, 1),), ()): F(1)}


class TestApply:
    def _caps(self):
        return Caps(weight=6, hbar_min=-1, hbar_max=2)

    def test_multiplication(self):
        caps = self._caps()
        one = TruncatedSeries(caps, {(0, ()): F(1)})
        op = DifferentialOperator()
        op.add_term(F(1), mult=[(0, 0)])
        res, tainted = apply_operator(op, one)
        assert res.coefficient(0, (((0, 0), 1),)) == 1

    def test_differentiation_with_exponent_factor(self):
        caps = self._caps()
        series = TruncatedSeries(caps, {(0, (((0, 1), 2),)): F(1)})  # t_1^2
        op = DifferentialOperator()
        op.add_term(F(1), diff=[(0, 1)])
        res, _ = apply_operator(op, series)
        assert res.coefficient(0, (((0, 1), 1),)) == 2

    def test_taint_marks_truncation_boundary(self):
        caps = Caps(weight=4, hbar_min=0, hbar_max=0)
        series = TruncatedSeries(caps, {(0, (((0, 0), 1),)): F(1)})
        op = DifferentialOperator()
        op.add_term(F(1), diff=[(0, 3)])  # sources sit at weight 4 + 4 > cap
        _, tainted = apply_operator(op, series)
        # every admissible key whose source escapes the caps is flagged
        assert (0, (((0, 0), 1),)) in tainted

    def test_source_vanishes_clears_taint(self):
        caps = Caps(weight=4, hbar_min=0, hbar_max=0)
        series = TruncatedSeries(caps, {(0, (((0, 0), 1),)): F(1)})
        op = DifferentialOperator()
        op.add_term(F(1), diff=[(0, 3)])
        _, tainted = apply_operator(op, series, source_vanishes=lambda h, m: True)
        assert tainted == set()
