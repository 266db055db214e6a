"""Coefficient extraction from the constraint families.

The x/y evaluators compute multi-derivatives of expressions that must vanish
identically; the tests sweep levels, genera, and derivative patterns and also
exercise the symbolic output of the surface x family, whose lambda_g
lambda_{g-2} integrals are not all determined.
"""

import itertools

import pytest

from hodgeint.constraints import x_curve, x_surface, y_curve, y_surface
from hodgeint.errors import DomainError

DERIV_PATTERNS = [
    (),
    (0,),
    (1,),
    (2,),
    (0, 0),
    (1, 0),
    (2, 1),
    (3, 0, 0),
    (2, 2, 1),
]


class TestCurveFamilies:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_x_curve_vanishes(self, k, g):
        for derivs in DERIV_PATTERNS:
            assert x_curve(k, g, derivs) == 0

    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("g", [1, 2, 3])
    @pytest.mark.parametrize("ell", [0, 1, 2, 3])
    def test_y_curve_vanishes(self, k, g, ell):
        for derivs in DERIV_PATTERNS[:6]:
            assert y_curve(k, g, ell, derivs) == 0

    def test_x_curve_higher_genus_unpointed(self):
        # the coefficient giving the one-point constant relation
        for g in (2, 3, 4, 5):
            assert x_curve(2 * g - 2, g, ()) == 0


class TestSurfaceFamilies:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    @pytest.mark.parametrize("g", [1, 2])
    def test_x_surface_determined_and_vanishing(self, k, g):
        # genus <= 2 needs no unknown integrals: symbolic part must be empty
        for derivs in DERIV_PATTERNS:
            scalar, symbolic = x_surface(k, g, derivs)
            assert symbolic == {}
            assert scalar == 0

    def test_x_surface_genus_three_emits_unknowns(self):
        scalar, symbolic = x_surface(2, 3, (1,))
        assert symbolic  # lambda_3 lambda_1 integrals are not determined
        for (g, key), coeff in symbolic.items():
            assert g == 3
            assert coeff != 0
            # unknowns respect the dimension grading of the pair family
            assert sum(key) == g - 1 + len(key)

    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("g", [1, 2, 3])
    @pytest.mark.parametrize("ell", [0, 1, 2])
    def test_y_surface_vanishes(self, k, g, ell):
        for derivs in DERIV_PATTERNS[:6]:
            assert y_surface(k, g, ell, derivs) == 0


class TestDomain:
    def test_level_must_be_positive(self):
        with pytest.raises(DomainError):
            x_curve(0, 2)
        with pytest.raises(DomainError):
            y_curve(0, 2, 1)
        with pytest.raises(DomainError):
            x_surface(0, 2)
        with pytest.raises(DomainError):
            y_surface(0, 2, 1)

    def test_negative_ell(self):
        with pytest.raises(DomainError):
            y_curve(1, 2, -1)
        with pytest.raises(DomainError):
            y_surface(1, 2, -1)
