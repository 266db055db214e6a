"""Exact intersection numbers of psi and lambda classes on moduli of stable
curves: closed forms, constraint recursions, obstruction-bundle Euler classes,
and degree-zero descendent invariants, all over ``fractions.Fraction``.
"""

from .constraints import x_curve, x_surface, y_curve, y_surface
from .errors import DomainError, UnderdeterminedError
from .hodge import (
    b_constant,
    c_constant,
    gg_const,
    hodge_table,
    kappa_lambda_integral,
    lambda_cube,
    lambda_g,
    lambda_g_gm1,
    lambda_g_gm1_solver,
    lambda_g_solver,
    lambda_gm1,
)
from .mumford import (
    LambdaRingElem,
    degree0_gw,
    euler_class,
    euler_class_genus1,
    mumford_reduce,
)
from .operators import (
    CohomologyData,
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
from .psi import point_partition, psi_integral
from .series1d import Series1D, b_closed_form, b_sequence

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "UnderdeterminedError",
    "psi_integral",
    "point_partition",
    "b_constant",
    "c_constant",
    "gg_const",
    "lambda_g",
    "lambda_g_solver",
    "lambda_g_gm1",
    "lambda_g_gm1_solver",
    "lambda_gm1",
    "lambda_cube",
    "kappa_lambda_integral",
    "hodge_table",
    "x_curve",
    "y_curve",
    "x_surface",
    "y_surface",
    "CohomologyData",
    "DifferentialOperator",
    "point_operator",
    "general_operator",
    "curve_operator",
    "surface_operator",
    "commutator",
    "apply_operator",
    "point_data",
    "p1_data",
    "p2_data",
    "p3_data",
    "LambdaRingElem",
    "mumford_reduce",
    "euler_class",
    "euler_class_genus1",
    "degree0_gw",
    "Series1D",
    "b_sequence",
    "b_closed_form",
]
