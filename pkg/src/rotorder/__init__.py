"""Exact decisions on the order of products of rational-angle rotations."""

from .algnum import (
    AlgebraicReal,
    Matrix,
    alg_add,
    alg_mul,
    alg_poly,
    charpoly,
    companion,
    cos_of,
    kron_prod,
    kron_sum,
    scale_by_rational,
    shift_by_rational,
    sin_of,
)
from .angle import RationalAngle
from .angledec import (
    IrrationalMultiple,
    RationalMultiple,
    eta_membership,
    gamma_double_cos_perpendicular,
    omega_coefficients,
    theorem1_decide,
)
from .gates import (
    Gate,
    ProductVerdict,
    axis_cosine,
    group_closure,
    ht_classify,
    product_cos_gamma,
    product_order,
    word_search,
)
from .poly import Interval, Poly, parse_poly
from .trigpoly import chebyshev_T, cyclotomic, eta, free_term, psi, psi_via_moebius

__all__ = [
    "AlgebraicReal", "Gate", "Interval", "IrrationalMultiple", "Matrix", "Poly",
    "ProductVerdict", "RationalAngle", "RationalMultiple",
    "alg_add", "alg_mul", "alg_poly", "axis_cosine", "charpoly", "chebyshev_T",
    "companion", "cos_of", "cyclotomic", "eta", "eta_membership", "free_term",
    "gamma_double_cos_perpendicular", "group_closure", "ht_classify", "kron_prod",
    "kron_sum", "omega_coefficients", "parse_poly", "product_cos_gamma",
    "product_order", "psi", "psi_via_moebius", "scale_by_rational",
    "shift_by_rational", "sin_of", "theorem1_decide", "word_search",
]
