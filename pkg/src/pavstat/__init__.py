"""Exact enumeration and identity verification for statistics of
321-avoiding permutations: maj/des and inv/lrm polynomials, continued
fraction expansions, signed enumeration, and symmetric Dyck path counts.
"""

from .bijections import (
    OrbitStats,
    count_symmetric_dyck,
    dyck_paths,
    parity_inv,
    parity_maj_q,
    parity_maj_t,
    rotation_fixed_points,
    rotation_orbits,
)
from .cfrac import (
    ContinuedFraction,
    catalan_cf,
    even_contraction,
    expand,
    inv_cf,
    odd_contraction,
    substitute_qt,
)
from .closed_forms import (
    binomial,
    catalan,
    narayana,
    signed_coeff_predictions,
    signed_enum_coeff,
    signed_gf,
    signed_gf_odd,
    signed_poly_formula,
    signed_series,
    verify_coefficient_predictions,
    verify_even_step_recurrence,
    verify_functional_equation,
    verify_lagrange_identity,
    verify_reflection_identity,
    verify_sign_enumeration,
    verify_signed_ode,
    verify_three_term_recurrence,
)
from .perm_core import (
    Perm,
    as_perm,
    avoids,
    contains_pattern,
    des,
    descent_set,
    enumerate_avoiders,
    inflate,
    inv,
    lrm,
    maj,
    rotate180,
)
from .poly import BivarPoly, UnivarPoly, is_log_concave, is_symmetric, is_unimodal
from .series import TPoly, ZSeries
from .statpoly import inv_poly, maj_poly, maj_slice, signed_inv_poly

__version__ = "0.1.0"
