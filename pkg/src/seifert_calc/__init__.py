"""Exact invariants of weighted homogeneous surface singularities."""

from .classify import chi_e_lt_one, classify, lemma24, qhd_certificate
from .exact_arith import ConsistencyError, ValidationError, hj_eval, hj_expand, mod_inverse
from .graph import (
    PlumbingGraph,
    StarGraph,
    expand,
    format_star,
    intersection_matrix,
    is_negative_definite,
    parse_star,
    star_to_json,
    validate_star,
)
from .invariants import (
    CyclicQuotientExcluded,
    chi,
    cone_discrepancy,
    discrepancy_shift,
    euler_e,
    graded_discrepancy,
    k_cycle_closed_form,
    k_order_numerical,
    prop11_check,
    seifert_invariants,
)
from .lattice import (
    CanonicalCycle,
    DiscriminantGroup,
    canonical_cycle_oracle,
    determinant,
    discriminant_group,
    smith_normal_form,
    solve_exact,
)
from .pinkham import (
    DemazureData,
    XiData,
    deg_floor_kE,
    dualizing_dims,
    gorenstein_test,
    graded_dim,
    poincare_series,
    q_gorenstein_order,
)

__version__ = "0.1.0"
