"""Exact tools for the tropical positive semidefinite cone.

Everything runs over exact rationals (``fractions.Fraction``); no floating
point is used anywhere, so membership verdicts, certificates and
factorizations are exact even on the cone boundary.
"""

from .errors import CapacityError, NotAMemberError
from .factor import (
    GramFactor,
    RankOneDecomposition,
    decompose_rank_one,
    gram_factor,
    rank_oracle_small,
    symmetric_barvinok_rank,
)
from .newton_subdiv import (
    Facet,
    Subdivision,
    is_psd_by_subdivision,
    is_trivial,
    lattice_points,
    lower_facets,
    lower_subdivision,
    upper_facets,
)
from .psd_cone import (
    ConeCombination,
    MembershipVerdict,
    cone_decompose,
    generators,
    is_trop_psd_det,
    is_trop_psd_inequalities,
    lineality_generator,
    pair_ray,
    principal_minor_identity_optimal,
)
from .puiseux import (
    PuiseuxMatrix,
    PuiseuxPoly,
    SignPattern,
    constant,
    construct_witness,
    format_poly,
    is_positive,
    leading_coefficient,
    monomial,
    principal_minors,
    specialization_threshold,
    specialize,
    specialize_and_check,
    valuation,
    verify_witness,
)
from .trop_core import (
    SymMatrix,
    TropicalDet,
    as_rat,
    evaluate_quadratic_form,
    is_rank_one_symmetric,
    rank_one_from_vector,
    trop_det_assignment,
    trop_det_bruteforce,
    trop_mat_mul,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ConeCombination",
    "Facet",
    "GramFactor",
    "MembershipVerdict",
    "NotAMemberError",
    "PuiseuxMatrix",
    "PuiseuxPoly",
    "RankOneDecomposition",
    "SignPattern",
    "Subdivision",
    "SymMatrix",
    "TropicalDet",
    "as_rat",
    "cone_decompose",
    "constant",
    "construct_witness",
    "decompose_rank_one",
    "evaluate_quadratic_form",
    "format_poly",
    "generators",
    "gram_factor",
    "is_positive",
    "is_psd_by_subdivision",
    "is_rank_one_symmetric",
    "is_trivial",
    "is_trop_psd_det",
    "is_trop_psd_inequalities",
    "lattice_points",
    "leading_coefficient",
    "lineality_generator",
    "lower_facets",
    "lower_subdivision",
    "monomial",
    "pair_ray",
    "principal_minor_identity_optimal",
    "principal_minors",
    "rank_one_from_vector",
    "rank_oracle_small",
    "specialization_threshold",
    "specialize",
    "specialize_and_check",
    "symmetric_barvinok_rank",
    "trop_det_assignment",
    "trop_det_bruteforce",
    "trop_mat_mul",
    "upper_facets",
    "valuation",
    "verify_witness",
]
