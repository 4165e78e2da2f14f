"""filtra: exact Hilbert coefficients of good filtrations on graded
quotient rings, with machine-checked upper and lower bounds on e2."""

__version__ = "0.1.0"

from .errors import (
    ContainmentError,
    FiltraError,
    InfiniteLengthError,
    InternalConsistencyError,
    NotHomogeneousError,
    NotSuperficialError,
    ParseError,
    ResourceLimitError,
    StabilizationError,
)
from .field import DEFAULT_FIELD, GF, QQ, CoeffField
from .filtration import (
    FiltrationSpec,
    RatliffRushResult,
    adic_filtration,
    explicit_filtration,
    module_depth_positive,
    quotient_filtration,
    ratliff_rush_filtration,
    ratliff_rush_ideal,
)
from .groebner import GroebnerBasis, buchberger, normal_form
from .hilbert import (
    Dim1Profile,
    FiltrationHilbertSummary,
    GrPresentation,
    dim1_profile,
    filtration_hilbert_exact,
    filtration_hilbert_sampled,
    gr_presentation,
    hilbert_function,
    summaries_agree,
    summary_for,
)
from .ideals import (
    IdealHandle,
    colength,
    colength_slices,
    eliminate,
    hilbert_series,
    ideal,
    ideal_contains,
    ideal_equal,
    ideal_intersection,
    ideal_op,
    ideal_power,
    ideal_product,
    ideal_quotient,
    ideal_sum,
    krull_dim,
    maximal_ideal,
    saturation,
    unit_ideal,
    zero_ideal,
)
from .oracle import oracle_dimension, oracle_membership
from .poly import Polynomial, normalize, parse_polynomial, poly, polys
from .ring import Ring, TermOrder, block, grevlex, lex, ring
from .superficial import (
    DepthCertificate,
    SuperficialCertificate,
    certify_superficial,
    certify_superficial_sequence,
    depth_certificate_gr,
    depth_certificate_module,
    random_superficial_candidate,
)
from .theorems import (
    TheoremReport,
    bound_sum_B,
    corollary_cm,
    corollary_madic,
    corollary_parameter,
    slicing_consistency,
    verify_difference_bound,
    verify_lower_bound,
    verify_upper_bound,
)
