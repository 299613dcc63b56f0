"""Minimal t-fold blocking sets in finite projective planes and designs."""

from .blocking import (
    BoundReport,
    EqualityCase,
    PointSet,
    SecantSpectrum,
    case_analysis,
    classify_equality,
    code_dimension_bound,
    counting_identities,
    counting_identities_check,
    equality_conditions,
    equality_secant_sizes,
    general_design_bound,
    hyperplane_tangency_bound,
    hyperplane_tfold_bound,
    is_minimal_t_fold,
    is_t_fold_blocking,
    main_bound,
    quadratic_membership,
    s_secant_bound,
    secant_spectrum,
    semiarc_bound,
    symmetric_design_bound,
    variance_slack,
    verify_point_set,
)
from .constructions import (
    CONSTRUCTIONS,
    baer_complement,
    baer_subplane,
    elliptic_quadric_ovoid,
    hermitian_curve,
    hermitian_surface,
    hermitian_tfold,
    ovoid_tfold,
    pavese_2fold,
    plane_minus_point,
)
from .designs import (
    Design,
    MixingReport,
    design_from_blocks,
    design_from_geometry,
    equality_regularity_check,
    mixing_bound_check,
    mixing_scan_exhaustive,
    mixing_scan_random,
)
from .errors import *  # noqa: F401,F403
from .galois import Field, FieldElement, arith, field_create, field_of_order, relative_norm
from .geometry import (
    ProjectiveSpace,
    enumerate_k_subspaces,
    gaussian_coefficient,
    pg_create,
    span_line,
    theta,
    unitary_polarity,
)
from .io import dump_design, dump_point_set, load_design, load_point_set
from .search import (
    SearchResult,
    exhaustive_max_minimal,
    heuristic_max_minimal,
    naive_max_minimal,
    verify_certificate,
)

__version__ = "0.1.0"
