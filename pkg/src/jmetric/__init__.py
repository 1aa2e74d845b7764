"""Distance ratio metric on planar disks and half-planes.

Exact domains and the j metric, a closed family of holomorphic maps with
evaluation and image-domain computation, seeded verification suites for the
classical contraction inequalities, and a deterministic search for metric
distortion lower bounds.
"""

from .domains import (
    Disk,
    HalfPlane,
    PlanarDomain,
    UnitDisk,
    UpperHalfPlane,
    boundary_distance,
    contains,
    j_distance,
    pseudo_hyperbolic_disk,
    pseudo_hyperbolic_halfplane,
)
from .errors import (
    CoincidentPoints,
    DomainError,
    JmetricError,
    ParseError,
    PointOutsideDomain,
    PoleEncountered,
    SelfMapViolation,
    UnsupportedImage,
)
from .grammar import (
    format_complex,
    format_domain,
    format_map,
    parse_complex,
    parse_domain,
    parse_map,
)
from .maps import (
    Blaschke,
    Compose,
    Extremal,
    MapExpr,
    Mobius,
    apply,
    compose_maps,
    derivative,
    image_modulus_bound,
    is_self_map_sampled,
    maps_into_sampled,
    mobius_compose,
    mobius_image_domain,
    mobius_inverse,
)
from .search import (
    SearchConfig,
    SearchReport,
    SweepRow,
    cstar_bounds,
    estimate_lipschitz,
    extremal_ratio,
    extremal_sweep,
    local_distortion,
    ratio_objective,
    sweep_to_csv,
)
from .verify import (
    SUITE_NAMES,
    CheckReport,
    check_bound_2_3,
    check_g_negativity,
    check_identity_disk,
    check_identity_halfplane,
    check_lipschitz_pair,
    check_schwarz_pick_disk,
    check_schwarz_pick_halfplane,
    check_step_1_2,
    check_step_2_2,
    g_threshold,
    g_threshold_from_modulus,
    lipschitz_ceiling,
    run_all_suites,
    run_schwarz_pick_equality,
    run_suite,
)

__version__ = "0.1.0"
