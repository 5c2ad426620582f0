"""Boolean networks under fully asynchronous updates, and their monotone embedding."""

from .netcore import (
    BooleanNetwork,
    Configuration,
    DimensionError,
    SignedDigraph,
    SizeError,
    evaluate,
    has_negative_loop,
    interaction_graph,
    is_acyclic,
    is_monotone,
    signed_cycles,
)
from .asyncdyn import (
    UNREACHABLE,
    AsyncGraph,
    async_graph,
    diameter,
    distance,
    fixed_points,
    geodesic_fixed_point,
    has_geodesic,
    has_two_cycle,
    simulate,
    successors,
)
from .embedmono import HypothesisError, Layer, embed, in_omega, layer, mirror, mirror_identity_check, pair_weight
from .constructions import (
    exp_diameter_monotone,
    gray_code_network,
    random_acyclic,
    random_monotone,
    random_network,
    random_no_negative_loop,
)
from .theorems import (
    VerificationReport,
    check_embedding_suite,
    check_fixed_point_counts,
    check_monotone_reach,
    check_robert,
    run_corpus,
)

__version__ = "0.1.0"
