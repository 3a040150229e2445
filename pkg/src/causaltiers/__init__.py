"""Causal graph orientation under tiered background knowledge."""

from .graphs import (
    CycleError,
    GraphError,
    LimitError,
    PDAG,
    v_structures,
)
from .independence import cpdag_of, is_d_separated, markov_equivalent
from .orientation import (
    BackgroundKnowledge,
    InconsistentKnowledgeError,
    apply_meek_rule,
    check_consistency,
    enumerate_class,
    impose_knowledge,
    meek_closure,
    mpdag_of,
    tiered_mpdag,
)
from .tiers import (
    CrossTierEdgeReport,
    IncompatibleOrderingsError,
    Informativeness,
    Refinement,
    TierComparison,
    TieredOrdering,
    TierEquivalence,
    compare_refinement,
    contained_in,
    cross_tier_report,
    forbidden_set,
    tiers_equivalent,
    tiers_more_informative,
)
from .paths import (
    BPathVerdict,
    PathVerdict,
    check_adjustment_equivalence,
    classify_b_possibly_causal,
    classify_possibly_causal,
)
from .ida import ParentSetMultiset, joint_ida, local_ida
from .simulation import (
    SimCell,
    SimConfig,
    SimRecord,
    TIER_SCHEMES,
    TierScheme,
    emit_results,
    random_dag,
    run_cell,
    run_config,
)
from .formats import (
    format_graph,
    format_tiers,
    load_graph,
    load_tiers,
    parse_graph,
    parse_tiers,
)

__version__ = "0.1.0"

__all__ = [
    "PDAG",
    "GraphError",
    "CycleError",
    "LimitError",
    "v_structures",
    "is_d_separated",
    "markov_equivalent",
    "cpdag_of",
    "BackgroundKnowledge",
    "InconsistentKnowledgeError",
    "impose_knowledge",
    "apply_meek_rule",
    "meek_closure",
    "mpdag_of",
    "tiered_mpdag",
    "check_consistency",
    "enumerate_class",
    "TieredOrdering",
    "TierComparison",
    "TierEquivalence",
    "CrossTierEdgeReport",
    "Refinement",
    "Informativeness",
    "IncompatibleOrderingsError",
    "forbidden_set",
    "compare_refinement",
    "cross_tier_report",
    "tiers_equivalent",
    "tiers_more_informative",
    "contained_in",
    "PathVerdict",
    "BPathVerdict",
    "classify_possibly_causal",
    "classify_b_possibly_causal",
    "check_adjustment_equivalence",
    "ParentSetMultiset",
    "local_ida",
    "joint_ida",
    "SimCell",
    "SimConfig",
    "SimRecord",
    "TierScheme",
    "TIER_SCHEMES",
    "random_dag",
    "run_cell",
    "run_config",
    "emit_results",
    "parse_graph",
    "format_graph",
    "load_graph",
    "parse_tiers",
    "format_tiers",
    "load_tiers",
]
