"""Local graph-enrichment protocols played against adversarial node removal.

The compiled extension carries the core: graph construction and component
analysis, the 2SFF and A3F enrichment protocols, adversary plans, the
disconnection game, synthetic generators, and the privacy calculations.
"""

from netrobust._core import (
    ComponentLabeling,
    EnrichmentResult,
    GameOutcome,
    Graph,
    TheoremInstanceSpec,
    apply_enrichment,
    build_theorem_instance,
    connected_components,
    default_fat_count,
    degrees,
    dp_guarantee,
    generate_ba,
    largest_component_fraction,
    load_snap_edgelist,
    loads_snap_edgelist,
    mix_seed,
    noiseless_aggregation_plausible,
    paalec_params,
    plan_random_failures,
    plan_targeted,
    play_game,
    remove_nodes,
    run_2sff,
    run_a3f,
    run_theorem_check,
    select_fat_nodes,
    select_participants,
    xi_strength,
)

__all__ = [
    "ComponentLabeling",
    "EnrichmentResult",
    "GameOutcome",
    "Graph",
    "TheoremInstanceSpec",
    "apply_enrichment",
    "build_theorem_instance",
    "connected_components",
    "default_fat_count",
    "degrees",
    "dp_guarantee",
    "generate_ba",
    "largest_component_fraction",
    "load_snap_edgelist",
    "loads_snap_edgelist",
    "mix_seed",
    "noiseless_aggregation_plausible",
    "paalec_params",
    "plan_random_failures",
    "plan_targeted",
    "play_game",
    "remove_nodes",
    "run_2sff",
    "run_a3f",
    "run_theorem_check",
    "select_fat_nodes",
    "select_participants",
    "xi_strength",
]

__version__ = "0.1.0"
