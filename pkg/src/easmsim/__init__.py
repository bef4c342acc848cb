"""Round-based simulator for cluster-head election in three-level
heterogeneous wireless sensor networks.

The package compares three election protocols — LEACH (flat probability),
EEHC (probability weighted by initial energy class) and EASM (EEHC plus a
residual-energy threshold factor) — under a shared first-order radio model,
and folds the round stream into the standard lifetime metrics: first node
dies, half nodes alive, last node dies, messages delivered at the base
station, and remaining energy.
"""

from .engine import ClusterAssignment, RoundReport, form_clusters, run_round, run_steady_state
from .experiment import (
    ComparisonResult,
    ExperimentConfig,
    ExperimentResult,
    ProtocolStats,
    compare,
    compare_protocols,
    milestone_stats,
    run_experiment,
    run_seeds,
    scenario_1,
    scenario_2,
    simulate,
    sweep,
)
from .metrics import LifetimeSummary, fold, messages_vs_energy
from .network import (
    HeterogeneityParams,
    NetworkConfig,
    Node,
    NodeClass,
    Position,
    deploy,
    distance,
    total_initial_energy,
)
from .protocols import (
    ElectionContext,
    ProtocolKind,
    class_probability,
    elect,
    epoch_length,
    threshold,
)
from .radio import RadioParams, aggregation_cost, rx_cost, tx_cost

__version__ = "0.1.0"

__all__ = [
    "ClusterAssignment",
    "ComparisonResult",
    "ElectionContext",
    "ExperimentConfig",
    "ExperimentResult",
    "HeterogeneityParams",
    "LifetimeSummary",
    "NetworkConfig",
    "Node",
    "NodeClass",
    "Position",
    "ProtocolKind",
    "ProtocolStats",
    "RadioParams",
    "RoundReport",
    "aggregation_cost",
    "class_probability",
    "compare",
    "compare_protocols",
    "deploy",
    "distance",
    "elect",
    "epoch_length",
    "fold",
    "form_clusters",
    "messages_vs_energy",
    "milestone_stats",
    "run_experiment",
    "run_round",
    "run_seeds",
    "run_steady_state",
    "rx_cost",
    "scenario_1",
    "scenario_2",
    "simulate",
    "sweep",
    "threshold",
    "total_initial_energy",
    "tx_cost",
]
