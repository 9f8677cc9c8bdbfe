"""Interacting discrete-time quantum walks and their entanglement diagnostics."""

from .conditioning import CoinProjection, postselect_coin, projection_grid, unconditioned_vertex_state
from .errors import ContractViolationError, ZeroProbabilityError
from .linalg import (
    HermitianSpectrum,
    SubsystemShape,
    hermitian_eig,
    kron,
    kron_all,
    matrix_sqrt_psd,
    partial_trace,
    partial_transpose,
    reduced_density,
    schatten1_norm,
)
from .metrics import (
    Bipartition,
    closeness,
    log_negativity,
    n_concurrence,
    trace_distance,
    validate_density_matrix,
    von_neumann_entropy,
)
from .runner import (
    BEST_CLUSTER_COINS,
    STANDARD_COINS,
    MetricSeries,
    SweepResult,
    SweepSpec,
    default_angle_grid,
    parse_angle,
    reference_density,
    reproduce_figure,
    run_metric_series,
    run_sweep,
    series_csv,
    series_json,
)
from .states import ghz, graph_state, stabilizer_expectations, w_state
from .walk import (
    CoinParams,
    GraphTopology,
    PureState,
    WalkConfig,
    build_coin,
    build_interaction,
    build_shift,
    build_step,
    evolve,
    standard_initial_state,
    walk_shape,
)

__all__ = [
    "BEST_CLUSTER_COINS",
    "Bipartition",
    "CoinParams",
    "CoinProjection",
    "ContractViolationError",
    "GraphTopology",
    "HermitianSpectrum",
    "MetricSeries",
    "PureState",
    "STANDARD_COINS",
    "SubsystemShape",
    "SweepResult",
    "SweepSpec",
    "WalkConfig",
    "ZeroProbabilityError",
    "build_coin",
    "build_interaction",
    "build_shift",
    "build_step",
    "closeness",
    "default_angle_grid",
    "evolve",
    "ghz",
    "graph_state",
    "hermitian_eig",
    "kron",
    "kron_all",
    "log_negativity",
    "matrix_sqrt_psd",
    "n_concurrence",
    "parse_angle",
    "partial_trace",
    "partial_transpose",
    "postselect_coin",
    "projection_grid",
    "reduced_density",
    "reference_density",
    "reproduce_figure",
    "run_metric_series",
    "run_sweep",
    "schatten1_norm",
    "series_csv",
    "series_json",
    "stabilizer_expectations",
    "standard_initial_state",
    "trace_distance",
    "unconditioned_vertex_state",
    "validate_density_matrix",
    "von_neumann_entropy",
    "w_state",
    "walk_shape",
]

__version__ = "0.1.0"
