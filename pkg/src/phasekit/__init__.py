"""Phase properties of nonlinear coherent states in a truncated Fock basis."""

from .errors import (
    DegenerateCommutator,
    DegenerateNonlinearity,
    NoInteriorMinimum,
    PhasekitError,
    TruncationSaturated,
)
from .phase import (
    PhaseDistribution,
    SqueezingReport,
    commutator_magnitude,
    finite_s_oracle,
    pegg_barnett,
    pegg_barnett_at,
    phase_variance,
    phase_variance_quadrature,
    quasi_coefficient,
    quasi_distribution,
    squeezing,
    theta_grid,
)
from .special import SignedLogValue, laguerre, laguerre_table, log_factorial, log_gamma
from .states import (
    AmplitudeVector,
    NumberMoments,
    StateSpec,
    TruncationPolicy,
    build_state,
    coefficient_ladder,
    nonlinearity,
    number_moments,
)
from .sweep import (
    SweepResult,
    SweepRow,
    SweepSpec,
    alpha_range,
    find_variance_minimum,
    run_sweep,
)

__version__ = "0.1.0"
