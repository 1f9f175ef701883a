"""Two-qubit CHSH correlation bounds, membership tests and experiment simulation."""

from .bounds import (
    Branch,
    QuantumBound,
    frontier_state,
    optimal_xi,
    phi_plus_state,
    prepare_from_singlet,
    quantum_bound,
    singlet_rotation,
    singlet_state,
)
from .errors import (
    ConvergenceError,
    EmptyCountsError,
    EntryRangeError,
    EpsilonRangeError,
    ImaginaryExpectationError,
    InvalidRankError,
    NonHermitianError,
    ThetaRangeError,
)
from .experiment import (
    CorrelationEstimate,
    ExperimentRecord,
    OutcomeCounts,
    ScanResult,
    ShotPlan,
    estimate_correlation,
    prepared_state,
    random_scan,
    run_point,
    sample_setting,
    trace_bound,
    werner_state,
)
from .linalg import (
    RngStream,
    TwoQubitState,
    expectation,
    haar_random_pure,
    hermitian_eigen_extrema,
    pauli,
    random_density,
    require_hermitian,
    tensor,
)
from .membership import (
    CorrelationQuadruple,
    RegionLabel,
    TSIRELSON_BOUND,
    arcsin_combination,
    ch_value,
    chsh_combination,
    chsh_to_ch,
    classify,
    is_classical,
    is_quantum_attainable,
    joint_probability,
    satisfies_tsirelson,
)
from .observables import (
    BellOperator,
    MeasurementSettings,
    chsh_operator,
    chsh_value,
    correlation_quadruple,
    make_settings,
)

__version__ = "0.1.0"

__all__ = [
    "BellOperator",
    "Branch",
    "ConvergenceError",
    "CorrelationEstimate",
    "CorrelationQuadruple",
    "EmptyCountsError",
    "EntryRangeError",
    "EpsilonRangeError",
    "ExperimentRecord",
    "ImaginaryExpectationError",
    "InvalidRankError",
    "MeasurementSettings",
    "NonHermitianError",
    "OutcomeCounts",
    "QuantumBound",
    "RegionLabel",
    "RngStream",
    "ScanResult",
    "ShotPlan",
    "ThetaRangeError",
    "TSIRELSON_BOUND",
    "TwoQubitState",
    "arcsin_combination",
    "ch_value",
    "chsh_combination",
    "chsh_operator",
    "chsh_to_ch",
    "chsh_value",
    "classify",
    "correlation_quadruple",
    "estimate_correlation",
    "expectation",
    "frontier_state",
    "haar_random_pure",
    "hermitian_eigen_extrema",
    "is_classical",
    "is_quantum_attainable",
    "joint_probability",
    "make_settings",
    "optimal_xi",
    "pauli",
    "phi_plus_state",
    "prepare_from_singlet",
    "prepared_state",
    "quantum_bound",
    "random_density",
    "random_scan",
    "require_hermitian",
    "run_point",
    "sample_setting",
    "singlet_rotation",
    "singlet_state",
    "tensor",
    "trace_bound",
    "werner_state",
]
