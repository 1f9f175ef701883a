"""Finite-statistics simulation of the bound-tracing experiment.

A noisy singlet source emits the Werner mixture
(1 - epsilon)|psi-><psi-| + epsilon I/4, a local rotation on qubit I
steers it onto the chosen frontier branch, and each of the four
observable pairs is measured with a fixed number of shots.  Every
(grid node, pair) combination samples its own deterministic substream
of the master seed, so whole traces are reproducible bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .bounds import (
    Branch,
    optimal_xi,
    quantum_bound,
    singlet_rotation,
    singlet_state,
)
from .errors import EmptyCountsError, EpsilonRangeError
from .linalg import IDENTITY2, IDENTITY4, RngStream, TwoQubitState, tensor
from .membership import chsh_to_ch, ch_value, joint_probability
from .observables import MeasurementSettings, chsh_value, make_settings

_SINGLET_RHO = singlet_state().density_matrix()


@dataclass(frozen=True)
class ShotPlan:
    """How many shots to spend per observable pair, and the master seed."""

    shots_per_setting: int
    seed: int = 0

    def __post_init__(self):
        if self.shots_per_setting < 1:
            raise ValueError(f"shots_per_setting must be >= 1, got {self.shots_per_setting}")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")


class OutcomeCounts(NamedTuple):
    """Counts of the four +/-1 outcome pairs of one observable pair."""

    pp: int
    pm: int
    mp: int
    mm: int

    @property
    def total(self) -> int:
        return self.pp + self.pm + self.mp + self.mm


@dataclass(frozen=True)
class CorrelationEstimate:
    """Sample correlation of one observable pair with its standard error."""

    value: float
    std_error: float
    n: int


@dataclass(frozen=True)
class ExperimentRecord:
    """One row of a bound trace; estimate fields are None without sampling."""

    theta: float
    xi_upper: float
    xi_lower: float
    bound_upper: float
    bound_lower: float
    chsh_ideal: float
    chsh_est: float | None
    chsh_err: float | None
    ch_ideal: float
    ch_est: float | None
    ch_err: float | None
    epsilon: float


class ScanResult(NamedTuple):
    """Extremal CHSH values seen in one random-state scan."""

    minimum: float
    maximum: float


def werner_state(epsilon: float) -> TwoQubitState:
    """Singlet mixed with white noise: (1 - epsilon)|psi-><psi-| + epsilon I/4."""
    epsilon = float(epsilon)
    if not math.isfinite(epsilon) or not 0.0 <= epsilon <= 1.0:
        raise EpsilonRangeError(f"epsilon must lie in [0, 1], got {epsilon}")
    rho = (1.0 - epsilon) * _SINGLET_RHO + (epsilon / 4.0) * IDENTITY4
    return TwoQubitState.mixed(rho)


def prepared_state(theta: float, branch: Branch = "upper", epsilon: float = 0.0) -> TwoQubitState:
    """Werner source steered onto the requested frontier branch.

    The noise acts at the source, before the local rotation U(xi), so
    the prepared state is (U (x) I) rho_werner (U (x) I)^dag with
    xi = optimal_xi(theta, branch).
    """
    xi = optimal_xi(theta, branch)
    u4 = tensor(singlet_rotation(xi), IDENTITY2)
    rho = u4 @ werner_state(epsilon).density_matrix() @ u4.conj().T
    return TwoQubitState.mixed(rho)


def sample_setting(
    state: TwoQubitState,
    obs_i: np.ndarray,
    obs_ii: np.ndarray,
    shots: int,
    rng: RngStream,
) -> OutcomeCounts:
    """Outcome counts of `shots` independent joint measurements of one pair."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    probs = np.array(
        [
            joint_probability(state, obs_i, obs_ii, 1, 1),
            joint_probability(state, obs_i, obs_ii, 1, -1),
            joint_probability(state, obs_i, obs_ii, -1, 1),
            joint_probability(state, obs_i, obs_ii, -1, -1),
        ]
    )
    total = probs.sum()
    if abs(total - 1.0) > 1e-10:
        raise ValueError(f"outcome probabilities sum to {total}, not 1")
    counts = rng.multinomial(shots, probs / total)
    return OutcomeCounts(int(counts[0]), int(counts[1]), int(counts[2]), int(counts[3]))


def estimate_correlation(counts: OutcomeCounts) -> CorrelationEstimate:
    """Sample correlation (pp + mm - pm - mp)/n with std_error sqrt((1 - v^2)/n).

    A single shot carries no spread information, so n = 1 reports the
    maximal standard error 1.0 instead of the formula's degenerate 0.
    """
    n = counts.total
    if n <= 0:
        raise EmptyCountsError("cannot estimate a correlation from zero counts")
    value = (counts.pp + counts.mm - counts.pm - counts.mp) / n
    if n == 1:
        std_error = 1.0
    else:
        std_error = math.sqrt(max(0.0, 1.0 - value * value) / n)
    return CorrelationEstimate(value=value, std_error=std_error, n=n)


def _sampled_chsh(
    settings: MeasurementSettings,
    state: TwoQubitState,
    plan: ShotPlan,
    node_index: int,
) -> tuple[float, float]:
    """CHSH estimate and quadrature error from four independently sampled pairs."""
    estimates = []
    for pair_index, (obs_i, obs_ii) in enumerate(settings.setting_pairs()):
        rng = RngStream(plan.seed, node_index * 4 + pair_index)
        counts = sample_setting(state, obs_i, obs_ii, plan.shots_per_setting, rng)
        estimates.append(estimate_correlation(counts))
    value = estimates[0].value + estimates[1].value + estimates[2].value - estimates[3].value
    error = math.sqrt(sum(e.std_error**2 for e in estimates))
    return value, error


def run_point(
    theta: float,
    branch: Branch = "upper",
    epsilon: float = 0.0,
    plan: ShotPlan | None = None,
    node_index: int = 0,
) -> ExperimentRecord:
    """Analytical bound data, and optionally a sampled estimate, at one angle.

    With a plan, each observable pair draws from substream
    node_index * 4 + pair_index of the plan seed, the four standard
    errors add in quadrature, and the CH estimate is the exact affine
    image (chsh_est - 2)/4 so both estimates come from the same counts.
    """
    settings = make_settings(theta)
    bound = quantum_bound(theta)
    state = prepared_state(theta, branch, epsilon)
    chsh_ideal = chsh_value(settings, state)
    ch_ideal = ch_value(settings, state)
    chsh_est = chsh_err = ch_est = ch_err = None
    if plan is not None:
        chsh_est, chsh_err = _sampled_chsh(settings, state, plan, node_index)
        ch_est = chsh_to_ch(chsh_est)
        ch_err = chsh_err / 4.0
    return ExperimentRecord(
        theta=bound.theta,
        xi_upper=bound.xi_upper,
        xi_lower=bound.xi_lower,
        bound_upper=bound.upper,
        bound_lower=bound.lower,
        chsh_ideal=chsh_ideal,
        chsh_est=chsh_est,
        chsh_err=chsh_err,
        ch_ideal=ch_ideal,
        ch_est=ch_est,
        ch_err=ch_err,
        epsilon=float(epsilon),
    )


def trace_bound(
    n_points: int,
    branch: Branch = "upper",
    epsilon: float = 0.0,
    plan: ShotPlan | None = None,
) -> list[ExperimentRecord]:
    """Run the experiment on a uniform theta grid over [0, pi].

    Nodes are visited in ascending order; node i derives its four
    sampling substreams from i, so the whole trace is reproducible.
    """
    if n_points < 2:
        raise ValueError(f"n_points must be >= 2, got {n_points}")
    thetas = np.linspace(0.0, math.pi, n_points)
    return [
        run_point(float(theta), branch, epsilon, plan, node_index=i)
        for i, theta in enumerate(thetas)
    ]


def random_scan(theta: float, n_states: int, mix: str, rng: RngStream) -> ScanResult:
    """Extremal CHSH values over randomly generated states at one angle.

    mix selects Haar-uniform pure states ('pure'), trace-normalised
    Wishart density matrices of random rank 1..4 ('mixed'), or an even
    split ('both').  The scan never exceeds the analytical bounds; with
    enough pure states it approaches them.
    """
    if n_states < 1:
        raise ValueError(f"n_states must be >= 1, got {n_states}")
    if mix not in ("pure", "mixed", "both"):
        raise ValueError(f"mix must be 'pure', 'mixed' or 'both', got {mix!r}")
    bell = make_settings(theta)._bell
    n_pure = {"pure": n_states, "mixed": 0, "both": n_states - n_states // 2}[mix]
    n_mixed = n_states - n_pure
    chunks = []
    if n_pure:
        amps = rng.complex_normals((n_pure, 4))
        amps /= np.linalg.norm(amps, axis=1, keepdims=True)
        chunks.append(np.einsum("ni,ij,nj->n", amps.conj(), bell, amps).real)
    if n_mixed:
        ranks = rng.integers(1, 5, size=n_mixed)
        for rank in (1, 2, 3, 4):
            group = int(np.count_nonzero(ranks == rank))
            if group == 0:
                continue
            g = rng.complex_normals((group, 4, rank))
            rho = g @ np.conj(np.transpose(g, (0, 2, 1)))
            rho /= np.trace(rho, axis1=1, axis2=2).real[:, None, None]
            chunks.append(np.einsum("nij,ji->n", rho, bell).real)
    values = np.concatenate(chunks)
    return ScanResult(minimum=float(values.min()), maximum=float(values.max()))
