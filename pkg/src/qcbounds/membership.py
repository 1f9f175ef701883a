"""Membership tests for two-qubit correlation quadruples.

A quadruple (x0, x1, x2, x3) collects the four correlations
(<AB>, <Ab>, <aB>, <ab>).  Three nested regions are distinguished:

* classical: all eight CHSH combinations bounded by 2 in magnitude,
* quantum attainable: all eight arcsin combinations bounded by pi,
* within the Tsirelson relaxation: combinations bounded by 2 sqrt(2).

All boundary tests are closed with an additive slack of 1e-12, and
entries that overshoot [-1, 1] by at most 1e-9 (finite-statistics
round-off) are clamped to the interval first.
"""

from __future__ import annotations

import enum
import math
from typing import TYPE_CHECKING, NamedTuple, Sequence

import numpy as np

from .errors import EntryRangeError
from .linalg import IDENTITY2, TwoQubitState, expectation, require_hermitian, tensor

if TYPE_CHECKING:  # pragma: no cover
    from .observables import MeasurementSettings

TSIRELSON_BOUND = 2.0 * math.sqrt(2.0)
CLAMP_TOL = 1e-9
_BOUNDARY_TOL = 1e-12


class CorrelationQuadruple(NamedTuple):
    """The four correlations (<AB>, <Ab>, <aB>, <ab>)."""

    x0: float
    x1: float
    x2: float
    x3: float


class RegionLabel(enum.Enum):
    """Classification of a quadruple, from most to least constrained."""

    CLASSICAL = "Classical"
    QUANTUM_NONCLASSICAL = "QuantumNonclassical"
    SUPERQUANTUM_WITHIN_TSIRELSON = "SuperquantumWithinTsirelson"
    BEYOND_TSIRELSON = "BeyondTsirelson"


def chsh_combination(quadruple: Sequence[float], index: int) -> float:
    """x_i + x_{i+1} + x_{i+2} - x_{i+3} with cyclic indices mod 4."""
    if not 0 <= index <= 3:
        raise IndexError(f"combination index must be in 0..3, got {index}")
    x = tuple(quadruple)
    return x[index] + x[(index + 1) % 4] + x[(index + 2) % 4] - x[(index + 3) % 4]


def arcsin_combination(quadruple: Sequence[float], index: int) -> float:
    """Same cyclic combination applied to the arcsines of the entries.

    Entries are clamped into [-1, 1] first (tolerance 1e-9) so that
    finite-statistics round-off cannot push them out of the arcsin
    domain.
    """
    if not 0 <= index <= 3:
        raise IndexError(f"combination index must be in 0..3, got {index}")
    y = [math.asin(v) for v in _clamped_entries(quadruple)]
    return y[index] + y[(index + 1) % 4] + y[(index + 2) % 4] - y[(index + 3) % 4]


def _combinations(x) -> tuple[float, float, float, float]:
    x0, x1, x2, x3 = x
    return (
        x0 + x1 + x2 - x3,
        x1 + x2 + x3 - x0,
        x2 + x3 + x0 - x1,
        x3 + x0 + x1 - x2,
    )


def _clamped_entries(quadruple, clamp_tol: float = CLAMP_TOL):
    """Entries forced into [-1, 1]; overshoot beyond clamp_tol raises."""
    out = []
    for v in quadruple:
        v = float(v)
        if not math.isfinite(v):
            raise EntryRangeError(f"correlation entry {v} is not finite")
        if v > 1.0:
            if v > 1.0 + clamp_tol:
                raise EntryRangeError(f"correlation entry {v} above 1 by more than {clamp_tol:g}")
            v = 1.0
        elif v < -1.0:
            if v < -1.0 - clamp_tol:
                raise EntryRangeError(f"correlation entry {v} below -1 by more than {clamp_tol:g}")
            v = -1.0
        out.append(v)
    if len(out) != 4:
        raise ValueError(f"expected four correlation entries, got {len(out)}")
    return tuple(out)


def is_classical(quadruple: Sequence[float]) -> bool:
    """True iff every CHSH combination satisfies |S_i| <= 2."""
    x = _clamped_entries(quadruple)
    return all(abs(s) <= 2.0 + _BOUNDARY_TOL for s in _combinations(x))


def satisfies_tsirelson(quadruple: Sequence[float]) -> bool:
    """True iff entries lie in [-1, 1] and every combination within 2 sqrt(2).

    Necessary for quantum attainability but not sufficient.  Never
    raises; inputs too far outside [-1, 1] simply fail the test.
    """
    x = []
    for v in quadruple:
        v = float(v)
        if not math.isfinite(v) or abs(v) > 1.0 + CLAMP_TOL:
            return False
        x.append(min(1.0, max(-1.0, v)))
    if len(x) != 4:
        return False
    return all(abs(s) <= TSIRELSON_BOUND + _BOUNDARY_TOL for s in _combinations(x))


def is_quantum_attainable(quadruple: Sequence[float]) -> bool:
    """True iff every arcsin combination satisfies |T_i| <= pi.

    T_i = asin(x_i) + asin(x_{i+1}) + asin(x_{i+2}) - asin(x_{i+3}),
    the exact characterisation of quadruples realisable by quantum
    states, strictly between the classical and Tsirelson regions.
    """
    x = _clamped_entries(quadruple)
    arcs = tuple(math.asin(v) for v in x)
    return all(abs(s) <= math.pi + _BOUNDARY_TOL for s in _combinations(arcs))


def classify(quadruple: Sequence[float]) -> RegionLabel:
    """Most constrained region containing the quadruple.

    Precedence: Classical, then QuantumNonclassical, then
    SuperquantumWithinTsirelson, then BeyondTsirelson.
    """
    x = _clamped_entries(quadruple)
    combos = _combinations(x)
    if all(abs(s) <= 2.0 + _BOUNDARY_TOL for s in combos):
        return RegionLabel.CLASSICAL
    arcs = _combinations(tuple(math.asin(v) for v in x))
    if all(abs(s) <= math.pi + _BOUNDARY_TOL for s in arcs):
        return RegionLabel.QUANTUM_NONCLASSICAL
    if all(abs(s) <= TSIRELSON_BOUND + _BOUNDARY_TOL for s in combos):
        return RegionLabel.SUPERQUANTUM_WITHIN_TSIRELSON
    return RegionLabel.BEYOND_TSIRELSON


def chsh_to_ch(value: float) -> float:
    """Affine map (value - 2) / 4 from the CHSH scale to the CH scale."""
    return (value - 2.0) / 4.0


def _outcome_projector(obs: np.ndarray, outcome: int) -> np.ndarray:
    """Projector (I + outcome * obs) / 2 for a +/-1-valued observable."""
    obs = require_hermitian(obs)
    dim = obs.shape[0]
    if not np.allclose(obs @ obs, np.eye(dim), atol=1e-10):
        raise ValueError("observable must square to the identity")
    return 0.5 * (np.eye(dim, dtype=complex) + outcome * obs)


def joint_probability(
    state: TwoQubitState,
    obs_i: np.ndarray,
    obs_ii: np.ndarray,
    outcome_i: int,
    outcome_ii: int,
) -> float:
    """P(obs_i = outcome_i, obs_ii = outcome_ii) in the given state."""
    if outcome_i not in (1, -1) or outcome_ii not in (1, -1):
        raise ValueError("outcomes must be +1 or -1")
    proj = tensor(_outcome_projector(obs_i, outcome_i), _outcome_projector(obs_ii, outcome_ii))
    p = expectation(proj, state)
    if not -1e-10 <= p <= 1.0 + 1e-10:
        raise ValueError(f"probability {p} outside [0, 1] beyond tolerance")
    return min(1.0, max(0.0, p))


def _single_probability(state, obs, side: int) -> float:
    """P(obs = +1) on one side, via the projector tensored with identity."""
    proj = _outcome_projector(obs, 1)
    full = tensor(proj, IDENTITY2) if side == 0 else tensor(IDENTITY2, proj)
    p = expectation(full, state)
    return min(1.0, max(0.0, p))


def ch_value(settings: MeasurementSettings, state: TwoQubitState) -> float:
    """Probability combination on the CH scale.

    P(A=1,B=1) - P(A=1,b=-1) + P(a=1,B=1) + P(a=1,b=-1) - P(a=1) - P(B=1),
    which equals (chsh_value - 2) / 4 for every state.
    """
    return (
        joint_probability(state, settings.A, settings.B, 1, 1)
        - joint_probability(state, settings.A, settings.b, 1, -1)
        + joint_probability(state, settings.a, settings.B, 1, 1)
        + joint_probability(state, settings.a, settings.b, 1, -1)
        - _single_probability(state, settings.a, 0)
        - _single_probability(state, settings.B, 1)
    )
