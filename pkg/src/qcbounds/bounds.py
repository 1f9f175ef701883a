"""Analytical CHSH extrema over all quantum states, per working angle.

For the one-parameter settings family the largest CHSH value any
quantum state can reach is

    F(theta) = 2 [ (1 + sin^2(2 theta))^(-1/2)
                   + g(theta) sin(2 theta) sqrt(1 + 2 / (cos(4 theta) - 3)) ]

with the gain g = +1 on [0, pi/2) and -1 on [pi/2, pi]; the smallest
reachable value is -F(theta).  Both extrema are attained inside the
maximally entangled family |phi(xi)> = cos(xi)|phi+> + sin(xi)|psi->,
at a mixing angle xi with a closed form per branch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import ThetaRangeError
from .linalg import IDENTITY2, TwoQubitState, tensor

Branch = Literal["upper", "lower"]

_SQRT_HALF = 1.0 / math.sqrt(2.0)
_PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) * _SQRT_HALF
_PSI_MINUS = np.array([0, 1, -1, 0], dtype=complex) * _SQRT_HALF
_PHI_PLUS.setflags(write=False)
_PSI_MINUS.setflags(write=False)


def _check_theta(theta: float) -> float:
    theta = float(theta)
    if not math.isfinite(theta) or not 0.0 <= theta <= math.pi:
        raise ThetaRangeError(f"theta must lie in [0, pi], got {theta}")
    return theta


def _check_branch(branch: str) -> str:
    if branch not in ("upper", "lower"):
        raise ValueError(f"branch must be 'upper' or 'lower', got {branch!r}")
    return branch


def _gain(theta: float) -> float:
    """Sign factor: +1 for theta below pi/2, -1 from pi/2 on."""
    return 1.0 if theta < 0.5 * math.pi else -1.0


@dataclass(frozen=True)
class QuantumBound:
    """Extremal CHSH values at one angle and the mixing angles reaching them."""

    theta: float
    upper: float
    lower: float
    xi_upper: float
    xi_lower: float


def optimal_xi(theta: float, branch: Branch = "upper") -> float:
    """Mixing angle whose frontier state attains the requested extremum.

    Upper branch: xi = (theta - g(theta) * acos(r)) / 2 with
    r = (1 + sin^2(2 theta))^(-1/2).  The lower branch negates the
    argument of the acos, which carries the opposite sign when solving
    the stationarity condition on that branch:
    xi = (theta + g(theta) * acos(-r)) / 2.  Over the frontier family
    the CHSH value is a pure cosine in 2 xi, so the two branches sit a
    quarter turn apart.  Normalised into [0, 2 pi).
    """
    theta = _check_theta(theta)
    _check_branch(branch)
    r = 1.0 / math.sqrt(1.0 + math.sin(2.0 * theta) ** 2)
    if branch == "upper":
        xi = 0.5 * (theta - _gain(theta) * math.acos(r))
    else:
        xi = 0.5 * (theta + _gain(theta) * math.acos(-r))
    xi %= 2.0 * math.pi
    if xi >= 2.0 * math.pi:  # a tiny negative wraps to the excluded endpoint
        xi = 0.0
    return xi


def quantum_bound(theta: float) -> QuantumBound:
    """Largest and smallest CHSH value any quantum state reaches at theta."""
    theta = _check_theta(theta)
    s2 = math.sin(2.0 * theta)
    arg = 1.0 + 2.0 / (math.cos(4.0 * theta) - 3.0)
    upper = 2.0 * (1.0 / math.sqrt(1.0 + s2 * s2) + _gain(theta) * s2 * math.sqrt(max(arg, 0.0)))
    return QuantumBound(
        theta=theta,
        upper=upper,
        lower=-upper,
        xi_upper=optimal_xi(theta, "upper"),
        xi_lower=optimal_xi(theta, "lower"),
    )


def phi_plus_state() -> TwoQubitState:
    """The Bell state |phi+> = (|00> + |11>) / sqrt(2)."""
    return TwoQubitState.pure(_PHI_PLUS)


def singlet_state() -> TwoQubitState:
    """The Bell state |psi-> = (|01> - |10>) / sqrt(2)."""
    return TwoQubitState.pure(_PSI_MINUS)


def frontier_state(xi: float) -> TwoQubitState:
    """cos(xi)|phi+> + sin(xi)|psi->, maximally entangled for every real xi."""
    xi = float(xi)
    if not math.isfinite(xi):
        raise ValueError(f"xi must be finite, got {xi}")
    return TwoQubitState.pure(math.cos(xi) * _PHI_PLUS + math.sin(xi) * _PSI_MINUS)


def singlet_rotation(xi: float) -> np.ndarray:
    """Qubit-I rotation [[sin xi, -cos xi], [cos xi, sin xi]] (orthogonal)."""
    s, c = math.sin(xi), math.cos(xi)
    return np.array([[s, -c], [c, s]], dtype=complex)


def prepare_from_singlet(xi: float) -> TwoQubitState:
    """Frontier state produced by rotating qubit I of the singlet.

    (U(xi) (x) I)|psi-> reproduces frontier_state(xi) exactly, which is
    how a singlet source reaches every point of the frontier family.
    """
    rotated = tensor(singlet_rotation(xi), IDENTITY2) @ _PSI_MINUS
    return TwoQubitState.pure(rotated)
