"""Measurement settings and the CHSH correlation operator.

All four observables are +/-1-valued spin measurements in the z-x
plane, parametrised by one working angle theta in [0, pi]:

    A = cos(2 theta) sz + sin(2 theta) sx      (qubit I)
    a = sz                                     (qubit I)
    B = cos(theta) sz + sin(theta) sx          (qubit II)
    b = cos(3 theta) sz + sin(3 theta) sx      (qubit II)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ThetaRangeError
from .linalg import TwoQubitState, expectation, pauli, tensor
from .membership import CorrelationQuadruple


def _direction_observable(angle: float) -> np.ndarray:
    """cos(angle) sz + sin(angle) sx, a unit spin direction in the z-x plane."""
    obs = math.cos(angle) * pauli("z") + math.sin(angle) * pauli("x")
    obs.setflags(write=False)
    return obs


class MeasurementSettings:
    """The four observables at one working angle, built once and reused.

    Attributes A and a act on qubit I, B and b on qubit II.  The four
    tensor products A(x)B, A(x)b, a(x)B, a(x)b and their CHSH sum are
    precomputed here so repeated evaluations never rebuild them.
    """

    __slots__ = ("theta", "A", "a", "B", "b", "_pair_ops", "_bell")

    def __init__(self, theta: float):
        theta = float(theta)
        if not math.isfinite(theta) or not 0.0 <= theta <= math.pi:
            raise ThetaRangeError(f"theta must lie in [0, pi], got {theta}")
        self.theta = theta
        self.A = _direction_observable(2.0 * theta)
        self.a = pauli("z")
        self.B = _direction_observable(theta)
        self.b = _direction_observable(3.0 * theta)
        self._pair_ops = tuple(
            tensor(first, second) for first, second in self.setting_pairs()
        )
        bell = self._pair_ops[0] + self._pair_ops[1] + self._pair_ops[2] - self._pair_ops[3]
        bell.setflags(write=False)
        self._bell = bell

    def setting_pairs(self):
        """The four (qubit I, qubit II) observable pairs in CHSH order."""
        return ((self.A, self.B), (self.A, self.b), (self.a, self.B), (self.a, self.b))


def make_settings(theta: float) -> MeasurementSettings:
    """Measurement settings for a working angle theta in [0, pi] (radians)."""
    return MeasurementSettings(theta)


@dataclass(frozen=True)
class BellOperator:
    """The CHSH combination A(x)B + A(x)b + a(x)B - a(x)b as a 4x4 matrix."""

    settings: MeasurementSettings
    matrix: np.ndarray


def chsh_operator(settings: MeasurementSettings) -> BellOperator:
    """CHSH operator for the given settings (Hermitian, traceless)."""
    return BellOperator(settings=settings, matrix=settings._bell)


def chsh_value(settings: MeasurementSettings, state: TwoQubitState) -> float:
    """Expectation of the CHSH operator, in [-2 sqrt(2), 2 sqrt(2)]."""
    return expectation(settings._bell, state)


def correlation_quadruple(settings: MeasurementSettings, state: TwoQubitState) -> CorrelationQuadruple:
    """The four correlations (<AB>, <Ab>, <aB>, <ab>) in the given state."""
    values = tuple(expectation(op, state) for op in settings._pair_ops)
    return CorrelationQuadruple(*values)
