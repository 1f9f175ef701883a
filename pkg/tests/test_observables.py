"""Tests for the measurement-settings family and the CHSH operator."""

import math

import numpy as np
import pytest

from qcbounds import (
    ThetaRangeError,
    TwoQubitState,
    chsh_combination,
    chsh_operator,
    chsh_value,
    correlation_quadruple,
    make_settings,
)

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)

THETA_GRID = [0.0, 0.3, math.pi / 4, 1.0, math.pi / 2, 2.0, 3.0, math.pi]


def direction(angle):
    return math.cos(angle) * SZ + math.sin(angle) * SX


def random_state(seed):
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    return TwoQubitState.pure(z / np.linalg.norm(z))


# ---------------------------------------------------------------- construction

def test_theta_validation():
    with pytest.raises(ThetaRangeError):
        make_settings(-0.1)
    with pytest.raises(ThetaRangeError):
        make_settings(math.pi + 0.1)
    with pytest.raises(ThetaRangeError):
        make_settings(float("nan"))
    make_settings(0.0)
    make_settings(math.pi)


@pytest.mark.parametrize("theta", THETA_GRID)
def test_observable_directions(theta):
    """A, a, B, b point along angles 2 theta, 0, theta, 3 theta in the z-x plane."""
    s = make_settings(theta)
    assert np.allclose(s.A, direction(2.0 * theta), atol=1e-15)
    assert np.array_equal(s.a, SZ)
    assert np.allclose(s.B, direction(theta), atol=1e-15)
    assert np.allclose(s.b, direction(3.0 * theta), atol=1e-15)


@pytest.mark.parametrize("theta", THETA_GRID)
def test_observables_square_to_identity(theta):
    s = make_settings(theta)
    for obs in (s.A, s.a, s.B, s.b):
        assert np.allclose(obs @ obs, np.eye(2), atol=1e-14)
        assert np.allclose(obs, obs.conj().T, atol=1e-15)
        eigs = np.linalg.eigvalsh(obs)
        assert np.allclose(eigs, [-1.0, 1.0], atol=1e-14)


def test_setting_pairs_order():
    s = make_settings(0.7)
    pairs = s.setting_pairs()
    assert pairs[0][0] is s.A and pairs[0][1] is s.B
    assert pairs[1][0] is s.A and pairs[1][1] is s.b
    assert pairs[2][0] is s.a and pairs[2][1] is s.B
    assert pairs[3][0] is s.a and pairs[3][1] is s.b


def test_observables_are_frozen():
    s = make_settings(0.7)
    with pytest.raises(ValueError):
        s.A[0, 0] = 2.0


# ---------------------------------------------------------------- CHSH operator

@pytest.mark.parametrize("theta", THETA_GRID)
def test_chsh_operator_matches_kron_oracle(theta):
    s = make_settings(theta)
    want = (
        np.kron(s.A, s.B)
        + np.kron(s.A, s.b)
        + np.kron(s.a, s.B)
        - np.kron(s.a, s.b)
    )
    bell = chsh_operator(s)
    assert bell.settings is s
    assert np.allclose(bell.matrix, want, atol=1e-15)


def test_chsh_operator_is_hermitian_and_traceless():
    for theta in THETA_GRID:
        m = chsh_operator(make_settings(theta)).matrix
        assert np.allclose(m, m.conj().T, atol=1e-14)
        assert abs(m.trace()) < 1e-14


def test_chsh_value_matches_quadratic_form():
    for seed, theta in enumerate(THETA_GRID):
        s = make_settings(theta)
        state = random_state(100 + seed)
        psi = state.amplitudes
        want = float(np.real(psi.conj() @ chsh_operator(s).matrix @ psi))
        assert abs(chsh_value(s, state) - want) < 1e-12


# ---------------------------------------------------------------- correlations

def test_correlation_quadruple_matches_pairwise_expectations():
    for seed, theta in enumerate(THETA_GRID):
        s = make_settings(theta)
        state = random_state(200 + seed)
        psi = state.amplitudes
        quad = correlation_quadruple(s, state)
        for value, (first, second) in zip(quad, s.setting_pairs()):
            op = np.kron(first, second)
            want = float(np.real(psi.conj() @ op @ psi))
            assert abs(value - want) < 1e-12


def test_quadruple_combination_equals_chsh_value():
    for seed, theta in enumerate(THETA_GRID):
        s = make_settings(theta)
        state = random_state(300 + seed)
        quad = correlation_quadruple(s, state)
        assert abs(chsh_combination(quad, 0) - chsh_value(s, state)) < 1e-12


def test_quadruple_entries_lie_in_unit_interval():
    for seed, theta in enumerate(THETA_GRID):
        quad = correlation_quadruple(make_settings(theta), random_state(400 + seed))
        for value in quad:
            assert -1.0 - 1e-12 <= value <= 1.0 + 1e-12
