"""Acceptance gate: ten end-to-end criteria with pinned tolerances.

Each test prints one [PASS]/[FAIL] line; pytest is configured with -rP
so the lines appear in the summary of a normal `pytest -v` run.
"""

import math
import subprocess
import sys

import numpy as np

from qcbounds import (
    RngStream,
    ShotPlan,
    chsh_operator,
    chsh_to_ch,
    chsh_value,
    ch_value,
    classify,
    correlation_quadruple,
    frontier_state,
    haar_random_pure,
    hermitian_eigen_extrema,
    is_classical,
    is_quantum_attainable,
    make_settings,
    optimal_xi,
    prepare_from_singlet,
    quantum_bound,
    random_density,
    random_scan,
    run_point,
    satisfies_tsirelson,
    RegionLabel,
)

ROOT8 = 2.0 * math.sqrt(2.0)
THETA_GRID_181 = np.linspace(0.0, math.pi, 181)

# master seed for every randomised criterion; the scan closeness check
# in criterion 4 is a tail event per seed, so the seed is part of the
# frozen test definition
MASTER_SEED = 95


def _report(name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, line


def test_criterion_01_bound_spot_values():
    worst = max(
        abs(quantum_bound(0.0).upper - 2.0),
        abs(quantum_bound(math.pi / 4).upper - ROOT8),
        abs(quantum_bound(math.pi / 2).upper - 2.0),
    )
    _report(
        "criterion 1: bound spot values at theta = 0, pi/4, pi/2",
        worst < 1e-12,
        f"worst deviation {worst:.2e}",
    )


def test_criterion_02_frontier_attainment():
    worst = 0.0
    for theta in THETA_GRID_181:
        theta = float(theta)
        settings = make_settings(theta)
        bound = quantum_bound(theta)
        up = chsh_value(settings, frontier_state(optimal_xi(theta, "upper")))
        lo = chsh_value(settings, frontier_state(optimal_xi(theta, "lower")))
        worst = max(worst, abs(up - bound.upper), abs(lo - bound.lower))
    _report(
        "criterion 2: frontier states attain both bounds on a 181-point grid",
        worst < 1e-9,
        f"worst gap {worst:.2e}",
    )


def test_criterion_03_eigenvalue_oracle():
    worst = 0.0
    for theta in THETA_GRID_181:
        settings = make_settings(float(theta))
        _, top = hermitian_eigen_extrema(chsh_operator(settings).matrix)
        worst = max(worst, abs(top - quantum_bound(float(theta)).upper))
    _report(
        "criterion 3: largest operator eigenvalue equals the closed-form bound",
        worst < 1e-9,
        f"worst deviation {worst:.2e}",
    )


def test_criterion_04_random_scan_no_excess_and_tight():
    excess = 0.0
    for node, theta in enumerate(np.linspace(0.0, math.pi, 19)):
        theta = float(theta)
        bound = quantum_bound(theta)
        pure = random_scan(theta, 100_000, "pure", RngStream(MASTER_SEED, node))
        mixed = random_scan(theta, 10_000, "mixed", RngStream(MASTER_SEED, 1000 + node))
        for result in (pure, mixed):
            excess = max(excess, result.maximum - bound.upper, bound.lower - result.minimum)
    tight = random_scan(math.pi / 4, 100_000, "pure", RngStream(MASTER_SEED, 2000))
    excess = max(excess, tight.maximum - ROOT8)
    deficit = ROOT8 - tight.maximum
    _report(
        "criterion 4: random-state scan never exceeds the bounds and is tight at pi/4",
        excess <= 1e-9 and deficit <= 0.02,
        f"worst excess {excess:.2e}, deficit at pi/4 {deficit:.4f}",
    )


def test_criterion_05_singlet_preparation_identity():
    worst = 0.0
    for xi in np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False):
        a = prepare_from_singlet(float(xi)).amplitudes
        b = frontier_state(float(xi)).amplitudes
        worst = max(worst, abs(abs(np.vdot(a, b)) ** 2 - 1.0))
    _report(
        "criterion 5: rotating the singlet reproduces the frontier family",
        worst < 1e-10,
        f"worst fidelity deficit {worst:.2e}",
    )


def test_criterion_06_ch_affine_correspondence():
    rng = RngStream(MASTER_SEED, 3000)
    worst = 0.0
    for case in range(100):
        theta = float(rng.uniform()) * math.pi
        settings = make_settings(theta)
        if case % 2 == 0:
            state = haar_random_pure(rng)
        else:
            state = random_density(1 + case % 4, rng)
        got = ch_value(settings, state)
        want = chsh_to_ch(chsh_value(settings, state))
        worst = max(worst, abs(got - want))
    endpoints = chsh_to_ch(2.0) == 0.0 and chsh_to_ch(ROOT8) == (math.sqrt(2.0) - 1.0) / 2.0
    _report(
        "criterion 6: probability form equals (CHSH - 2)/4 with exact endpoints",
        worst < 1e-10 and endpoints,
        f"worst deviation {worst:.2e}",
    )


def test_criterion_07_membership_nesting_and_witnesses():
    rng = RngStream(MASTER_SEED, 4000)
    quads = 2.0 * rng.uniform((100_000, 4)) - 1.0
    violations = 0
    for quad in quads:
        quad = tuple(quad)
        quantum = is_quantum_attainable(quad)
        if is_classical(quad) and not quantum:
            violations += 1
        if quantum and not satisfies_tsirelson(quad):
            violations += 1
    witnesses = (
        classify((0.9, 0.9, 0.9, 0.0)) is RegionLabel.SUPERQUANTUM_WITHIN_TSIRELSON
        and classify((1.0, 1.0, 1.0, -1.0)) is RegionLabel.BEYOND_TSIRELSON
    )
    _report(
        "criterion 7: region nesting holds with both witness points labelled",
        violations == 0 and witnesses,
        f"{violations} nesting violations in 100000 quadruples",
    )


def test_criterion_08_state_quadruples_are_quantum_attainable():
    rng = RngStream(MASTER_SEED, 5000)
    failures = 0
    for case in range(10_000):
        theta = float(rng.uniform()) * math.pi
        if case % 2 == 0:
            state = haar_random_pure(rng)
        else:
            state = random_density(1 + case % 4, rng)
        quad = correlation_quadruple(make_settings(theta), state)
        if not is_quantum_attainable(quad):
            failures += 1
    _report(
        "criterion 8: 10000 state-generated quadruples pass the arcsin test",
        failures == 0,
        f"{failures} failures",
    )


def test_criterion_09_werner_linearity_and_shot_statistics():
    ideal = run_point(math.pi / 4, epsilon=0.1).chsh_ideal
    linear = abs(ideal - 0.9 * ROOT8) < 1e-10

    big = run_point(math.pi / 4, plan=ShotPlan(1_000_000, seed=MASTER_SEED))
    close = abs(big.chsh_est - ROOT8) <= 5.0 * big.chsh_err

    estimates, errors = [], []
    for seed in range(100):
        record = run_point(math.pi / 4, plan=ShotPlan(10_000, seed=seed))
        estimates.append(record.chsh_est)
        errors.append(record.chsh_err)
    spread = float(np.std(estimates, ddof=1))
    propagated = float(np.mean(errors))
    ratio = spread / propagated
    calibrated = 1.0 / 1.5 <= ratio <= 1.5
    _report(
        "criterion 9: noise scales the ideal value and errors are calibrated",
        linear and close and calibrated,
        f"ideal dev {abs(ideal - 0.9 * ROOT8):.1e}, "
        f"big-run pull {abs(big.chsh_est - ROOT8) / big.chsh_err:.2f} sigma, "
        f"spread/propagated {ratio:.3f}",
    )


def test_criterion_10_cli_byte_determinism():
    commands = [
        ("simulate", "--theta", "0.7854", "--shots", "5000", "--seed", "11"),
        ("trace-bound", "--points", "9", "--shots", "500", "--seed", "7"),
    ]
    identical = True
    for command in commands:
        argv = [sys.executable, "-m", "qcbounds", *command]
        first = subprocess.run(argv, capture_output=True)
        second = subprocess.run(argv, capture_output=True)
        if not (
            first.returncode == second.returncode == 0
            and first.stdout
            and first.stdout == second.stdout
        ):
            identical = False
    _report(
        "criterion 10: repeated CLI invocations are byte-identical",
        identical,
    )
