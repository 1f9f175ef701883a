"""Small dense linear-algebra layer for two-qubit problems.

Matrices are plain complex numpy arrays in the computational basis
|00>, |01>, |10>, |11>, with qubit I as the left Kronecker factor.
States are wrapped in :class:`TwoQubitState` so pure vectors and
density matrices travel through the same interfaces.  Randomness goes
through :class:`RngStream`, which is fully determined by a
(seed, stream) pair.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    ConvergenceError,
    ImaginaryExpectationError,
    InvalidRankError,
    NonHermitianError,
)

HERMITIAN_ATOL = 1e-12
_STATE_HERM_ATOL = 1e-10
_IMAG_TOL = 1e-10
_NORM_ATOL = 1e-10
_EIG_FLOOR = -1e-9

_JACOBI_OFF_TOL = 1e-12
_JACOBI_MAX_SWEEPS = 100

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}
IDENTITY2 = np.eye(2, dtype=complex)
IDENTITY4 = np.eye(4, dtype=complex)
for _m in (*_PAULI.values(), IDENTITY2, IDENTITY4):
    _m.setflags(write=False)


def pauli(axis: str) -> np.ndarray:
    """Return the Pauli matrix sigma_axis for axis in {'x', 'y', 'z'}."""
    try:
        return _PAULI[axis]
    except KeyError:
        raise ValueError(f"unknown Pauli axis {axis!r}, expected 'x', 'y' or 'z'") from None


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product a (x) b, with a acting on qubit I."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def require_hermitian(op: np.ndarray, atol: float = HERMITIAN_ATOL) -> np.ndarray:
    """Check that op is finite and Hermitian within atol, return it as complex."""
    op = np.asarray(op, dtype=complex)
    if not np.all(np.isfinite(op)):
        raise NonHermitianError("operator contains NaN or Inf entries")
    if np.abs(op - op.conj().T).max() > atol:
        raise NonHermitianError(f"operator is not Hermitian within {atol:g}")
    return op


class TwoQubitState:
    """A pure state vector or a density matrix of two qubits.

    Construct through :meth:`pure` or :meth:`mixed`; both validate the
    input (normalisation, Hermiticity, positivity) and freeze the
    stored arrays.
    """

    __slots__ = ("_amps", "_rho")

    def __init__(self, amps: np.ndarray | None, rho: np.ndarray | None):
        self._amps = amps
        self._rho = rho

    @classmethod
    def pure(cls, amplitudes) -> TwoQubitState:
        """State |psi> from four amplitudes (must have unit norm)."""
        amps = np.asarray(amplitudes, dtype=complex).reshape(4).copy()
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes contain NaN or Inf")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > _NORM_ATOL:
            raise ValueError(f"state vector norm {norm} is not 1 within {_NORM_ATOL:g}")
        amps.setflags(write=False)
        return cls(amps, None)

    @classmethod
    def mixed(cls, rho) -> TwoQubitState:
        """State from a 4x4 density matrix (Hermitian, unit trace, positive)."""
        rho = np.asarray(rho, dtype=complex)
        if rho.shape != (4, 4):
            raise ValueError(f"density matrix must be 4x4, got {rho.shape}")
        rho = require_hermitian(rho, atol=_STATE_HERM_ATOL)
        rho = 0.5 * (rho + rho.conj().T)
        trace = float(rho.trace().real)
        if abs(trace - 1.0) > _NORM_ATOL:
            raise ValueError(f"density matrix trace {trace} is not 1 within {_NORM_ATOL:g}")
        lowest, _ = hermitian_eigen_extrema(rho)
        if lowest < _EIG_FLOOR:
            raise ValueError(f"density matrix eigenvalue {lowest:.3e} below {_EIG_FLOOR:g}")
        rho.setflags(write=False)
        return cls(None, rho)

    @property
    def is_pure(self) -> bool:
        return self._amps is not None

    @property
    def amplitudes(self) -> np.ndarray | None:
        """Amplitude vector for pure states, None for mixed ones."""
        return self._amps

    def density_matrix(self) -> np.ndarray:
        """The 4x4 density matrix (|psi><psi| for pure states, cached)."""
        if self._rho is None:
            rho = np.outer(self._amps, self._amps.conj())
            rho.setflags(write=False)
            self._rho = rho
        return self._rho


def expectation(op: np.ndarray, state: TwoQubitState) -> float:
    """Real expectation value of a Hermitian operator in the given state.

    Pure states use <psi|op|psi>, mixed states Tr(rho op).  An imaginary
    residue of 1e-10 or more is treated as an internal error rather than
    being silently discarded.
    """
    op = require_hermitian(op)
    if state.is_pure:
        psi = state.amplitudes
        value = complex(np.vdot(psi, op @ psi))
    else:
        value = complex(np.einsum("ij,ji->", state.density_matrix(), op))
    if abs(value.imag) >= _IMAG_TOL:
        raise ImaginaryExpectationError(f"expectation has imaginary part {value.imag:.3e}")
    return float(value.real)


def _jacobi_eigenvalues(sym: np.ndarray) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by the cyclic Jacobi method.

    Sweeps Givens rotations over every upper-triangle entry until the
    off-diagonal Frobenius norm falls below 1e-12, with a hard cap of
    100 sweeps.
    """
    a = np.array(sym, dtype=float)
    n = a.shape[0]
    for _ in range(_JACOBI_MAX_SWEEPS):
        if np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2)) < _JACOBI_OFF_TOL:
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-36 * abs(diff):
                    t = apq / diff
                else:
                    phi = diff / (2.0 * apq)
                    t = 1.0 / (abs(phi) + np.sqrt(phi * phi + 1.0))
                    if phi < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
    if np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2)) < _JACOBI_OFF_TOL:
        return np.sort(np.diag(a))
    raise ConvergenceError(f"Jacobi sweep limit ({_JACOBI_MAX_SWEEPS}) reached")


def hermitian_eigen_extrema(op: np.ndarray) -> tuple[float, float]:
    """(lowest, highest) eigenvalue of a Hermitian matrix.

    Runs the Jacobi solver on the real symmetric embedding
    [[X, -Y], [Y, X]] of op = X + iY, whose spectrum is that of op with
    every eigenvalue doubled, so the solver never touches complex
    arithmetic.
    """
    op = require_hermitian(op, atol=_STATE_HERM_ATOL)
    x, y = op.real, op.imag
    embedded = np.block([[x, -y], [y, x]])
    embedded = 0.5 * (embedded + embedded.T)
    eigs = _jacobi_eigenvalues(embedded)
    return float(eigs[0]), float(eigs[-1])


class RngStream:
    """Deterministic random stream keyed by a (seed, stream) pair.

    The same pair always reproduces the same sample sequence, and
    distinct stream ids derived from one master seed give independent
    streams.  Gaussian variates come from the stream's uniform output
    through the Box-Muller transform, two uniforms per variate, so
    batched and one-at-a-time draws walk the stream identically.
    """

    def __init__(self, seed: int, stream: int = 0):
        if seed < 0 or stream < 0:
            raise ValueError("seed and stream id must be non-negative integers")
        self.seed = int(seed)
        self.stream = int(stream)
        sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream,))
        self._gen = np.random.Generator(np.random.PCG64(sequence))

    def uniform(self, shape: int | tuple[int, ...] | None = None):
        """Uniform float64 samples in [0, 1)."""
        return self._gen.random(shape)

    def complex_normals(self, shape: int | tuple[int, ...]) -> np.ndarray:
        """Standard complex Gaussians x + iy with x, y ~ N(0, 1).

        Box-Muller: r = sqrt(-2 ln(1 - u1)), angle = 2 pi u2.
        """
        shape = (shape,) if isinstance(shape, int) else tuple(shape)
        u = self._gen.random(shape + (2,))
        radius = np.sqrt(-2.0 * np.log1p(-u[..., 0]))
        angle = 2.0 * np.pi * u[..., 1]
        return radius * np.cos(angle) + 1j * radius * np.sin(angle)

    def integers(self, low: int, high: int, size=None):
        """Uniform integers in [low, high), numpy half-open convention."""
        return self._gen.integers(low, high, size=size)

    def multinomial(self, n: int, pvals) -> np.ndarray:
        """Counts of n independent draws from a categorical distribution."""
        return self._gen.multinomial(n, pvals)


def haar_random_pure(rng: RngStream) -> TwoQubitState:
    """Haar-uniform pure two-qubit state (normalised complex Gaussians)."""
    z = rng.complex_normals(4)
    return TwoQubitState.pure(z / np.linalg.norm(z))


def random_density(rank: int, rng: RngStream) -> TwoQubitState:
    """Random density matrix G G^dag / Tr(G G^dag) with G complex Gaussian 4 x rank."""
    if not 1 <= rank <= 4:
        raise InvalidRankError(f"rank must be in 1..4, got {rank}")
    g = rng.complex_normals((4, rank))
    rho = g @ g.conj().T
    return TwoQubitState.mixed(rho / rho.trace().real)
