"""Numerical 1-D LCT integral transform and its quadrature oracles.

The transform acts on uniformly sampled complex signals through the chirp
kernel

    K(t', t) = C exp[(i/c) (t' t - (a t'^2 + d t^2) / 2)]

with parameters (a, b, c, d), ad - bc = 1, in the same convention as the
matrix modules: w' = a w + b t, t' = c w + d t (w the angular-frequency
operator).  The constant C is fixed to the unitary choice

    C = exp(-i (pi/4) sgn(c)) / sqrt(2 pi |c|),

so transforms preserve the L2 norm up to quadrature error; callers that
care about the phase branch should compare up to a constant phase.

The c -> 0 limit (a chirp-scaled delta, not an integral kernel) is rejected
with ``DegenerateKernel`` rather than special-cased.

``dft_oracle`` and ``signal_moments`` are deliberately brute force
(O(n^2) sums straight from the definitions) so they can serve as
independent checks on ``apply_lct``.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    DegenerateKernel,
    DimensionMismatch,
    GridTooNarrow,
    NotSymplectic,
    ParseError,
    ZeroSignal,
)
from .symplectic import BlockLCT, _frozen

DEGENERATE_C = 1e-9
_DET_TOL = 1e-12


@dataclass(frozen=True)
class LCT1D:
    """Scalar LCT parameters with ad - bc = 1 (checked to 1e-12)."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, float(getattr(self, name)))
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > _DET_TOL:
            raise NotSymplectic(abs(det - 1.0), _DET_TOL)

    @property
    def matrix(self) -> np.ndarray:
        """Assembled 2x2 matrix [[a, c], [b, d]], matching the block layout."""
        return np.array([[self.a, self.c], [self.b, self.d]])


def lct1d_from_block(L: BlockLCT) -> LCT1D:
    """Specialize a 1-dimensional BlockLCT to scalar parameters."""
    if L.dim != 1:
        raise DimensionMismatch(f"need a 1-D transform, got dimension {L.dim}")
    return LCT1D(L.a[0, 0], L.b[0, 0], L.c[0, 0], L.d[0, 0])


def fractional_fourier_params(theta: float) -> LCT1D:
    """Fractional Fourier parameters a = d = cos(theta), b = -c = sin(theta).

    theta = pi/2 is the Fourier transform; theta = 0 is the identity (valid
    as a matrix, degenerate for apply_lct); theta = pi is parity.
    """
    return LCT1D(np.cos(theta), np.sin(theta), -np.sin(theta), np.cos(theta))


@dataclass(frozen=True)
class SampledSignal:
    """Uniformly sampled complex signal: values samples[j] at t0 + j dt."""

    t0: float
    dt: float
    samples: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "t0", float(self.t0))
        object.__setattr__(self, "dt", float(self.dt))
        samples = np.asarray(self.samples, dtype=complex)
        if samples.ndim != 1 or samples.size < 2:
            raise DimensionMismatch(f"samples must be a vector of length >= 2, got {samples.shape}")
        if self.dt <= 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        object.__setattr__(self, "samples", _frozen(samples))

    @property
    def n(self) -> int:
        return self.samples.size

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.n)


def _trapezoid_weights(n: int, dt: float) -> np.ndarray:
    w = np.full(n, dt)
    w[0] *= 0.5
    w[-1] *= 0.5
    return w


def lct_kernel(L: LCT1D, t_prime, t):
    """Evaluate the chirp kernel K(t', t); broadcasts over array arguments.

    Raises DegenerateKernel when |c| < 1e-9.
    """
    if abs(L.c) < DEGENERATE_C:
        raise DegenerateKernel(f"|c| = {abs(L.c):.3e} below {DEGENERATE_C:.0e}")
    t_prime = np.asarray(t_prime, dtype=float)
    t = np.asarray(t, dtype=float)
    amp = np.exp(-1j * (np.pi / 4) * np.sign(L.c)) / np.sqrt(2 * np.pi * abs(L.c))
    phase = (t_prime * t - (L.a * t_prime**2 + L.d * t**2) / 2.0) / L.c
    return amp * np.exp(1j * phase)


def apply_lct(L: LCT1D, s: SampledSignal, out_grid=None) -> SampledSignal:
    """Transform a sampled signal by direct quadrature of the kernel integral.

    The integral is approximated with trapezoid end-weights on the stored
    grid; the input should decay toward the grid edges (not enforced).
    ``out_grid`` is (t0, dt, count) for the output; by default the input
    grid is mirrored, though the transform generally changes the natural
    support.
    """
    if out_grid is None:
        out_grid = (s.t0, s.dt, s.n)
    t0_out, dt_out, n_out = out_grid
    n_out = int(n_out)
    t_out = t0_out + dt_out * np.arange(n_out)
    t_in = s.times
    kernel = lct_kernel(L, t_out[:, None], t_in[None, :])
    weighted = _trapezoid_weights(s.n, s.dt) * s.samples
    return SampledSignal(t0_out, dt_out, kernel @ weighted)


@dataclass(frozen=True)
class HermiteState:
    """Hermite-Gaussian state label: order n, means (T, Omega), frequency deviation b_dev.

    The frequency variance is B = b_dev^2 and the time variance A = 1/(4B),
    so the n = 0 member is a minimum-uncertainty Gaussian.
    """

    n: int
    T: float
    Omega: float
    b_dev: float

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("order n must be nonnegative")
        if self.b_dev <= 0:
            raise ValueError("b_dev must be positive")

    @property
    def B(self) -> float:
        return self.b_dev**2

    @property
    def A(self) -> float:
        return 1.0 / (4.0 * self.B)


def _hermite_poly(n: int, xi: np.ndarray) -> np.ndarray:
    """Physicists' Hermite polynomial by the H_{k+1} = 2 xi H_k - 2k H_{k-1} recurrence."""
    h_prev = np.ones_like(xi)
    if n == 0:
        return h_prev
    h = 2.0 * xi
    for k in range(1, n):
        h, h_prev = 2.0 * xi * h - 2.0 * k * h_prev, h
    return h


def hermite_state(state: HermiteState, grid) -> SampledSignal:
    """Sample the orthonormal Hermite-Gaussian wavefunction on (t0, dt, count).

    psi_n(t) = (2B/pi)^(1/4) (2^n n!)^(-1/2) H_n(sqrt(2B) (t - T))
               exp(-B (t - T)^2 - i Omega t)

    The grid must span at least +-4 standard deviations of the order-n state
    around T, else GridTooNarrow.
    """
    t0, dt, count = grid
    count = int(count)
    if count < 2 or dt <= 0:
        raise ValueError("grid needs dt > 0 and count >= 2")
    t = t0 + dt * np.arange(count)
    sigma = math.sqrt((2 * state.n + 1) * state.A)
    if t[0] > state.T - 4 * sigma or t[-1] < state.T + 4 * sigma:
        raise GridTooNarrow(
            f"grid [{t[0]:g}, {t[-1]:g}] must cover {state.T:g} +- {4 * sigma:g}"
        )
    B = state.B
    xi = np.sqrt(2 * B) * (t - state.T)
    norm = (2 * B / np.pi) ** 0.25 / math.sqrt(2.0**state.n * math.factorial(state.n))
    values = norm * _hermite_poly(state.n, xi) * np.exp(-B * (t - state.T) ** 2 - 1j * state.Omega * t)
    return SampledSignal(t0, dt, values)


def dft_oracle(s: SampledSignal) -> SampledSignal:
    """Brute-force discrete Fourier transform onto the dual frequency grid.

    Psi(w_k) = (dt / sqrt(2 pi)) sum_j psi(t_j) exp(-i w_k t_j), with
    w_k = 2 pi k / (n dt) arranged ascending about zero.  Parseval holds at
    quadrature accuracy.  O(n^2) on purpose: this is the oracle path and
    stays independent of apply_lct.
    """
    n = s.n
    omega = 2 * np.pi * np.fft.fftshift(np.fft.fftfreq(n, d=s.dt))
    kernel = np.exp(-1j * omega[:, None] * s.times[None, :])
    values = (s.dt / np.sqrt(2 * np.pi)) * (kernel @ s.samples)
    return SampledSignal(omega[0], omega[1] - omega[0], values)


class SignalMoments(NamedTuple):
    T: float
    Omega: float
    A: float
    B: float


def signal_moments(s: SampledSignal) -> SignalMoments:
    """Time and frequency means and variances of a sampled signal.

    Time moments are trapezoid sums of the normalized density |psi|^2;
    frequency moments come the same way from the dft_oracle density on the
    dual grid.  The frequency axis follows the w = +i d/dt operator
    convention, whose eigenfunction at w is exp(-i w t): the mean is the
    negative of the e^{-iwt}-kernel grid mean (variances are unaffected).
    The signal is normalized internally and must decay at the grid edges
    for the results to mean anything.
    """
    t = s.times
    density_t = np.abs(s.samples) ** 2 * _trapezoid_weights(s.n, s.dt)
    mass_t = float(density_t.sum())
    if mass_t <= 0.0 or not np.isfinite(mass_t):
        raise ZeroSignal("signal has no L2 mass")
    T = float((t * density_t).sum() / mass_t)
    A = float(((t - T) ** 2 * density_t).sum() / mass_t)

    spectrum = dft_oracle(s)
    w = -spectrum.times
    density_w = np.abs(spectrum.samples) ** 2 * _trapezoid_weights(spectrum.n, spectrum.dt)
    mass_w = float(density_w.sum())
    if mass_w <= 0.0 or not np.isfinite(mass_w):
        raise ZeroSignal("spectrum has no L2 mass")
    Omega = float((w * density_w).sum() / mass_w)
    B = float(((w - Omega) ** 2 * density_w).sum() / mass_w)
    return SignalMoments(T, Omega, A, B)


def read_signal_csv(path) -> SampledSignal:
    """Load a `t,re,im` CSV; the time column must be uniform to 1e-9 dt."""
    try:
        with open(path) as fh:
            header = fh.readline().strip()
            if header.replace(" ", "") != "t,re,im":
                raise ParseError(f"expected header 't,re,im', got {header!r}")
            data = np.loadtxt(fh, delimiter=",", ndmin=2)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise ParseError(f"malformed CSV {path}: {exc}") from exc
    if data.shape[1] != 3 or data.shape[0] < 2:
        raise ParseError(f"need >= 2 rows of t,re,im in {path}, got shape {data.shape}")
    t = data[:, 0]
    diffs = np.diff(t)
    dt = float(np.median(diffs))
    if dt <= 0:
        raise ParseError(f"time column must increase in {path}")
    if np.max(np.abs(diffs - dt)) > 1e-9 * dt:
        raise ParseError(f"non-uniform time grid in {path}")
    return SampledSignal(float(t[0]), dt, data[:, 1] + 1j * data[:, 2])


def write_signal_csv(s: SampledSignal, path) -> None:
    with open(path, "w") as fh:
        fh.write("t,re,im\n")
        for t, z in zip(s.times, s.samples):
            fh.write(f"{t:.17g},{z.real:.17g},{z.imag:.17g}\n")
