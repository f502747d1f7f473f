"""Dispersion data of Hermite-Gaussian states and reduced-operator transforms.

A ``DispersionSpec`` holds phase-space means (P, X) and window matrices
(a_win, b_win) with a_win b_win = I/2.  The derived dispersion matrices are
A = a_win^T eta a_win and B = b_win^T eta b_win (coordinate and momentum
variance data; in 1-D these are the scalars with A B = 1/4).

Windows are restricted to symmetric positive-definite matrices commuting
with eta.  Commutation with the metric is what makes the derived dispersion
matrices symmetric and the reduced transformation matrix land in the
pseudo-symplectic group for any pair of valid specs.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidDispersion, MetricMismatch, NotIsodispersion, NotSymplectic, ParseError
from .liealg import is_ilct_matrix, isodispersion_residual
from .metric import Metric, Signature
from .symplectic import (
    DEFAULT_TOL,
    BlockLCT,
    InhomogeneousLCT,
    PhaseVector,
    _frozen,
    _maxabs,
    _square,
    _vector,
    apply,
    symplectic_residual,
)


@dataclass(frozen=True)
class DispersionSpec:
    """Means and window matrices of a Hermite-Gaussian family; build via make_dispersion."""

    metric: Metric
    P: np.ndarray
    X: np.ndarray
    a_win: np.ndarray
    b_win: np.ndarray

    def __post_init__(self):
        n = self.metric.dim
        object.__setattr__(self, "P", _frozen(_vector(self.P, n, "P")))
        object.__setattr__(self, "X", _frozen(_vector(self.X, n, "X")))
        object.__setattr__(self, "a_win", _frozen(_square(self.a_win, n, "a_win")))
        object.__setattr__(self, "b_win", _frozen(_square(self.b_win, n, "b_win")))

    @property
    def A(self) -> np.ndarray:
        """Coordinate dispersion matrix a_win^T eta a_win."""
        eta = self.metric.matrix
        return self.a_win.T @ eta @ self.a_win

    @property
    def B(self) -> np.ndarray:
        """Momentum dispersion matrix b_win^T eta b_win."""
        eta = self.metric.matrix
        return self.b_win.T @ eta @ self.b_win


def dispersion_product_residual(d: DispersionSpec) -> float:
    """Max-norm of a_win b_win - I/2."""
    n = d.metric.dim
    return _maxabs(d.a_win @ d.b_win - 0.5 * np.eye(n))


def _check_window(w: np.ndarray, eta: np.ndarray, name: str, tol: float):
    if _maxabs(w - w.T) > tol:
        raise InvalidDispersion(f"{name} must be symmetric (residual {_maxabs(w - w.T):.3e})")
    if _maxabs(w @ eta - eta @ w) > tol:
        raise InvalidDispersion(f"{name} must commute with the metric")
    evals = np.linalg.eigvalsh(0.5 * (w + w.T))
    if evals.min() <= tol:
        raise InvalidDispersion(f"{name} must be positive definite (min eigenvalue {evals.min():.3e})")


def make_dispersion(P, X, a_win, b_win, metric: Metric, tol: float = DEFAULT_TOL) -> DispersionSpec:
    """Validate the window domain (symmetric, positive, eta-commuting, product I/2)."""
    spec = DispersionSpec(metric, P, X, a_win, b_win)
    eta = metric.matrix
    _check_window(spec.a_win, eta, "a_win", tol)
    _check_window(spec.b_win, eta, "b_win", tol)
    prod = dispersion_product_residual(spec)
    if prod > tol:
        raise InvalidDispersion(f"a_win b_win - I/2 residual {prod:.3e} exceeds tol {tol:.1e}")
    return spec


def transform_dispersion_matrices(L, din: DispersionSpec, tol: float = DEFAULT_TOL):
    """Dispersion-matrix transformation law for isodispersion transforms.

    Returns (A', B') with B' = a B a^T + b A b^T and A' = c B c^T + d A d^T
    (row index of each block is the primed index).  This is plain variance
    propagation for states with vanishing symmetrized p-x covariance, which
    is exactly what the quadrature oracle measures in 1-D.
    """
    if isinstance(L, InhomogeneousLCT):
        L = L.lct
    if L.metric != din.metric:
        raise MetricMismatch("transform and dispersion spec use different metrics")
    iso = isodispersion_residual(L.matrix, L.metric)
    if iso > tol:
        raise NotIsodispersion(f"isodispersion residual {iso:.3e} exceeds tol {tol:.1e}")
    A, B = din.A, din.B
    B_out = L.a @ B @ L.a.T + L.b @ A @ L.b.T
    A_out = L.c @ B @ L.c.T + L.d @ A @ L.d.T
    return A_out, B_out


def _window_from_dispersion(D: np.ndarray, metric: Metric, name: str) -> np.ndarray:
    """Recover the SPD eta-commuting window w with w eta w = D (i.e. w = sqrt(eta D))."""
    eta = metric.matrix
    S = eta @ D
    if _maxabs(S - S.T) > 1e-9:
        raise InvalidDispersion(
            f"{name}: transformed dispersion does not commute with the metric "
            f"(residual {_maxabs(S - S.T):.3e}); no window representation exists"
        )
    evals, evecs = np.linalg.eigh(0.5 * (S + S.T))
    if evals.min() <= 0:
        raise InvalidDispersion(f"{name}: eta-weighted dispersion not positive definite")
    return evecs @ np.diag(np.sqrt(evals)) @ evecs.T


def ilct_transform_dispersion(L, din: DispersionSpec, tol: float = DEFAULT_TOL) -> DispersionSpec:
    """Transport a dispersion spec through an isodispersion transform.

    Means move like a phase vector; dispersion matrices follow
    ``transform_dispersion_matrices``.  The result is rebuilt from recovered
    window matrices, so the output must still satisfy a'_win b'_win = I/2:
    if the transform drives the state out of the zero-covariance family
    (possible for unequal input dispersions), InvalidDispersion is raised
    and only the matrix-level law applies.
    """
    A_out, B_out = transform_dispersion_matrices(L, din, tol)
    means = apply(L, PhaseVector(din.P, din.X))
    metric = din.metric
    a_out = _window_from_dispersion(A_out, metric, "a_win'")
    b_out = _window_from_dispersion(B_out, metric, "b_win'")
    return make_dispersion(means.p, means.x, a_out, b_out, metric, tol=max(tol, 1e-9))


@dataclass(frozen=True)
class ReducedLCT:
    """Transformation matrix of mean-subtracted, deviation-rescaled operators."""

    metric: Metric
    Pi: np.ndarray
    Xi: np.ndarray
    Theta: np.ndarray
    Lambda: np.ndarray

    def __post_init__(self):
        n = self.metric.dim
        for name in ("Pi", "Xi", "Theta", "Lambda"):
            object.__setattr__(self, name, _frozen(_square(getattr(self, name), n, name)))

    @property
    def matrix(self) -> np.ndarray:
        return np.block([[self.Pi, self.Xi], [self.Theta, self.Lambda]])


def reduced_matrix(L, din: DispersionSpec, dout: DispersionSpec = None,
                   tol: float = DEFAULT_TOL) -> ReducedLCT:
    """Reduced-operator transformation matrix
    [[Pi, Xi], [Theta, Lambda]] = 2 diag(b, a) M diag(a', b').

    ``dout`` defaults to ``ilct_transform_dispersion(L, din)`` when L is an
    isodispersion transform; otherwise it must be supplied.  Any constant
    shifts (K, Y) attached to L are ignored: translations do not touch the
    reduced law.  The result always satisfies the pseudo-symplectic
    condition and is validated against it.
    """
    if isinstance(L, InhomogeneousLCT):
        L = L.lct
    if L.metric != din.metric:
        raise MetricMismatch("transform and input dispersion use different metrics")
    if dout is None:
        if not is_ilct_matrix(L.matrix, L.metric, tol):
            raise NotIsodispersion(
                "default output dispersion only exists for isodispersion transforms; "
                "supply dout explicitly"
            )
        dout = ilct_transform_dispersion(L, din, tol)
    if dout.metric != din.metric:
        raise MetricMismatch("input and output dispersion use different metrics")
    aw, bw = din.a_win, din.b_win
    awp, bwp = dout.a_win, dout.b_win
    red = ReducedLCT(
        L.metric,
        Pi=2.0 * bw @ L.a @ awp,
        Xi=2.0 * bw @ L.c @ bwp,
        Theta=2.0 * aw @ L.b @ awp,
        Lambda=2.0 * aw @ L.d @ bwp,
    )
    residual = symplectic_residual(red.matrix, L.metric)
    if residual > max(tol, 1e-9):
        raise NotSymplectic(residual, max(tol, 1e-9))
    return red


def dispersion_to_json_dict(d: DispersionSpec) -> dict:
    return {
        "signature": d.metric.signature.to_json_dict(),
        "P": d.P.tolist(),
        "X": d.X.tolist(),
        "a_win": d.a_win.tolist(),
        "b_win": d.b_win.tolist(),
    }


def dispersion_from_json_dict(data, metric: Metric = None,
                              tol: float = DEFAULT_TOL) -> DispersionSpec:
    """Parse a dispersion spec; the metric comes from an embedded signature or the caller."""
    try:
        if metric is None:
            metric = Metric(Signature.from_json_dict(data["signature"]))
        return make_dispersion(data["P"], data["X"], data["a_win"], data["b_win"], metric, tol)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad dispersion object: {exc}") from exc
