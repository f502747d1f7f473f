"""Block-matrix LCTs over a pseudo-Euclidean metric.

Conventions locked for the whole package:

* a ``BlockLCT`` acts as p' = a.p + b.x, x' = c.p + d.x;
* the assembled 2N x 2N matrix is M = [[a, c], [b, d]] (a top-left, c
  top-right) and must satisfy M^T Omega M = Omega with
  Omega = [[0, eta], [-eta, 0]];
* ``compose(second, first)`` multiplies assembled matrices M2 @ M1.  For
  commuting blocks (every 1-D case) this coincides with applying ``first``
  and then ``second``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    AxisSignatureMismatch,
    ConstraintViolated,
    DimensionMismatch,
    MetricMismatch,
    NotPseudoOrthogonal,
    NotSymplectic,
    ParseError,
)
from .metric import Metric, Signature, omega_matrix

DEFAULT_TOL = 1e-9


def _maxabs(x) -> float:
    return float(np.max(np.abs(x))) if np.size(x) else 0.0


def _square(x, n: int, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.shape != (n, n):
        raise DimensionMismatch(f"{name} must be {n}x{n}, got {arr.shape}")
    return arr


def _vector(x, n: int, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.shape != (n,):
        raise DimensionMismatch(f"{name} must have length {n}, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    return arr


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=arr.dtype, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class BlockLCT:
    """Validated linear canonical transformation; build via :func:`make_lct`."""

    metric: Metric
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _frozen(np.asarray(getattr(self, name), dtype=float)))

    @property
    def dim(self) -> int:
        return self.metric.dim

    @property
    def matrix(self) -> np.ndarray:
        """Assembled 2N x 2N matrix [[a, c], [b, d]]."""
        return np.block([[self.a, self.c], [self.b, self.d]])


@dataclass(frozen=True)
class PhaseVector:
    """Classical (p, x) point the transform acts on."""

    p: np.ndarray
    x: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float)
        x = np.asarray(self.x, dtype=float)
        if p.shape != x.shape or p.ndim != 1:
            raise DimensionMismatch(f"p and x must be equal-length vectors, got {p.shape}, {x.shape}")
        if not (np.all(np.isfinite(p)) and np.all(np.isfinite(x))):
            raise ValueError("phase vector entries must be finite")
        object.__setattr__(self, "p", _frozen(p))
        object.__setattr__(self, "x", _frozen(x))


@dataclass(frozen=True)
class InhomogeneousLCT:
    """BlockLCT followed by constant shifts K (momentum) and Y (coordinate)."""

    lct: BlockLCT
    K: np.ndarray
    Y: np.ndarray

    def __post_init__(self):
        n = self.lct.dim
        object.__setattr__(self, "K", _frozen(_vector(self.K, n, "K")))
        object.__setattr__(self, "Y", _frozen(_vector(self.Y, n, "Y")))

    @property
    def metric(self) -> Metric:
        return self.lct.metric


def symplectic_residual(M, metric: Metric) -> float:
    """Max-norm of M^T Omega M - Omega for a 2N x 2N candidate matrix."""
    n = metric.dim
    M = np.asarray(M, dtype=float)
    if M.shape != (2 * n, 2 * n):
        raise DimensionMismatch(f"matrix must be {2 * n}x{2 * n}, got {M.shape}")
    omega = omega_matrix(metric)
    return _maxabs(M.T @ omega @ M - omega)


def blocks_from_matrix(M, metric: Metric):
    """Split an assembled 2N x 2N matrix into (a, b, c, d) per the locked layout."""
    n = metric.dim
    M = np.asarray(M, dtype=float)
    if M.shape != (2 * n, 2 * n):
        raise DimensionMismatch(f"matrix must be {2 * n}x{2 * n}, got {M.shape}")
    return M[:n, :n], M[n:, :n], M[:n, n:], M[n:, n:]


def make_lct(a, b, c, d, metric: Metric, tol: float = DEFAULT_TOL) -> BlockLCT:
    """Validate four blocks against the pseudo-symplectic condition and wrap them."""
    n = metric.dim
    a = _square(a, n, "a")
    b = _square(b, n, "b")
    c = _square(c, n, "c")
    d = _square(d, n, "d")
    lct = BlockLCT(metric, a, b, c, d)
    residual = symplectic_residual(lct.matrix, metric)
    if residual > tol:
        raise NotSymplectic(residual, tol)
    return lct


def compose(second: BlockLCT, first: BlockLCT) -> BlockLCT:
    """Product of assembled matrices M_second @ M_first, revalidated at 10x tolerance."""
    if second.metric != first.metric:
        raise MetricMismatch("cannot compose LCTs over different metrics")
    M = second.matrix @ first.matrix
    a, b, c, d = blocks_from_matrix(M, second.metric)
    return make_lct(a, b, c, d, second.metric, tol=10 * DEFAULT_TOL)


def inverse(L: BlockLCT) -> BlockLCT:
    """Group inverse via M^-1 = -Omega M^T Omega (always exists)."""
    omega = omega_matrix(L.metric)
    Minv = -omega @ L.matrix.T @ omega
    a, b, c, d = blocks_from_matrix(Minv, L.metric)
    return BlockLCT(L.metric, a, b, c, d)


def apply(L, v: PhaseVector) -> PhaseVector:
    """Act on a phase vector: p' = a.p + b.x (+K), x' = c.p + d.x (+Y)."""
    if isinstance(L, InhomogeneousLCT):
        base = apply(L.lct, v)
        return PhaseVector(base.p + L.K, base.x + L.Y)
    n = L.dim
    if v.p.shape != (n,):
        raise DimensionMismatch(f"phase vector has length {v.p.shape[0]}, LCT expects {n}")
    return PhaseVector(L.a @ v.p + L.b @ v.x, L.c @ v.p + L.d @ v.x)


def pseudo_orthogonal_residual(a, metric: Metric) -> float:
    """Max-norm of a^T eta a - eta."""
    n = metric.dim
    a = _square(a, n, "a")
    eta = metric.matrix
    return _maxabs(a.T @ eta @ a - eta)


def embed_pseudo_orthogonal(a, metric: Metric, tol: float = DEFAULT_TOL) -> BlockLCT:
    """Embed a in SO(N+, N-) as the LCT with blocks (a, 0, 0, a).

    Both p and x transform by the same matrix; Lorentz transformations enter
    the group this way.
    """
    n = metric.dim
    a = _square(a, n, "a")
    residual = pseudo_orthogonal_residual(a, metric)
    det = float(np.linalg.det(a))
    if residual > tol or abs(det - 1.0) > tol:
        raise NotPseudoOrthogonal(
            f"a^T eta a - eta residual {residual:.3e}, det(a) = {det:.12g} (tol {tol:.1e})"
        )
    z = np.zeros((n, n))
    return make_lct(a, z, z, a, metric, tol)


def boost_matrix(metric: Metric, time_axis: int, space_axis: int, rapidity: float) -> np.ndarray:
    """Hyperbolic rotation in the (time_axis, space_axis) plane.

    time_axis must index a +1 metric entry and space_axis a -1 entry; the
    result satisfies a^T eta a = eta and boosts compose by adding rapidities.
    """
    n = metric.dim
    diag = metric.diag
    if not (0 <= time_axis < n and 0 <= space_axis < n):
        raise AxisSignatureMismatch(f"axes ({time_axis}, {space_axis}) out of range for dimension {n}")
    if time_axis == space_axis:
        raise AxisSignatureMismatch("boost axes must be distinct")
    if diag[time_axis] != 1.0 or diag[space_axis] != -1.0:
        raise AxisSignatureMismatch(
            f"need metric (+1, -1) on axes ({time_axis}, {space_axis}), "
            f"got ({diag[time_axis]:+.0f}, {diag[space_axis]:+.0f})"
        )
    ch, sh = np.cosh(rapidity), np.sinh(rapidity)
    a = np.eye(n)
    a[time_axis, time_axis] = ch
    a[time_axis, space_axis] = sh
    a[space_axis, time_axis] = sh
    a[space_axis, space_axis] = ch
    return a


def embed_fourier_like(b, metric: Metric, tol: float = DEFAULT_TOL) -> BlockLCT:
    """Embed b with b^T eta b = eta as the LCT (0, b, -b, 0): p' = b.x, x' = -b.p."""
    n = metric.dim
    b = _square(b, n, "b")
    eta = metric.matrix
    residual = _maxabs(b.T @ eta @ b - eta)
    if residual > tol:
        raise ConstraintViolated(f"b^T eta b - eta residual {residual:.3e} exceeds tol {tol:.1e}")
    z = np.zeros((n, n))
    return make_lct(z, b, -b, z, metric, tol)


def make_pseudo_unitary_lct(a, b, metric: Metric, tol: float = DEFAULT_TOL) -> BlockLCT:
    """LCT with blocks (a, b, -b, a), requiring a^T eta a + b^T eta b = eta
    and a^T eta b - b^T eta a = 0."""
    n = metric.dim
    a = _square(a, n, "a")
    b = _square(b, n, "b")
    eta = metric.matrix
    r_sum = _maxabs(a.T @ eta @ a + b.T @ eta @ b - eta)
    r_skew = _maxabs(a.T @ eta @ b - b.T @ eta @ a)
    if r_sum > tol or r_skew > tol:
        raise ConstraintViolated(
            f"pseudo-unitary constraints violated: "
            f"|a^T eta a + b^T eta b - eta| = {r_sum:.3e}, "
            f"|a^T eta b - b^T eta a| = {r_skew:.3e} (tol {tol:.1e})"
        )
    return make_lct(a, b, -b, a, metric, tol)


def lct_to_json_dict(L) -> dict:
    """Serialize a BlockLCT or InhomogeneousLCT to the package JSON schema."""
    shifts = {}
    if isinstance(L, InhomogeneousLCT):
        shifts = {"K": L.K.tolist(), "Y": L.Y.tolist()}
        L = L.lct
    return {
        "signature": L.metric.signature.to_json_dict(),
        "a": L.a.tolist(),
        "b": L.b.tolist(),
        "c": L.c.tolist(),
        "d": L.d.tolist(),
        **shifts,
    }


def lct_from_json_dict(data, tol=DEFAULT_TOL):
    """Parse the JSON schema back into a BlockLCT (or InhomogeneousLCT if K/Y present).

    Pass ``tol=None`` to skip symplectic validation (used by classification,
    which measures the residual instead of gating on it).
    """
    try:
        sig = Signature.from_json_dict(data["signature"])
        metric = Metric(sig)
        n = metric.dim
        blocks = [_square(data[k], n, k) for k in ("a", "b", "c", "d")]
    except (KeyError, TypeError, ValueError, DimensionMismatch) as exc:
        raise ParseError(f"bad LCT object: {exc}") from exc
    if tol is None:
        lct = BlockLCT(metric, *blocks)
    else:
        lct = make_lct(*blocks, metric, tol=tol)
    if "K" in data or "Y" in data:
        try:
            K = _vector(data.get("K", np.zeros(n)), n, "K")
            Y = _vector(data.get("Y", np.zeros(n)), n, "Y")
        except (TypeError, ValueError, DimensionMismatch) as exc:
            raise ParseError(f"bad shift vectors: {exc}") from exc
        return InhomogeneousLCT(lct, K, Y)
    return lct
