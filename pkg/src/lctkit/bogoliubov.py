"""Complex (w, v) form of an LCT and pseudo-unitarity classification.

The pair acts on the non-hermitian combinations q = (p + ix)/sqrt(2),
q+ = (p - ix)/sqrt(2).  An LCT is pseudo-unitary when v = 0 and w lies in
U(N+, N-).
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .metric import Metric
from .symplectic import DEFAULT_TOL, BlockLCT, _frozen, _maxabs


@dataclass(frozen=True)
class BogoliubovPair:
    metric: Metric
    w: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        n = self.metric.dim
        w = np.asarray(self.w, dtype=complex)
        v = np.asarray(self.v, dtype=complex)
        if w.shape != (n, n) or v.shape != (n, n):
            raise DimensionMismatch(f"w, v must be {n}x{n}, got {w.shape}, {v.shape}")
        object.__setattr__(self, "w", _frozen(w))
        object.__setattr__(self, "v", _frozen(v))


@dataclass(frozen=True)
class RelationResiduals:
    """Residuals of the (w, v) constraint relations, in max-norm.

    ``first_printed`` is |w+ eta w - v+ eta v - eta| exactly as the source
    relation is usually written.  That form only repackages the symplectic
    condition when v+ eta v is real; the variant that holds for *every*
    valid LCT under this package's block layout is
    ``first_group`` = |w eta w+ - v eta v+ - eta|.  Both second-relation
    variants are informational (see ``pseudo_unitarity_residuals`` for the
    classification gate).
    """

    first_group: float
    first_printed: float
    second_printed: float
    second_symmetrized: float


def to_bogoliubov(L: BlockLCT) -> BogoliubovPair:
    """w = (a + d - ib + ic)/2, v = (a - d - ib - ic)/2."""
    w = 0.5 * (L.a + L.d - 1j * L.b + 1j * L.c)
    v = 0.5 * (L.a - L.d - 1j * L.b - 1j * L.c)
    return BogoliubovPair(L.metric, w, v)


def relation_residuals(pair: BogoliubovPair) -> RelationResiduals:
    eta = pair.metric.matrix
    w, v = pair.w, pair.v
    wh, vh = w.conj().T, v.conj().T
    return RelationResiduals(
        first_group=_maxabs(w @ eta @ wh - v @ eta @ vh - eta),
        first_printed=_maxabs(wh @ eta @ w - vh @ eta @ v - eta),
        second_printed=_maxabs(vh @ eta @ w - w @ eta @ vh),
        second_symmetrized=_maxabs(w.T @ eta @ v - v.T @ eta @ w),
    )


def pseudo_unitarity_residuals(pair: BogoliubovPair):
    """(r_v, r_u) = (|v|, |w+ eta w - eta|); pseudo-unitary iff both small.

    When v = 0 the dagger placement in the unitarity relation is immaterial,
    so the classification gate is unambiguous.
    """
    eta = pair.metric.matrix
    r_v = _maxabs(pair.v)
    r_u = _maxabs(pair.w.conj().T @ eta @ pair.w - eta)
    return r_v, r_u


def is_pseudo_unitary(pair: BogoliubovPair, tol: float = DEFAULT_TOL) -> bool:
    r_v, r_u = pseudo_unitarity_residuals(pair)
    return r_v <= tol and r_u <= tol


def _complex_matrix_to_json(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def pair_to_json_dict(pair: BogoliubovPair) -> dict:
    """Serialize with complex entries as [re, im] pairs."""
    return {
        "signature": pair.metric.signature.to_json_dict(),
        "w": _complex_matrix_to_json(pair.w),
        "v": _complex_matrix_to_json(pair.v),
    }
