"""Signatures, diagonal metrics, the symplectic form matrix, and the SI coupling constant."""

from dataclasses import dataclass

import numpy as np

from .errors import EmptySignature, ParseError

SPEED_OF_LIGHT = 299792458.0  # m / s (exact)
GRAVITATIONAL_CONSTANT = 6.67430e-11  # m^3 / (kg s^2), CODATA 2018


@dataclass(frozen=True)
class Signature:
    """Counts of +1 and -1 metric directions; total dimension must be >= 1."""

    n_plus: int
    n_minus: int

    def __post_init__(self):
        if self.n_plus < 0 or self.n_minus < 0:
            raise ValueError(f"signature counts must be nonnegative, got {self}")
        if self.n_plus + self.n_minus < 1:
            raise EmptySignature("signature needs at least one direction")

    @property
    def dim(self) -> int:
        return self.n_plus + self.n_minus

    def to_json_dict(self) -> dict:
        return {"n_plus": self.n_plus, "n_minus": self.n_minus}

    @classmethod
    def from_json_dict(cls, data) -> "Signature":
        try:
            return cls(int(data["n_plus"]), int(data["n_minus"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad signature object: {data!r}") from exc


@dataclass(frozen=True)
class Metric:
    """Diagonal +-1 metric; the +1 entries come first (index 0 is a + direction)."""

    signature: Signature

    @property
    def dim(self) -> int:
        return self.signature.dim

    @property
    def diag(self) -> np.ndarray:
        sig = self.signature
        return np.concatenate([np.ones(sig.n_plus), -np.ones(sig.n_minus)])

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(self.diag)


def metric_matrix(sig: Signature) -> Metric:
    """Metric for a signature: diag(+1 x n_plus, -1 x n_minus)."""
    return Metric(sig)


def omega_matrix(metric: Metric) -> np.ndarray:
    """Symplectic form [[0, eta], [-eta, 0]]; antisymmetric with Omega^2 = -I."""
    eta = metric.matrix
    z = np.zeros_like(eta)
    return np.block([[z, eta], [-eta, z]])


def coupling_constant_si() -> float:
    """Momentum-per-length coupling c^3/G in kg/s (~4.037e35).

    Documentation-grade only: all transform math in this package runs in
    natural units where the coupling is 1.
    """
    return SPEED_OF_LIGHT**3 / GRAVITATIONAL_CONSTANT
