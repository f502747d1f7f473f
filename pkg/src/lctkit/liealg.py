"""Lie-algebra parameterization of the pseudo-symplectic group.

A generator is four N x N matrices (lambda, mu, phi, theta) subject to

    theta^T = eta theta eta      phi^T = eta phi eta
    mu^T    = eta mu eta         lambda^T = -eta lambda eta,  Tr lambda = 0

assembled as X = [[lambda + mu, phi + theta], [phi - theta, lambda - mu]];
exp(X) then satisfies the symplectic condition of the `symplectic` module.
Generators with phi = mu = 0 exponentiate into the isodispersion subgroup
Sp intersect SO(2N+, 2N-).
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidGenerator
from .metric import Metric, Signature
from .symplectic import (
    DEFAULT_TOL,
    BlockLCT,
    _frozen,
    _maxabs,
    _square,
    blocks_from_matrix,
    make_lct,
)


@dataclass(frozen=True)
class Generator:
    """Candidate algebra element; validate via generator_residual / make_generator."""

    metric: Metric
    lam: np.ndarray
    mu: np.ndarray
    phi: np.ndarray
    theta: np.ndarray

    def __post_init__(self):
        n = self.metric.dim
        for name in ("lam", "mu", "phi", "theta"):
            object.__setattr__(self, name, _frozen(_square(getattr(self, name), n, name)))

    @property
    def dim(self) -> int:
        return self.metric.dim

    @property
    def matrix(self) -> np.ndarray:
        """Assembled 2N x 2N algebra element [[lam+mu, phi+theta], [phi-theta, lam-mu]]."""
        return np.block(
            [[self.lam + self.mu, self.phi + self.theta],
             [self.phi - self.theta, self.lam - self.mu]]
        )


@dataclass(frozen=True)
class GeneratorResiduals:
    """Max-norm violations of the four symmetry constraints plus |Tr lambda|."""

    theta: float
    phi: float
    mu: float
    lam: float
    trace: float

    @property
    def worst(self) -> float:
        return max(self.theta, self.phi, self.mu, self.lam, self.trace)


def generator_residual(G: Generator) -> GeneratorResiduals:
    eta = G.metric.matrix
    sym_defect = lambda X: _maxabs(X.T - eta @ X @ eta)
    return GeneratorResiduals(
        theta=sym_defect(G.theta),
        phi=sym_defect(G.phi),
        mu=sym_defect(G.mu),
        lam=_maxabs(G.lam.T + eta @ G.lam @ eta),
        trace=abs(float(np.trace(G.lam))),
    )


def make_generator(lam, mu, phi, theta, metric: Metric, tol: float = DEFAULT_TOL) -> Generator:
    G = Generator(metric, lam, mu, phi, theta)
    res = generator_residual(G)
    if res.worst > tol:
        raise InvalidGenerator(f"constraint residuals {res} exceed tol {tol:.1e}")
    return G


def project_generator(lam, mu, phi, theta, metric: Metric):
    """Project four arbitrary matrices onto the constraint subspace.

    mu, phi, theta are symmetrized under X -> eta X^T eta; lambda is
    antisymmetrized and its trace removed (the trace is already zero after
    antisymmetrization; the subtraction is kept for explicitness).
    Idempotent: valid generators pass through unchanged.
    """
    n = metric.dim
    eta = metric.matrix
    lam = _square(lam, n, "lam")
    mu = _square(mu, n, "mu")
    phi = _square(phi, n, "phi")
    theta = _square(theta, n, "theta")
    sym = lambda X: 0.5 * (X + eta @ X.T @ eta)
    lam = 0.5 * (lam - eta @ lam.T @ eta)
    lam = lam - (np.trace(lam) / n) * np.eye(n)
    return lam, sym(mu), sym(phi), sym(theta)


def matrix_exp(X, term_tol: float = 1e-18) -> np.ndarray:
    """Dense matrix exponential by scaling-and-squaring with a truncated series.

    The input is scaled so its max-norm is <= 0.5, the Taylor series is
    summed until the next term drops below ``term_tol``, and the result is
    squared back up.  Accurate to ~1e-13 for the small matrices used here.
    """
    X = np.asarray(X, dtype=float)
    n = X.shape[0]
    norm = _maxabs(X)
    squarings = 0 if norm <= 0.5 else int(np.ceil(np.log2(norm / 0.5)))
    A = X / 2.0**squarings
    result = np.eye(n)
    term = np.eye(n)
    k = 1
    while True:
        term = term @ A / k
        result = result + term
        if _maxabs(term) < term_tol or k > 100:
            break
        k += 1
    for _ in range(squarings):
        result = result @ result
    return result


def exp_generator(G: Generator, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Exponential of a valid generator; lands in the pseudo-symplectic group.

    Returns the raw 2N x 2N matrix, usable as BlockLCT blocks or as a
    reduced-operator transformation matrix.
    """
    res = generator_residual(G)
    if res.worst > tol:
        raise InvalidGenerator(f"constraint residuals {res} exceed tol {tol:.1e}")
    return matrix_exp(G.matrix)


def isodispersion_residual(M, metric: Metric) -> float:
    """Max-norm of M diag(eta, eta) M^T - diag(eta, eta).

    A symplectic M with this residual ~0 lies in Sp intersect SO(2N+, 2N-)
    and preserves the metric-traced dispersion quadratic form.
    """
    n = metric.dim
    M = np.asarray(M, dtype=float)
    if M.shape != (2 * n, 2 * n):
        raise DimensionMismatch(f"matrix must be {2 * n}x{2 * n}, got {M.shape}")
    eta = metric.matrix
    eta2 = np.block([[eta, np.zeros((n, n))], [np.zeros((n, n)), eta]])
    return _maxabs(M @ eta2 @ M.T - eta2)


def is_ilct_matrix(M, metric: Metric, tol: float = DEFAULT_TOL) -> bool:
    """Isodispersion LCT test on a raw matrix: both residuals within tol."""
    from .symplectic import symplectic_residual

    return (
        isodispersion_residual(M, metric) <= tol
        and symplectic_residual(M, metric) <= tol
    )


def is_ilct_generator(G: Generator, tol: float = DEFAULT_TOL) -> bool:
    """A valid generator exponentiates to an isodispersion LCT iff phi = mu = 0."""
    return _maxabs(G.phi) <= tol and _maxabs(G.mu) <= tol


def random_generator(sig: Signature, seed, scale: float) -> Generator:
    """Uniform [-scale, scale] draws projected onto the constraint subspace.

    Draw order is lambda, mu, phi, theta; deterministic for a fixed seed.
    """
    if scale < 0:
        raise ValueError("scale must be nonnegative")
    metric = Metric(sig)
    n = metric.dim
    rng = np.random.default_rng(seed)
    raw = [rng.uniform(-scale, scale, (n, n)) if scale > 0 else np.zeros((n, n)) for _ in range(4)]
    lam, mu, phi, theta = project_generator(*raw, metric)
    return Generator(metric, lam, mu, phi, theta)


def random_lct(sig: Signature, seed, scale: float) -> BlockLCT:
    """Exponential of a random valid generator, wrapped as a validated BlockLCT."""
    metric = Metric(sig)
    M = exp_generator(random_generator(sig, seed, scale))
    a, b, c, d = blocks_from_matrix(M, metric)
    return make_lct(a, b, c, d, metric)


def generator_to_json_dict(G: Generator) -> dict:
    return {
        "signature": G.metric.signature.to_json_dict(),
        "lambda": G.lam.tolist(),
        "mu": G.mu.tolist(),
        "phi": G.phi.tolist(),
        "theta": G.theta.tolist(),
    }


def generator_from_json_dict(data) -> Generator:
    from .errors import ParseError

    try:
        sig = Signature.from_json_dict(data["signature"])
        metric = Metric(sig)
        n = metric.dim
        lam = _square(data["lambda"], n, "lambda")
        mu = _square(data["mu"], n, "mu")
        phi = _square(data["phi"], n, "phi")
        theta = _square(data["theta"], n, "theta")
    except (KeyError, TypeError, ValueError, DimensionMismatch) as exc:
        raise ParseError(f"bad generator object: {exc}") from exc
    return Generator(metric, lam, mu, phi, theta)
