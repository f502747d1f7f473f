"""Exception types raised across the package."""


class LctError(Exception):
    """Base class for all lctkit errors."""


class EmptySignature(LctError):
    """Signature with zero total dimension."""


class DimensionMismatch(LctError):
    """Array shapes inconsistent with each other or with the metric."""


class MetricMismatch(LctError):
    """Operands built over different metrics."""


class NotSymplectic(LctError):
    """Candidate blocks violate the pseudo-symplectic condition."""

    def __init__(self, residual, tol):
        self.residual = float(residual)
        self.tol = float(tol)
        super().__init__(f"symplectic residual {self.residual:.3e} exceeds tol {self.tol:.3e}")


class NotPseudoOrthogonal(LctError):
    """Matrix fails a^T eta a = eta or det(a) = +1."""


class ConstraintViolated(LctError):
    """Embedding preconditions not met (residuals in message)."""


class AxisSignatureMismatch(LctError):
    """Boost axes do not point along a (+1, -1) metric pair."""


class InvalidGenerator(LctError):
    """Candidate matrices violate the Lie-algebra symmetry constraints."""


class NotIsodispersion(LctError):
    """Transform fails the isodispersion (Sp intersect SO) condition."""


class InvalidDispersion(LctError):
    """Window matrices violate the dispersion-spec domain."""


class DegenerateKernel(LctError):
    """1-D kernel undefined: momentum-coordinate coupling c is (near) zero."""


class GridTooNarrow(LctError):
    """Sampling grid does not cover enough standard deviations."""


class ZeroSignal(LctError):
    """Signal has no usable L2 mass."""


class ParseError(LctError):
    """Malformed JSON/CSV input."""
