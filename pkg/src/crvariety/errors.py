"""Exception types shared across the package."""


class CRVarietyError(Exception):
    """Base class for all package-specific errors."""


class DivisionByZero(CRVarietyError, ZeroDivisionError):
    """Division or inversion of an exact zero scalar."""


class FloatOverflow(CRVarietyError, OverflowError):
    """Exact value does not fit into binary64."""


class ParseError(CRVarietyError, ValueError):
    """Malformed scalar text, JSON document, or schema violation."""


class DimensionMismatch(CRVarietyError, ValueError):
    """Operands have incompatible shapes or ambient dimensions."""


class SingularMatrix(CRVarietyError, ValueError):
    """Inverse of a rank-deficient square matrix was requested."""


class NotContained(CRVarietyError, ValueError):
    """Quotient basis requested for a subspace that is not contained."""


class NotConjInvariant(CRVarietyError, ValueError):
    """Real form requested for a subspace not fixed by conjugation."""


class JacobiViolation(CRVarietyError, ValueError):
    """Structure constants fail the Jacobi identity."""

    def __init__(self, violations):
        self.violations = violations
        triples = ", ".join(str((i + 1, j + 1, k + 1)) for i, j, k, _ in violations)
        super().__init__(f"Jacobi identity fails on basis triples: {triples}")


class NotAlmostComplex(CRVarietyError, ValueError):
    """Operator is not a real endomorphism squaring to minus the identity."""


class DegeneratePoint(CRVarietyError, ValueError):
    """Subspace meets its conjugate, so no complex structure exists."""


class NotInVariety(CRVarietyError, ValueError):
    """Subspace is not an involutive half-dimensional point."""


class NotAFoliationPoint(CRVarietyError, ValueError):
    """CR decomposition requested for a complex-structure classification."""


class NotAutomorphism(CRVarietyError, ValueError):
    """Map is not an invertible bracket-preserving endomorphism."""


class EvaluationError(CRVarietyError, ValueError):
    """A parametrized family degenerates at the given parameters."""


class ZeroParameter(EvaluationError):
    """A parameter that must be nonzero is zero."""


class SamplingFailure(CRVarietyError, RuntimeError):
    """Random sampling failed to produce an invertible matrix in time."""
