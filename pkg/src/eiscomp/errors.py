"""Exception types shared across the package."""


class EiscompError(Exception):
    """Base class for package errors."""


class ValidationError(EiscompError):
    """Bad user input (CLI exit code 2)."""


class PreconditionError(EiscompError):
    """An operation was called outside its stated precondition."""


class CoprimalityError(EiscompError):
    """Ideal not coprime to the conductor."""


class PoleError(EiscompError):
    """Evaluation requested at a pole of a degenerate L-function."""

    def __init__(self, message, location=None, residue=None):
        super().__init__(message)
        self.location = location
        self.residue = residue


class PrecisionError(EiscompError):
    """Numerical consistency checks failed; raise precision parameters."""


class IndeterminateOrder(EiscompError):
    """Order of vanishing could not be decided at the working precision."""


class IndeterminateConjugacy(EiscompError):
    """Conjugacy test fell in the dead zone between the two tolerances."""


class NonIntegralHodgeType(EiscompError):
    """Exponent formula produced non-integral values (inconsistent lift)."""


class ShapeError(EiscompError):
    """Mixed-Hodge-structure input does not have the expected shape."""


class SectionError(EiscompError):
    """A map supplied as a section does not satisfy pi o sigma = id."""


class TypeMismatch(EiscompError):
    """A supplied character does not have the required torus type."""
