class ExactLinearAlgebraError(Exception):
    """Base class for field and matrix errors."""


class InvalidFieldError(ExactLinearAlgebraError):
    pass


class FieldMismatchError(ExactLinearAlgebraError):
    pass


class ZeroDivisionInFieldError(ExactLinearAlgebraError, ZeroDivisionError):
    pass


class DimensionMismatchError(ExactLinearAlgebraError):
    pass


class SingularMatrixError(ExactLinearAlgebraError):
    pass
