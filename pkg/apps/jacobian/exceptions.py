class JacobianError(Exception):
    """Base class for Jacobian ring errors."""


class ConstantFormError(JacobianError):
    pass


class DegreeMismatchError(JacobianError):
    pass


class GenericSampleError(JacobianError):
    """No sample satisfied the open condition within the trial budget."""
