class PolynomialError(Exception):
    """Base class for polynomial construction and parsing errors."""


class ParseError(PolynomialError):
    def __init__(self, message, position):
        super().__init__(f'{message} at position {position}')
        self.position = position


class VariableIndexError(PolynomialError):
    pass


class CoefficientNotRepresentableError(PolynomialError):
    pass


class NotHomogeneousError(PolynomialError):
    pass


class ZeroFormError(PolynomialError):
    pass
