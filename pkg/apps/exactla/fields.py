"""
Exact base fields: the rationals and prime fields F_p with p < 2^31.

Raw field elements are plain Python values (``Fraction`` over Q, ``int`` in
[0, p) over F_p) so that matrix code can work on them without wrapping.
``Scalar`` is the checked, field-tagged wrapper used at API boundaries.
"""
from dataclasses import dataclass
from fractions import Fraction
import re

from sympy import isprime

from .exceptions import FieldMismatchError, InvalidFieldError, ZeroDivisionInFieldError

MAX_CHARACTERISTIC = 2 ** 31

_FIELD_LABEL = re.compile(r'^\s*(?:(?P<q>Q|QQ)|F_?(?P<p>\d+))\s*$', re.IGNORECASE)


@dataclass(frozen=True)
class FieldSpec:
    """
    A base field, identified by its characteristic (0 means Q).
    """
    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if p < 0 or p >= MAX_CHARACTERISTIC or not isprime(p):
            raise InvalidFieldError(f'characteristic must be 0 or a prime below 2^31, got {p}')

    @classmethod
    def rationals(cls):
        return cls(0)

    @classmethod
    def prime(cls, p):
        return cls(int(p))

    @classmethod
    def parse(cls, text):
        """Read ``Q`` or ``F<p>`` (``F7``, ``F_10007``)."""
        match = _FIELD_LABEL.match(text or '')
        if not match:
            raise InvalidFieldError(f"unknown field '{text}', expected Q or F<p>")
        if match.group('q'):
            return cls.rationals()
        return cls.prime(int(match.group('p')))

    @property
    def is_rational(self):
        return self.characteristic == 0

    @property
    def label(self):
        return 'Q' if self.is_rational else f'F{self.characteristic}'

    @property
    def order(self):
        """Number of elements, or None for Q."""
        return None if self.is_rational else self.characteristic

    def __str__(self):
        return self.label

    # -- raw element arithmetic ------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.is_rational else 0

    @property
    def one(self):
        return Fraction(1) if self.is_rational else 1

    def element(self, value):
        """Canonical raw element for an int, Fraction or ``a/b`` string."""
        if isinstance(value, Scalar):
            self.check_same(value.field)
            return value.value
        value = Fraction(value)
        if self.is_rational:
            return value
        p = self.characteristic
        if value.denominator % p == 0:
            raise ZeroDivisionInFieldError(f'{value} is not defined in {self.label}')
        return value.numerator * pow(value.denominator, -1, p) % p

    def add(self, x, y):
        if self.is_rational:
            return x + y
        return (x + y) % self.characteristic

    def sub(self, x, y):
        if self.is_rational:
            return x - y
        return (x - y) % self.characteristic

    def mul(self, x, y):
        if self.is_rational:
            return x * y
        return x * y % self.characteristic

    def neg(self, x):
        if self.is_rational:
            return -x
        return -x % self.characteristic

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionInFieldError(f'division by zero in {self.label}')
        if self.is_rational:
            return 1 / x
        return pow(x, -1, self.characteristic)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def power(self, x, k):
        if self.is_rational:
            return x ** k
        return pow(x, k, self.characteristic)

    def format(self, x):
        return str(x)

    def check_same(self, other):
        if other != self:
            raise FieldMismatchError(f'cannot mix {self.label} and {other.label}')

    def scalar(self, value):
        return Scalar(self, self.element(value))


@dataclass(frozen=True)
class Scalar:
    """
    A field element tagged with its field. Always canonical: reduced fraction
    with positive denominator over Q, residue in [0, p) over F_p.
    """
    field: FieldSpec
    value: object

    def _other(self, other):
        if isinstance(other, Scalar):
            self.field.check_same(other.field)
            return other.value
        return self.field.element(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._other(other), self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.format(self.value)


OPERATIONS = {
    'add': FieldSpec.add,
    'sub': FieldSpec.sub,
    'mul': FieldSpec.mul,
    'div': FieldSpec.div,
}


def field_arithmetic(x, y, op):
    """
    Apply ``op`` (add, sub, mul, div) to two scalars of the same field.
    """
    x.field.check_same(y.field)
    try:
        fn = OPERATIONS[op]
    except KeyError:
        raise ValueError(f"unknown operation '{op}'") from None
    return Scalar(x.field, fn(x.field, x.value, y.value))
