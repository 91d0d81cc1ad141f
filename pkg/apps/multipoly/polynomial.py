"""
Multivariate polynomials with exact coefficients over a FieldSpec.
"""
from types import MappingProxyType

from .exceptions import NotHomogeneousError, VariableIndexError, ZeroFormError
from .monomials import (
    format_monomial,
    monomial_index,
    monomials_of_degree,
    multiply,
    sort_key,
)


class Polynomial:
    """
    Immutable sparse polynomial: a map from exponent tuples to nonzero raw
    field elements. Zero coefficients are never stored.
    """
    __slots__ = ('field', 'num_vars', '_terms', '_hash')

    def __init__(self, field, num_vars, terms=None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != num_vars or any(e < 0 for e in mono):
                raise VariableIndexError(f'monomial {mono} does not live in {num_vars} variables')
            value = field.add(clean.get(mono, field.zero), field.element(coeff))
            clean[mono] = value
        self.field = field
        self.num_vars = num_vars
        self._terms = {m: c for m, c in clean.items() if c != 0}
        self._hash = None

    @classmethod
    def _from_canonical(cls, field, num_vars, terms):
        poly = cls.__new__(cls)
        poly.field = field
        poly.num_vars = num_vars
        poly._terms = {m: c for m, c in terms.items() if c != 0}
        poly._hash = None
        return poly

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field, num_vars):
        return cls._from_canonical(field, num_vars, {})

    @classmethod
    def constant(cls, field, num_vars, value):
        return cls(field, num_vars, {(0,) * num_vars: value})

    @classmethod
    def variable(cls, field, num_vars, i):
        if not 0 <= i < num_vars:
            raise VariableIndexError(f'x{i} is not one of x0..x{num_vars - 1}')
        mono = tuple(1 if j == i else 0 for j in range(num_vars))
        return cls._from_canonical(field, num_vars, {mono: field.one})

    @classmethod
    def linear(cls, field, coefficients):
        """The linear form sum c_i x_i."""
        n = len(coefficients)
        terms = {tuple(1 if j == i else 0 for j in range(n)): c for i, c in enumerate(coefficients)}
        return cls(field, n, terms)

    @classmethod
    def from_vector(cls, field, num_vars, degree, vector):
        """Inverse of ``to_vector``: coordinates on the monomial basis of R_degree."""
        basis = monomials_of_degree(num_vars, degree)
        return cls._from_canonical(field, num_vars, dict(zip(basis, vector)))

    # -- inspection ------------------------------------------------------

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def coefficient(self, mono):
        return self._terms.get(tuple(mono), self.field.zero)

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self):
        return len({sum(m) for m in self._terms}) <= 1

    def homogeneous_degree(self):
        """Degree of a nonzero homogeneous polynomial; raises otherwise."""
        if not self.is_homogeneous():
            raise NotHomogeneousError(f'{self} is not homogeneous')
        if self.is_zero():
            raise ZeroFormError('the zero polynomial has no degree')
        return self.degree

    def linear_coefficients(self):
        """Coefficient vector of a linear form."""
        if self.is_zero():
            raise ZeroFormError('linear form is zero')
        if self.degree != 1 or not self.is_homogeneous():
            raise NotHomogeneousError(f'{self} is not a linear form')
        return tuple(self.coefficient(tuple(1 if j == i else 0 for j in range(self.num_vars)))
                     for i in range(self.num_vars))

    def to_vector(self, degree):
        """Coordinates on the monomial basis of R_degree."""
        if any(sum(m) != degree for m in self._terms):
            raise NotHomogeneousError(f'{self} is not homogeneous of degree {degree}')
        index = monomial_index(self.num_vars, degree)
        vector = [self.field.zero] * len(index)
        for mono, coeff in self._terms.items():
            vector[index[mono]] = coeff
        return vector

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda item: sort_key(item[0]))

    # -- arithmetic ------------------------------------------------------

    def _check(self, other):
        self.field.check_same(other.field)
        if other.num_vars != self.num_vars:
            raise VariableIndexError(f'{self.num_vars} vs {other.num_vars} variables')

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.field, self.num_vars, other)
        self._check(other)
        f = self.field
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            terms[mono] = f.add(terms.get(mono, f.zero), coeff)
        return Polynomial._from_canonical(f, self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Polynomial._from_canonical(f, self.num_vars, {m: f.neg(c) for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.field, self.num_vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, value):
        f = self.field
        c = f.element(value)
        return Polynomial._from_canonical(f, self.num_vars, {m: f.mul(c, a) for m, a in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        f = self.field
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = multiply(m1, m2)
                terms[mono] = f.add(terms.get(mono, f.zero), f.mul(c1, c2))
        return Polynomial._from_canonical(f, self.num_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError('negative powers are not polynomials')
        result = Polynomial.constant(self.field, self.num_vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self, i):
        if not 0 <= i < self.num_vars:
            raise VariableIndexError(f'x{i} is not one of x0..x{self.num_vars - 1}')
        f = self.field
        terms = {}
        for mono, coeff in self._terms.items():
            e = mono[i]
            if e == 0:
                continue
            lowered = mono[:i] + (e - 1,) + mono[i + 1:]
            terms[lowered] = f.add(terms.get(lowered, f.zero), f.mul(f.element(e), coeff))
        return Polynomial._from_canonical(f, self.num_vars, terms)

    def evaluate(self, point):
        f = self.field
        point = [f.element(x) for x in point]
        if len(point) != self.num_vars:
            raise VariableIndexError(f'point has {len(point)} coordinates, expected {self.num_vars}')
        total = f.zero
        for mono, coeff in self._terms.items():
            value = coeff
            for x, e in zip(point, mono):
                if e:
                    value = f.mul(value, f.power(x, e))
            total = f.add(total, value)
        return total

    # -- comparison and display -----------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.field == other.field and self.num_vars == other.num_vars
                and self._terms == other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.num_vars, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f'Polynomial({self.field.label}, {self.num_vars}, {format_polynomial(self)!r})'


def format_polynomial(poly):
    """
    Canonical text, e.g. ``x0^3 + 2*x1*x2^2 - 1/3*x4^3``; parses back to the
    same polynomial.
    """
    if poly.is_zero():
        return '0'
    pieces = []
    for mono, coeff in poly.sorted_terms():
        negative = poly.field.is_rational and coeff < 0
        magnitude = -coeff if negative else coeff
        body = format_monomial(mono)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f'{magnitude}*{body}'
        if not pieces:
            pieces.append(f'-{text}' if negative else text)
        else:
            pieces.append(f'- {text}' if negative else f'+ {text}')
    return ' '.join(pieces)


def partial_derivative(F, i):
    return F.derivative(i)


def euler_check(F):
    """
    True iff sum x_i * dF/dx_i == d * F, with d reduced into the field.
    """
    if not F.is_homogeneous():
        raise NotHomogeneousError(f'{F} is not homogeneous')
    if F.is_zero():
        return True
    d = F.degree
    lhs = Polynomial.zero(F.field, F.num_vars)
    for i in range(F.num_vars):
        lhs = lhs + Polynomial.variable(F.field, F.num_vars, i) * F.derivative(i)
    return lhs == F.scale(d)
