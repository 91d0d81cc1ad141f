"""
Top-down operator precedence parser for polynomial text.

Grammar: variables ``x0``..``x<n>``, integer or ``a/b`` literals, binary
``+ - * ^``, unary minus and parentheses. Juxtaposition is an error and
whitespace is ignored. ``^`` takes a non-negative integer literal.
"""
from dataclasses import dataclass
from fractions import Fraction
import re

from apps.exactla.exceptions import ZeroDivisionInFieldError

from .exceptions import CoefficientNotRepresentableError, ParseError, VariableIndexError
from .polynomial import Polynomial

TOKEN_PATTERN = re.compile(r'\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<var>x\d+)|(?P<op>[-+*^()]))')

BINDING_POWER = {'+': 10, '-': 10, '*': 20, '^': 30}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        match = TOKEN_PATTERN.match(text, pos)
        if not match or match.end() == pos:
            raise ParseError(f"unexpected character '{text[pos]}'", pos)
        start = match.start(match.lastgroup)
        tokens.append(Token(match.lastgroup, match.group(match.lastgroup), start))
        pos = match.end()
    tokens.append(Token('end', '', len(text)))
    return tokens


class PolynomialParser:
    def __init__(self, text, field, num_vars):
        self.text = text
        self.field = field
        self.num_vars = num_vars
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def token(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.token
        self.index += 1
        return token

    def parse(self):
        if self.token.kind == 'end':
            raise ParseError('empty expression', 0)
        result = self.expression(0)
        if self.token.kind != 'end':
            raise ParseError(f"expected an operator before '{self.token.text}'", self.token.position)
        return result

    def expression(self, rbp):
        left = self.prefix(self.advance())
        while rbp < self.binding_power(self.token):
            left = self.infix(self.advance(), left)
        return left

    def binding_power(self, token):
        if token.kind != 'op':
            return 0
        return BINDING_POWER.get(token.text, 0)

    def prefix(self, token):
        if token.kind == 'number':
            return Polynomial.constant(self.field, self.num_vars, self.literal(token))
        if token.kind == 'var':
            i = int(token.text[1:])
            if i >= self.num_vars:
                raise VariableIndexError(
                    f'{token.text} at position {token.position} is outside x0..x{self.num_vars - 1}'
                )
            return Polynomial.variable(self.field, self.num_vars, i)
        if token.text == '-':
            # binds tighter than + and *, looser than ^
            return -self.expression(25)
        if token.text == '+':
            return self.expression(25)
        if token.text == '(':
            inner = self.expression(0)
            if self.token.text != ')':
                raise ParseError("expected ')'", self.token.position)
            self.advance()
            return inner
        if token.kind == 'end':
            raise ParseError('unexpected end of input', token.position)
        raise ParseError(f"unexpected '{token.text}'", token.position)

    def infix(self, token, left):
        if token.text == '+':
            return left + self.expression(10)
        if token.text == '-':
            return left - self.expression(10)
        if token.text == '*':
            return left * self.expression(20)
        if token.text == '^':
            exponent = self.advance()
            if exponent.kind != 'number' or '/' in exponent.text:
                raise ParseError('exponent must be a non-negative integer', exponent.position)
            return left ** int(exponent.text)
        raise ParseError(f"unexpected '{token.text}'", token.position)

    def literal(self, token):
        numerator, _, denominator = token.text.partition('/')
        if denominator and int(denominator) == 0:
            raise ParseError('zero denominator', token.position)
        value = Fraction(int(numerator), int(denominator or 1))
        try:
            return self.field.element(value)
        except ZeroDivisionInFieldError:
            raise CoefficientNotRepresentableError(
                f'{token.text} at position {token.position} is not defined in {self.field.label}'
            ) from None


def parse_polynomial(text, field, num_vars):
    """
    Parse ``text`` into a canonical Polynomial in ``num_vars`` variables.
    """
    return PolynomialParser(text, field, num_vars).parse()


def infer_num_vars(text):
    """One more than the largest variable index mentioned (at least 1)."""
    indices = [int(m) for m in re.findall(r'x(\d+)', text)]
    return max(indices, default=0) + 1
