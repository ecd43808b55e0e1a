"""
Exact coefficient layer: rational functions in the base coordinates

Polynomials are sympy sparse ``PolyElement`` values over ``QQ`` in a ring whose
generators are the declared base coordinates, ordered graded-lexicographically.
``RatFunc`` pairs a numerator with a monic, coprime denominator so that equality
of rational functions is equality of normal forms.
"""

import re
from fractions import Fraction
from functools import lru_cache
from typing import List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import monomial_key
from sympy.polys.rings import PolyElement, PolyRing

from ..common.config import MONOMIAL_ORDER
from ..common.errors import (
    DivisionByZeroError,
    EvaluationError,
    ExpressionSyntaxError,
    GeneratorMismatchError,
    UnknownVariableError,
)

Scalar = Union[int, Fraction]

# Sparse polynomial type of the coefficient layer (exponent vector -> QQ)
Poly = PolyElement


@lru_cache(maxsize=None)
def coefficient_ring(variables: Tuple[str, ...]) -> PolyRing:
    """Polynomial ring QQ[variables] with the configured monomial order"""
    return PolyRing(list(variables), QQ, monomial_key(MONOMIAL_ORDER))


def to_qq(value: Scalar):
    """Convert an int or Fraction into a QQ element"""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> Fraction:
    """Convert a QQ element into a Fraction"""
    return Fraction(int(value.numerator), int(value.denominator))


def format_fraction(value: Fraction) -> str:
    """Render a rational literal in the expression grammar"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _normalize(num: PolyElement, den: PolyElement) -> Tuple[PolyElement, PolyElement]:
    ring = num.ring
    if not den:
        raise DivisionByZeroError("division by the zero polynomial")
    if not num:
        return ring.zero, ring.one
    if den.is_ground:
        return num.quo_ground(den.LC), ring.one
    num, den = num.cancel(den)
    lc = den.LC
    if lc != ring.domain.one:
        num = num.quo_ground(lc)
        den = den.quo_ground(lc)
    return num, den


class RatFunc:
    """Exact rational function num/den over the declared base coordinates"""

    __slots__ = ("_ring", "_num", "_den", "_hash")

    def __init__(self, num: PolyElement, den: Optional[PolyElement] = None, normalized: bool = False):
        ring = num.ring
        if den is None:
            den = ring.one
        elif den.ring != ring:
            raise GeneratorMismatchError("numerator and denominator live in different rings")
        if not normalized:
            num, den = _normalize(num, den)
        self._ring = ring
        self._num = num
        self._den = den
        self._hash = None

    # Construction

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "RatFunc":
        ring = coefficient_ring(tuple(variables))
        return cls(ring.zero, ring.one, normalized=True)

    @classmethod
    def one(cls, variables: Sequence[str]) -> "RatFunc":
        ring = coefficient_ring(tuple(variables))
        return cls(ring.one, ring.one, normalized=True)

    @classmethod
    def constant(cls, value: Scalar, variables: Sequence[str]) -> "RatFunc":
        ring = coefficient_ring(tuple(variables))
        return cls(ring.ground_new(to_qq(value)), ring.one, normalized=True)

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "RatFunc":
        variables = tuple(variables)
        if name not in variables:
            raise UnknownVariableError(name, variables)
        ring = coefficient_ring(variables)
        return cls(ring.gens[variables.index(name)], ring.one, normalized=True)

    # Introspection

    @property
    def ring(self) -> PolyRing:
        return self._ring

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(str(s) for s in self._ring.symbols)

    @property
    def numerator(self) -> PolyElement:
        return self._num

    @property
    def denominator(self) -> PolyElement:
        return self._den

    @property
    def is_zero(self) -> bool:
        return not self._num

    @property
    def is_polynomial(self) -> bool:
        return self._den == self._ring.one

    @property
    def is_constant(self) -> bool:
        return self._num.is_ground and self._den.is_ground

    def constant_value(self) -> Fraction:
        """Value of a constant rational function"""
        if not self.is_constant:
            raise EvaluationError(f"{self} is not constant")
        if self.is_zero:
            return Fraction(0)
        return from_qq(self._num.LC) / from_qq(self._den.LC)

    # Arithmetic

    def _coerce(self, other) -> Optional["RatFunc"]:
        if isinstance(other, RatFunc):
            if other._ring != self._ring:
                raise GeneratorMismatchError(
                    f"coefficients over {self.variables} and {other.variables} cannot be combined"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc(self._ring.ground_new(to_qq(other)), self._ring.one, normalized=True)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_polynomial and other.is_polynomial:
            return RatFunc(self._num + other._num, self._ring.one, normalized=True)
        if self._den == other._den:
            return RatFunc(self._num + other._num, self._den)
        return RatFunc(self._num * other._den + other._num * self._den, self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self._num, self._den, normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatFunc(self._ring.zero, self._ring.one, normalized=True)
        if self.is_polynomial and other.is_polynomial:
            return RatFunc(self._num * other._num, self._ring.one, normalized=True)
        return RatFunc(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise DivisionByZeroError("division by the zero rational function")
        return RatFunc(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if self.is_zero:
                raise DivisionByZeroError("negative power of zero")
            return RatFunc(self._den ** (-exponent), self._num ** (-exponent))
        return RatFunc(self._num ** exponent, self._den ** exponent, normalized=True)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self._ring == other._ring and self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like the int or Fraction they compare equal to
            if self.is_constant:
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.variables, frozenset(self._num.items()), frozenset(self._den.items())))
        return self._hash

    # Calculus and evaluation

    def diff(self, var: str) -> "RatFunc":
        """Partial derivative with respect to a declared variable (quotient rule)"""
        variables = self.variables
        if var not in variables:
            raise UnknownVariableError(var, variables)
        gen = self._ring.gens[variables.index(var)]
        dnum = self._num.diff(gen)
        if self.is_polynomial:
            return RatFunc(dnum, self._ring.one, normalized=True)
        dden = self._den.diff(gen)
        return RatFunc(dnum * self._den - self._num * dden, self._den ** 2)

    def evaluate(self, point: Union[Mapping[str, Scalar], Sequence[Scalar]]) -> Fraction:
        """Exact value at a rational point"""
        variables = self.variables
        if isinstance(point, Mapping):
            missing = [v for v in variables if v not in point]
            if missing:
                raise EvaluationError(f"no value given for {', '.join(missing)}")
            values = [Fraction(point[v]) for v in variables]
        else:
            values = [Fraction(v) for v in point]
            if len(values) != len(variables):
                raise EvaluationError(f"expected {len(variables)} coordinates, got {len(values)}")
        den = _evaluate_poly(self._den, values)
        if den == 0:
            raise EvaluationError(f"denominator of {self} vanishes at {tuple(values)}")
        return _evaluate_poly(self._num, values) / den

    # Rendering

    def to_expression(self) -> str:
        """Render in the coefficient expression grammar"""
        names = self.variables
        num = format_poly(self._num, names)
        if self.is_polynomial:
            return num
        den = format_poly(self._den, names)
        if len(self._num) > 1:
            num = f"({num})"
        if not _is_atomic(self._den):
            den = f"({den})"
        return f"{num}/{den}"

    def __str__(self) -> str:
        return self.to_expression()

    def __repr__(self) -> str:
        return f"RatFunc({self.to_expression()!r})"


def _evaluate_poly(p: PolyElement, values: List[Fraction]) -> Fraction:
    total = Fraction(0)
    for monom, coeff in p.items():
        term = from_qq(coeff)
        for value, exp in zip(values, monom):
            if exp:
                term *= value ** exp
        total += term
    return total


def _is_atomic(p: PolyElement) -> bool:
    if len(p) != 1:
        return False
    (monom, coeff), = p.items()
    return coeff == p.ring.domain.one and sum(1 for e in monom if e) <= 1


def format_poly(p: PolyElement, names: Sequence[str]) -> str:
    """Render a polynomial with terms in descending grlex order"""
    terms = p.terms()
    if not terms:
        return "0"
    pieces = []
    for monom, coeff in terms:
        value = from_qq(coeff)
        negative = value < 0
        value = abs(value)
        factors = [name if exp == 1 else f"{name}^{exp}" for name, exp in zip(names, monom) if exp]
        if not factors:
            body = format_fraction(value)
        elif value == 1:
            body = "*".join(factors)
        else:
            body = format_fraction(value) + "*" + "*".join(factors)
        pieces.append((negative, body))
    negative, body = pieces[0]
    text = f"-{body}" if negative else body
    for negative, body in pieces[1:]:
        text += f" - {body}" if negative else f" + {body}"
    return text


# Expression parser
#
#   expr   := term (('+'|'-') term)*
#   term   := unary (('*'|'/') unary)*
#   unary  := ('+'|'-') unary | factor
#   factor := base ('^' uint)?
#   base   := int | name | '(' expr ')'

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


class _Parser:
    def __init__(self, text: str, variables: Tuple[str, ...]):
        self.text = text
        self.variables = variables
        self.ring = coefficient_ring(variables)
        self.tokens = self._tokenize()
        self.index = 0

    def _tokenize(self) -> List[Tuple[str, str, int]]:
        tokens = []
        pos = 0
        text = self.text
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            match = _TOKEN.match(text, pos)
            if not match:
                offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ExpressionSyntaxError(f"unexpected character '{text[offset]}'", offset, text)
            kind = match.lastgroup
            start = match.start(kind)
            tokens.append((kind, match.group(kind), start))
            pos = match.end()
        tokens.append(("end", "", len(text)))
        return tokens

    def peek(self) -> Tuple[str, str, int]:
        return self.tokens[self.index]

    def advance(self) -> Tuple[str, str, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def error(self, message: str, position: Optional[int] = None):
        if position is None:
            position = self.peek()[2]
        raise ExpressionSyntaxError(message, position, self.text)

    def parse(self) -> RatFunc:
        if self.peek()[0] == "end":
            self.error("empty expression")
        value = self.expr()
        kind, token, pos = self.peek()
        if kind != "end":
            self.error(f"unexpected '{token}'", pos)
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            _, op, _ = self.advance()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RatFunc:
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            _, op, pos = self.advance()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero:
                    raise DivisionByZeroError(f"division by zero at position {pos}")
                value = value / rhs
        return value

    def unary(self) -> RatFunc:
        kind, token, _ = self.peek()
        if kind == "op" and token in ("+", "-"):
            self.advance()
            value = self.unary()
            return -value if token == "-" else value
        return self.factor()

    def factor(self) -> RatFunc:
        value = self.base()
        kind, token, _ = self.peek()
        if kind == "op" and token == "^":
            self.advance()
            kind, token, pos = self.peek()
            if kind != "int":
                self.error("exponent must be a non-negative integer", pos)
            self.advance()
            value = value ** int(token)
        return value

    def base(self) -> RatFunc:
        kind, token, pos = self.advance()
        if kind == "int":
            return RatFunc(self.ring.ground_new(QQ(int(token))), self.ring.one, normalized=True)
        if kind == "name":
            if token not in self.variables:
                raise UnknownVariableError(token, self.variables)
            return RatFunc(self.ring.gens[self.variables.index(token)], self.ring.one, normalized=True)
        if kind == "op" and token == "(":
            value = self.expr()
            kind, token, pos = self.peek()
            if not (kind == "op" and token == ")"):
                self.error("expected ')'", pos)
            self.advance()
            return value
        if kind == "end":
            self.error("unexpected end of expression", pos)
        self.error(f"unexpected '{token}'", pos)


def poly_parse(text: str, variables: Sequence[str]) -> RatFunc:
    """Parse an expression over the declared variables into a normalized RatFunc"""
    return _Parser(str(text), tuple(variables)).parse()


def partial_derivative(f: RatFunc, var: str) -> RatFunc:
    """df/dvar"""
    return f.diff(var)
