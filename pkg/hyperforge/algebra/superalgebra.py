"""
Normal-form elements of the graded Poisson algebra of functions on T*[2]A[1]

Generators are the odd ``theta_a`` (bidegree (1,0)), the odd ``xi^a`` (bidegree
(0,1)) and the even ``p_i`` (bidegree (1,1)); base coordinates ``x^i`` live in
the RatFunc coefficients. Every monomial is stored in the canonical order
theta-block, p-block, xi-block with strictly increasing odd indices, and any
reordering sign is folded into the coefficient.

The big bracket is

    {F,G} = sum_i (dF/dp_i * dG/dx^i - dF/dx^i * dG/dp_i)
          + sum_a (F d<theta_a * d>xi^a G + F d<xi^a * d>theta_a G)

where ``d<`` is the right derivative and ``d>`` the left derivative, so that
{p_i, x^i} = {theta_a, xi^a} = {xi^a, theta_a} = 1.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from ..common.errors import GeneratorMismatchError, ShapeMismatchError
from .coeff import RatFunc, Scalar, poly_parse


@dataclass(frozen=True)
class GeneratorSet:
    """Base dimension n, fiber rank d and the base-coordinate names"""

    n: int
    d: int
    variables: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if self.n < 0 or self.d < 1:
            raise ShapeMismatchError(f"need n >= 0 and d >= 1, got n={self.n}, d={self.d}")
        if len(self.variables) != self.n:
            raise ShapeMismatchError(f"{len(self.variables)} variable names for base dimension {self.n}")
        if len(set(self.variables)) != self.n:
            raise ShapeMismatchError(f"duplicate variable names in {self.variables}")

    def theta_names(self) -> List[str]:
        return [f"th{a + 1}" for a in range(self.d)]

    def xi_names(self) -> List[str]:
        return [f"xi{a + 1}" for a in range(self.d)]

    def p_names(self) -> List[str]:
        return [f"p{i + 1}" for i in range(self.n)]

    def coefficient(self, value: Union[RatFunc, Scalar, str]) -> RatFunc:
        """Coerce a scalar or expression into this set's coefficient field"""
        if isinstance(value, RatFunc):
            if value.variables != self.variables:
                raise GeneratorMismatchError(f"coefficient over {value.variables}, expected {self.variables}")
            return value
        if isinstance(value, str):
            return poly_parse(value, self.variables)
        return RatFunc.constant(value, self.variables)


class SuperMonomial(NamedTuple):
    """theta_I p^E xi_J in canonical order (0-based indices)"""

    theta: Tuple[int, ...]
    p: Tuple[int, ...]
    xi: Tuple[int, ...]

    @property
    def p_degree(self) -> int:
        return sum(self.p)

    @property
    def bidegree(self) -> "Bidegree":
        pdeg = self.p_degree
        return Bidegree(pdeg + len(self.theta), pdeg + len(self.xi))

    @property
    def degree(self) -> int:
        """Total degree: odd generators count 1, p counts 2"""
        return len(self.theta) + len(self.xi) + 2 * self.p_degree

    @property
    def parity(self) -> int:
        return (len(self.theta) + len(self.xi)) % 2

    def render(self) -> str:
        factors = [f"th{a + 1}" for a in self.theta]
        for i, exp in enumerate(self.p):
            if exp == 1:
                factors.append(f"p{i + 1}")
            elif exp:
                factors.append(f"p{i + 1}^{exp}")
        factors.extend(f"xi{a + 1}" for a in self.xi)
        return "*".join(factors)


class Bidegree(NamedTuple):
    k: int
    l: int

    def __str__(self) -> str:
        return f"({self.k},{self.l})"


def _merge(left: Tuple[int, ...], right: Tuple[int, ...]) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """Sign and sorted union of two increasing odd index tuples, None if they overlap"""
    if not left:
        return 1, right
    if not right:
        return 1, left
    if set(left) & set(right):
        return None
    inversions = sum(1 for a in left for b in right if a > b)
    return (-1 if inversions % 2 else 1), tuple(sorted(left + right))


def monomial_product(a: SuperMonomial, b: SuperMonomial) -> Optional[Tuple[int, SuperMonomial]]:
    """Koszul sign and canonical monomial of a*b, or None when the product vanishes"""
    sign = -1 if (len(a.xi) * len(b.theta)) % 2 else 1
    theta = _merge(a.theta, b.theta)
    if theta is None:
        return None
    xi = _merge(a.xi, b.xi)
    if xi is None:
        return None
    p = tuple(x + y for x, y in zip(a.p, b.p))
    return sign * theta[0] * xi[0], SuperMonomial(theta[1], p, xi[1])


# Odd derivatives of a monomial; each returns (sign, reduced monomial) or None


def _right_theta(m: SuperMonomial, a: int):
    if a not in m.theta:
        return None
    k = m.theta.index(a)
    sign = -1 if (len(m.theta) - k - 1 + len(m.xi)) % 2 else 1
    return sign, m._replace(theta=m.theta[:k] + m.theta[k + 1:])


def _left_theta(m: SuperMonomial, a: int):
    if a not in m.theta:
        return None
    k = m.theta.index(a)
    return (-1 if k % 2 else 1), m._replace(theta=m.theta[:k] + m.theta[k + 1:])


def _right_xi(m: SuperMonomial, a: int):
    if a not in m.xi:
        return None
    k = m.xi.index(a)
    sign = -1 if (len(m.xi) - k - 1) % 2 else 1
    return sign, m._replace(xi=m.xi[:k] + m.xi[k + 1:])


def _left_xi(m: SuperMonomial, a: int):
    if a not in m.xi:
        return None
    k = m.xi.index(a)
    return (-1 if (len(m.theta) + k) % 2 else 1), m._replace(xi=m.xi[:k] + m.xi[k + 1:])


def _lower_p(m: SuperMonomial, i: int) -> SuperMonomial:
    p = list(m.p)
    p[i] -= 1
    return m._replace(p=tuple(p))


class SuperElem:
    """Sparse map SuperMonomial -> nonzero RatFunc over a fixed GeneratorSet"""

    __slots__ = ("gens", "_terms")

    def __init__(self, gens: GeneratorSet, terms: Optional[Dict[SuperMonomial, RatFunc]] = None):
        self.gens = gens
        self._terms = {m: c for m, c in (terms or {}).items() if not c.is_zero}

    # Constructors

    @classmethod
    def zero(cls, gens: GeneratorSet) -> "SuperElem":
        return cls(gens)

    @classmethod
    def monomial(cls, gens: GeneratorSet, theta: Sequence[int] = (), p: Optional[Sequence[int]] = None,
                 xi: Sequence[int] = (), coeff: Union[RatFunc, Scalar, str] = 1) -> "SuperElem":
        """Product theta_{a1}...theta_{ak} p^E xi^{b1}...xi^{bl} in the given order (0-based)"""
        sign_theta = _sort_sign(theta)
        sign_xi = _sort_sign(xi)
        if sign_theta == 0 or sign_xi == 0:
            return cls(gens)
        exponents = tuple(p) if p is not None else (0,) * gens.n
        if len(exponents) != gens.n:
            raise ShapeMismatchError(f"p exponent vector of length {len(exponents)} for n={gens.n}")
        mono = SuperMonomial(tuple(sorted(theta)), exponents, tuple(sorted(xi)))
        return cls(gens, {mono: gens.coefficient(coeff) * (sign_theta * sign_xi)})

    @classmethod
    def constant(cls, gens: GeneratorSet, value: Union[RatFunc, Scalar, str]) -> "SuperElem":
        return cls.monomial(gens, coeff=value)

    @classmethod
    def theta(cls, gens: GeneratorSet, a: int) -> "SuperElem":
        return cls.monomial(gens, theta=(a,))

    @classmethod
    def xi(cls, gens: GeneratorSet, a: int) -> "SuperElem":
        return cls.monomial(gens, xi=(a,))

    @classmethod
    def p(cls, gens: GeneratorSet, i: int) -> "SuperElem":
        exponents = [0] * gens.n
        exponents[i] = 1
        return cls.monomial(gens, p=exponents)

    @classmethod
    def coordinate(cls, gens: GeneratorSet, i: int) -> "SuperElem":
        """The base coordinate x^i as a degree-0 element"""
        return cls.constant(gens, RatFunc.variable(gens.variables[i], gens.variables))

    # Access

    @property
    def terms(self) -> Dict[SuperMonomial, RatFunc]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[SuperMonomial, RatFunc]]:
        return iter(self._terms.items())

    def coefficient(self, mono: SuperMonomial) -> RatFunc:
        return self._terms.get(mono, RatFunc.zero(self.gens.variables))

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def bidegrees(self) -> List[Bidegree]:
        return sorted({m.bidegree for m in self._terms})

    def is_bihomogeneous(self, k: int, l: int) -> bool:
        """True for zero and for elements living entirely in F^{k,l}"""
        return all(m.bidegree == (k, l) for m in self._terms)

    def components(self) -> List[Tuple[Bidegree, "SuperElem"]]:
        return bidegree_components(self)

    # Arithmetic

    def _check(self, other: "SuperElem"):
        if self.gens != other.gens:
            raise GeneratorMismatchError(f"elements over {self.gens} and {other.gens} cannot be combined")

    def __add__(self, other: "SuperElem") -> "SuperElem":
        if not isinstance(other, SuperElem):
            return NotImplemented
        self._check(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return SuperElem(self.gens, terms)

    def __neg__(self) -> "SuperElem":
        return SuperElem(self.gens, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "SuperElem") -> "SuperElem":
        if not isinstance(other, SuperElem):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Union[RatFunc, Scalar]) -> "SuperElem":
        if not isinstance(factor, RatFunc):
            factor = self.gens.coefficient(factor)
        if factor.is_zero:
            return SuperElem(self.gens)
        return SuperElem(self.gens, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, SuperElem):
            return super_mul(self, other)
        if isinstance(other, (RatFunc, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (RatFunc, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def bracket(self, other: "SuperElem") -> "SuperElem":
        return big_bracket(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperElem):
            return NotImplemented
        return self.gens == other.gens and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.gens, frozenset(self._terms.items())))

    # Rendering

    def render(self) -> str:
        """Terms sorted by bidegree then monomial; coefficients in the expression grammar"""
        if not self._terms:
            return "0"
        ordered = sorted(self._terms.items(), key=lambda item: (item[0].bidegree, item[0]))
        pieces = []
        for mono, coeff in ordered:
            body = mono.render()
            text = coeff.to_expression()
            negative = text.startswith("-") and _is_single_term(coeff)
            if negative:
                text = text[1:]
            if not body:
                term = text
            elif text == "1":
                term = body
            elif _is_single_term(coeff):
                term = f"{text}*{body}"
            else:
                term = f"({text})*{body}"
            pieces.append((negative, term))
        negative, term = pieces[0]
        out = f"-{term}" if negative else term
        for negative, term in pieces[1:]:
            out += f" - {term}" if negative else f" + {term}"
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SuperElem({self.render()!r})"


def _sort_sign(indices: Sequence[int]) -> int:
    """Sign of the permutation sorting distinct indices, 0 on repeats"""
    indices = list(indices)
    if len(set(indices)) != len(indices):
        return 0
    inversions = sum(1 for i in range(len(indices)) for j in range(i + 1, len(indices)) if indices[i] > indices[j])
    return -1 if inversions % 2 else 1


def _is_single_term(coeff: RatFunc) -> bool:
    return coeff.is_polynomial and len(coeff.numerator) == 1


def _accumulate(terms: Dict[SuperMonomial, RatFunc], mono: SuperMonomial, value: RatFunc):
    if mono in terms:
        terms[mono] = terms[mono] + value
    else:
        terms[mono] = value


def super_mul(a: SuperElem, b: SuperElem) -> SuperElem:
    """Graded-commutative product with Koszul signs"""
    a._check(b)
    terms: Dict[SuperMonomial, RatFunc] = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            product = monomial_product(ma, mb)
            if product is None:
                continue
            sign, mono = product
            value = ca * cb
            _accumulate(terms, mono, value if sign > 0 else -value)
    return SuperElem(a.gens, terms)


def big_bracket(a: SuperElem, b: SuperElem) -> SuperElem:
    """The degree (-1,-1) Poisson bracket extended from the generator table"""
    a._check(b)
    gens = a.gens
    names = gens.variables
    terms: Dict[SuperMonomial, RatFunc] = {}

    def emit(left: SuperMonomial, right: SuperMonomial, value: RatFunc):
        if value.is_zero:
            return
        product = monomial_product(left, right)
        if product is None:
            return
        sign, mono = product
        _accumulate(terms, mono, value if sign > 0 else -value)

    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            for i, name in enumerate(names):
                if ma.p[i] and not cb.is_constant:
                    emit(_lower_p(ma, i), mb, ca * cb.diff(name) * ma.p[i])
                if mb.p[i] and not ca.is_constant:
                    emit(ma, _lower_p(mb, i), -(ca.diff(name) * cb * mb.p[i]))
            for e in ma.theta:
                right = _right_theta(ma, e)
                left = _left_xi(mb, e)
                if left is not None:
                    emit(right[1], left[1], ca * cb * (right[0] * left[0]))
            for e in ma.xi:
                right = _right_xi(ma, e)
                left = _left_theta(mb, e)
                if left is not None:
                    emit(right[1], left[1], ca * cb * (right[0] * left[0]))
    return SuperElem(gens, terms)


def bidegree_components(a: SuperElem) -> List[Tuple[Bidegree, SuperElem]]:
    """Bihomogeneous parts of a, ordered by bidegree"""
    buckets: Dict[Bidegree, Dict[SuperMonomial, RatFunc]] = {}
    for mono, coeff in a.items():
        buckets.setdefault(mono.bidegree, {})[mono] = coeff
    return [(bideg, SuperElem(a.gens, buckets[bideg])) for bideg in sorted(buckets)]


def total_degree(a: SuperElem) -> Optional[int]:
    """Common total degree of all terms, None when mixed"""
    degrees = {m.degree for m, _ in a.items()}
    if len(degrees) == 1:
        return degrees.pop()
    return 0 if not degrees else None


def sum_elems(gens: GeneratorSet, elems: Iterable[SuperElem]) -> SuperElem:
    total = SuperElem.zero(gens)
    for elem in elems:
        total = total + elem
    return total
