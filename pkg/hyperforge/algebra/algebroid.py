"""
Lie algebroid structures as elements mu of bidegree (1,2)

Every algebroid operation is a derived bracket of the big bracket: the Lie
bracket of sections is {{X,mu},Y}, the differential is {mu,.}, deformations by
a (1,1)-tensor or a bivector are {N,mu} and {pi,mu}, and so on. The tensor
wrappers below pair a SuperElem with its component array; the two always agree
under the embedding constants in ``conventions``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..common.errors import (
    DegreeUnderflowError,
    GeneratorMismatchError,
    ShapeMismatchError,
    UnsupportedDegreeError,
)
from .coeff import RatFunc, Scalar
from .conventions import (
    ANCHOR_EMBEDDING,
    FORM_EMBEDDING,
    MULTIVECTOR_EMBEDDING,
    VALUED_FORM_EMBEDDING,
)
from .matrix import CoeffMatrix
from .superalgebra import GeneratorSet, SuperElem, SuperMonomial, big_bracket

CoeffLike = Union[RatFunc, Scalar, str]
IndexTuple = Tuple[int, ...]

# Highest form degree of an A-valued form
MAX_VALUED_DEGREE = 3


def _zero_p(gens: GeneratorSet) -> Tuple[int, ...]:
    return (0,) * gens.n


def _increasing(degree: int, d: int) -> List[IndexTuple]:
    return list(combinations(range(d), degree))


def _permutation_sign(order: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(order)) for j in range(i + 1, len(order)) if order[i] > order[j])
    return -1 if inversions % 2 else 1


def _minor(vectors: Sequence[Sequence[RatFunc]], rows: IndexTuple, variables) -> RatFunc:
    """det[vectors[j][rows[m]]] by the Leibniz formula (sizes <= 3)"""
    size = len(rows)
    total = RatFunc.zero(variables)
    for perm in permutations(range(size)):
        term = RatFunc.one(variables) * _permutation_sign(perm)
        for m, j in enumerate(perm):
            term = term * vectors[j][rows[m]]
            if term.is_zero:
                break
        total = total + term
    return total


@dataclass(frozen=True, eq=False)
class AlgebroidSpec:
    """
    Anchor rho^i_a and structure functions c^c_{ab} of a Lie algebroid

    ``anchor`` is the n x d matrix of rho^i_a (None when n = 0); ``structure``
    maps 0-based (a, b, c) with a < b to c^c_{ab}.
    """

    n: int
    d: int
    variables: Tuple[str, ...]
    anchor: Optional[CoeffMatrix] = None
    structure: Mapping[Tuple[int, int, int], RatFunc] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        gens = GeneratorSet(self.n, self.d, tuple(self.variables))
        object.__setattr__(self, "variables", gens.variables)
        if self.anchor is not None:
            if self.anchor.shape != (self.n, self.d):
                raise ShapeMismatchError(f"anchor has shape {self.anchor.shape}, expected ({self.n}, {self.d})")
            if self.anchor.variables != gens.variables:
                raise GeneratorMismatchError("anchor entries use a different variable list")
        elif self.n:
            raise ShapeMismatchError(f"an anchor matrix is required for base dimension {self.n}")
        structure = {}
        for (a, b, c), value in self.structure.items():
            if not (0 <= a < b < self.d and 0 <= c < self.d):
                raise ShapeMismatchError(f"structure entry ({a + 1}, {b + 1}, {c + 1}) out of range or a >= b")
            value = gens.coefficient(value)
            if not value.is_zero:
                structure[(a, b, c)] = value
        object.__setattr__(self, "structure", structure)

    @property
    def generators(self) -> GeneratorSet:
        return GeneratorSet(self.n, self.d, self.variables)

    def rho(self, i: int, a: int) -> RatFunc:
        return self.anchor[i, a]

    def structure_constant(self, a: int, b: int, c: int) -> RatFunc:
        """c^c_{ab}, antisymmetric in (a, b)"""
        if a == b:
            return RatFunc.zero(self.variables)
        if a < b:
            return self.structure.get((a, b, c), RatFunc.zero(self.variables))
        return -self.structure.get((b, a, c), RatFunc.zero(self.variables))


@dataclass(eq=False)
class Mu:
    """
    Algebroid structure element

    Bidegree (1,2) for an algebroid on A; a bivector deformation {pi, mu}
    lives in (2,1) and is flagged ``dual``. ``jacobi`` is filled in by
    check_jacobi.
    """

    elem: SuperElem
    dual: bool = False
    jacobi: Optional[bool] = None
    spec: Optional[AlgebroidSpec] = None

    def __post_init__(self):
        expected = (2, 1) if self.dual else (1, 2)
        if not self.elem.is_bihomogeneous(*expected):
            raise ShapeMismatchError(f"structure element must have bidegree {expected}, got {self.elem.bidegrees()}")

    @property
    def gens(self) -> GeneratorSet:
        return self.elem.gens

    @property
    def is_zero(self) -> bool:
        return self.elem.is_zero


class _Embedded:
    """A SuperElem together with the component array it embeds"""

    __slots__ = ("elem", "components", "degree")

    def __init__(self, elem: SuperElem, components: Dict, degree: int):
        self.elem = elem
        self.components = components
        self.degree = degree

    @property
    def gens(self) -> GeneratorSet:
        return self.elem.gens

    @property
    def is_zero(self) -> bool:
        return self.elem.is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, _Embedded):
            return NotImplemented
        return self.degree == other.degree and self.elem == other.elem

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.degree, self.elem))

    def __add__(self, other):
        return type(self).from_elem(self.elem + other.elem, self.degree)

    def __sub__(self, other):
        return type(self).from_elem(self.elem - other.elem, self.degree)

    def __neg__(self):
        return type(self).from_elem(-self.elem, self.degree)

    def scale(self, factor: Union[RatFunc, Scalar]):
        return type(self).from_elem(self.elem.scale(factor), self.degree)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.elem.render()!r})"


class Form(_Embedded):
    """Degree-l form, sum over increasing I of s_I xi^I"""

    @classmethod
    def from_components(cls, gens: GeneratorSet, degree: int, components: Mapping[IndexTuple, CoeffLike]) -> "Form":
        terms = {}
        comps = {}
        for index, value in components.items():
            index = tuple(index)
            if len(index) != degree or list(index) != sorted(set(index)) or any(a >= gens.d for a in index):
                raise ShapeMismatchError(f"form component index {index} is not increasing of length {degree}")
            value = gens.coefficient(value)
            if value.is_zero:
                continue
            comps[index] = value
            terms[SuperMonomial((), _zero_p(gens), index)] = value * FORM_EMBEDDING
        return cls(SuperElem(gens, terms), comps, degree)

    @classmethod
    def from_elem(cls, elem: SuperElem, degree: Optional[int] = None) -> "Form":
        degree = _infer_degree(elem, degree, lambda k, l: k == 0, lambda bd: bd.l)
        comps = {}
        for mono, coeff in elem.items():
            if mono.theta or any(mono.p) or len(mono.xi) != degree:
                raise ShapeMismatchError(f"{elem} is not a {degree}-form")
            comps[mono.xi] = coeff * FORM_EMBEDDING
        return cls(elem, comps, degree)

    @classmethod
    def scalar(cls, gens: GeneratorSet, value: CoeffLike) -> "Form":
        return cls.from_components(gens, 0, {(): value})

    @classmethod
    def from_vector(cls, gens: GeneratorSet, values: Sequence[CoeffLike]) -> "Form":
        if len(values) != gens.d:
            raise ShapeMismatchError(f"1-form with {len(values)} components for rank {gens.d}")
        return cls.from_components(gens, 1, {(a,): v for a, v in enumerate(values)})

    @classmethod
    def from_matrix(cls, gens: GeneratorSet, matrix: CoeffMatrix) -> "Form":
        """2-form with s(X,Y) = X^T W Y"""
        _check_square(matrix, gens)
        if not matrix.is_antisymmetric():
            raise ShapeMismatchError("2-form matrix is not antisymmetric")
        return cls.from_components(gens, 2, {(a, b): matrix[a, b] for a, b in _increasing(2, gens.d)})

    def component(self, index: IndexTuple) -> RatFunc:
        return _antisymmetric_lookup(self.components, index, self.gens.variables)

    def value(self) -> RatFunc:
        return self.component(())

    def vector(self) -> Tuple[RatFunc, ...]:
        return tuple(self.component((a,)) for a in range(self.gens.d))

    def matrix(self) -> CoeffMatrix:
        d = self.gens.d
        return CoeffMatrix.from_function(d, d, lambda a, b: self.component((a, b)), self.gens.variables)

    def evaluate(self, *sections: "Section") -> RatFunc:
        """s(Y_1, ..., Y_l)"""
        if len(sections) != self.degree:
            raise ShapeMismatchError(f"{self.degree}-form evaluated on {len(sections)} sections")
        variables = self.gens.variables
        vectors = [s.vector() for s in sections]
        total = RatFunc.zero(variables)
        for index, value in self.components.items():
            total = total + value * _minor(vectors, index, variables)
        return total


class MultiVector(_Embedded):
    """Degree-k multivector, sum over increasing I of P^I theta_I"""

    @classmethod
    def from_components(cls, gens: GeneratorSet, degree: int, components: Mapping[IndexTuple, CoeffLike]):
        terms = {}
        comps = {}
        for index, value in components.items():
            index = tuple(index)
            if len(index) != degree or list(index) != sorted(set(index)) or any(a >= gens.d for a in index):
                raise ShapeMismatchError(f"multivector index {index} is not increasing of length {degree}")
            value = gens.coefficient(value)
            if value.is_zero:
                continue
            comps[index] = value
            terms[SuperMonomial(index, _zero_p(gens), ())] = value * MULTIVECTOR_EMBEDDING
        if cls is MultiVector and degree == 1:
            return Section(SuperElem(gens, terms), comps, 1)
        return cls(SuperElem(gens, terms), comps, degree)

    @classmethod
    def from_elem(cls, elem: SuperElem, degree: Optional[int] = None):
        degree = _infer_degree(elem, degree, lambda k, l: l == 0, lambda bd: bd.k)
        comps = {}
        for mono, coeff in elem.items():
            if mono.xi or any(mono.p) or len(mono.theta) != degree:
                raise ShapeMismatchError(f"{elem} is not a {degree}-vector")
            comps[mono.theta] = coeff * MULTIVECTOR_EMBEDDING
        if degree == 1 and cls is MultiVector:
            cls = Section
        return cls(elem, comps, degree)

    @classmethod
    def from_matrix(cls, gens: GeneratorSet, matrix: CoeffMatrix) -> "MultiVector":
        """Bivector with pi(alpha, beta) = alpha^T P beta"""
        _check_square(matrix, gens)
        if not matrix.is_antisymmetric():
            raise ShapeMismatchError("bivector matrix is not antisymmetric")
        return cls.from_components(gens, 2, {(a, b): matrix[a, b] for a, b in _increasing(2, gens.d)})

    def component(self, index: IndexTuple) -> RatFunc:
        return _antisymmetric_lookup(self.components, index, self.gens.variables)

    def matrix(self) -> CoeffMatrix:
        d = self.gens.d
        return CoeffMatrix.from_function(d, d, lambda a, b: self.component((a, b)), self.gens.variables)

    def sharp(self, alpha: Form) -> "Section":
        """pi#(alpha) = P^T alpha"""
        return Section.from_vector(self.gens, self.matrix().T.apply(alpha.vector()))


class Section(MultiVector):
    """Section of A, sum X^a theta_a"""

    @classmethod
    def from_vector(cls, gens: GeneratorSet, values: Sequence[CoeffLike]) -> "Section":
        if len(values) != gens.d:
            raise ShapeMismatchError(f"section with {len(values)} components for rank {gens.d}")
        return cls.from_components(gens, 1, {(a,): v for a, v in enumerate(values)})

    @classmethod
    def basis(cls, gens: GeneratorSet, a: int) -> "Section":
        return cls.from_components(gens, 1, {(a,): 1})

    @classmethod
    def from_elem(cls, elem: SuperElem, degree: Optional[int] = 1) -> "Section":
        section = MultiVector.from_elem(elem, 1)
        return cls(section.elem, section.components, 1)

    def vector(self) -> Tuple[RatFunc, ...]:
        return tuple(self.component((a,)) for a in range(self.gens.d))


class ValuedForm(_Embedded):
    """A-valued k-form, sum over c and increasing I of K^c_I theta_c xi^I"""

    @classmethod
    def from_components(cls, gens: GeneratorSet, degree: int, components: Mapping[Tuple[int, IndexTuple], CoeffLike]):
        if degree > MAX_VALUED_DEGREE:
            raise UnsupportedDegreeError(f"A-valued forms of degree {degree} are not supported")
        terms = {}
        comps = {}
        for (c, index), value in components.items():
            index = tuple(index)
            if len(index) != degree or list(index) != sorted(set(index)) or not 0 <= c < gens.d:
                raise ShapeMismatchError(f"valued-form index ({c}, {index}) is malformed")
            value = gens.coefficient(value)
            if value.is_zero:
                continue
            comps[(c, index)] = value
            terms[SuperMonomial((c,), _zero_p(gens), index)] = value * VALUED_FORM_EMBEDDING
        if cls is ValuedForm and degree == 1:
            cls = EndoTensor
        return cls(SuperElem(gens, terms), comps, degree)

    @classmethod
    def from_elem(cls, elem: SuperElem, degree: Optional[int] = None):
        degree = _infer_degree(elem, degree, lambda k, l: k == 1, lambda bd: bd.l)
        if degree > MAX_VALUED_DEGREE:
            raise UnsupportedDegreeError(f"A-valued forms of degree {degree} are not supported")
        comps = {}
        for mono, coeff in elem.items():
            if len(mono.theta) != 1 or any(mono.p) or len(mono.xi) != degree:
                raise ShapeMismatchError(f"{elem} is not an A-valued {degree}-form")
            comps[(mono.theta[0], mono.xi)] = coeff * VALUED_FORM_EMBEDDING
        if cls is ValuedForm and degree == 1:
            cls = EndoTensor
        return cls(elem, comps, degree)

    def component(self, c: int, index: IndexTuple) -> RatFunc:
        variables = self.gens.variables
        if len(set(index)) != len(index):
            return RatFunc.zero(variables)
        ordered = tuple(sorted(index))
        value = self.components.get((c, ordered), RatFunc.zero(variables))
        return value * _permutation_sign([ordered.index(a) for a in index])

    def evaluate(self, *sections: "Section") -> "Section":
        """K(Y_1, ..., Y_k) as a section"""
        if len(sections) != self.degree:
            raise ShapeMismatchError(f"A-valued {self.degree}-form evaluated on {len(sections)} sections")
        variables = self.gens.variables
        vectors = [s.vector() for s in sections]
        out = [RatFunc.zero(variables) for _ in range(self.gens.d)]
        for (c, index), value in self.components.items():
            out[c] = out[c] + value * _minor(vectors, index, variables)
        return Section.from_vector(self.gens, out)


class EndoTensor(ValuedForm):
    """(1,1)-tensor N^a_b; acts on column vectors as the matrix N"""

    @classmethod
    def from_matrix(cls, gens: GeneratorSet, matrix: CoeffMatrix) -> "EndoTensor":
        _check_square(matrix, gens)
        comps = {(a, (b,)): matrix[a, b] for a in range(gens.d) for b in range(gens.d)}
        tensor = ValuedForm.from_components(gens, 1, comps)
        return cls(tensor.elem, tensor.components, 1)

    @classmethod
    def identity(cls, gens: GeneratorSet) -> "EndoTensor":
        return cls.from_matrix(gens, CoeffMatrix.identity(gens.d, gens.variables))

    @classmethod
    def from_elem(cls, elem: SuperElem, degree: Optional[int] = 1) -> "EndoTensor":
        tensor = ValuedForm.from_elem(elem, 1)
        return cls(tensor.elem, tensor.components, 1)

    def matrix(self) -> CoeffMatrix:
        d = self.gens.d
        return CoeffMatrix.from_function(d, d, lambda a, b: self.component(a, (b,)), self.gens.variables)

    def apply(self, section: Section) -> Section:
        return Section.from_vector(self.gens, self.matrix().apply(section.vector()))

    def transpose_apply(self, alpha: Form) -> Form:
        """N*(alpha) = N^T alpha"""
        return Form.from_vector(self.gens, self.matrix().T.apply(alpha.vector()))

    def compose(self, other: "EndoTensor") -> "EndoTensor":
        """self o other"""
        return EndoTensor.from_matrix(self.gens, self.matrix() @ other.matrix())

    def square(self) -> "EndoTensor":
        return self.compose(self)


def scalar_part(elem: SuperElem) -> RatFunc:
    """Coefficient of the empty monomial"""
    gens = elem.gens
    return elem.coefficient(SuperMonomial((), _zero_p(gens), ()))


def _check_square(matrix: CoeffMatrix, gens: GeneratorSet):
    if matrix.shape != (gens.d, gens.d):
        raise ShapeMismatchError(f"expected a {gens.d}x{gens.d} matrix, got {matrix.shape}")
    if matrix.variables != gens.variables:
        raise GeneratorMismatchError(f"matrix over {matrix.variables}, expected {gens.variables}")


def _antisymmetric_lookup(components: Mapping[IndexTuple, RatFunc], index: IndexTuple, variables) -> RatFunc:
    index = tuple(index)
    if len(set(index)) != len(index):
        return RatFunc.zero(variables)
    ordered = tuple(sorted(index))
    value = components.get(ordered, RatFunc.zero(variables))
    return value * _permutation_sign([ordered.index(a) for a in index])


def _infer_degree(elem: SuperElem, degree, shape_ok, pick) -> int:
    bidegrees = elem.bidegrees()
    if any(not shape_ok(*bd) for bd in bidegrees) or len(bidegrees) > 1:
        raise ShapeMismatchError(f"element of bidegrees {[str(bd) for bd in bidegrees]} has the wrong shape")
    if degree is None:
        if not bidegrees:
            raise ShapeMismatchError("cannot infer the degree of the zero element")
        degree = pick(bidegrees[0])
    elif bidegrees and pick(bidegrees[0]) != degree:
        raise ShapeMismatchError(f"expected degree {degree}, got bidegree {bidegrees[0]}")
    return degree


# Structure elements


def build_mu(spec: AlgebroidSpec) -> Mu:
    """mu = sum rho^i_a p_i xi^a + (A-valued embedding of c^c_{ab})"""
    gens = spec.generators
    terms: Dict[SuperMonomial, RatFunc] = {}
    for i in range(spec.n):
        p = [0] * spec.n
        p[i] = 1
        for a in range(spec.d):
            value = spec.rho(i, a)
            if not value.is_zero:
                terms[SuperMonomial((), tuple(p), (a,))] = value * ANCHOR_EMBEDDING
    for (a, b, c), value in spec.structure.items():
        terms[SuperMonomial((c,), _zero_p(gens), (a, b))] = value * VALUED_FORM_EMBEDDING
    return Mu(SuperElem(gens, terms), spec=spec)


def check_jacobi(mu: Mu) -> bool:
    """{mu, mu} == 0; records the flag on mu"""
    mu.jacobi = big_bracket(mu.elem, mu.elem).is_zero
    return mu.jacobi


def lie_derivative(mu: Mu, X: Section, F: SuperElem) -> SuperElem:
    """L_X F = {{X, mu}, F}"""
    return big_bracket(big_bracket(X.elem, mu.elem), F)


def lie_bracket(mu: Mu, X: Section, Y: Section) -> Section:
    return Section.from_elem(lie_derivative(mu, X, Y.elem))


def anchor_apply(mu: Mu, X: Section, f: RatFunc) -> RatFunc:
    """rho(X) f = {{X, mu}, f}"""
    result = lie_derivative(mu, X, SuperElem.constant(mu.gens, f))
    return scalar_part(result)


def differential(mu: Mu, sigma: Form) -> Form:
    """d sigma = {mu, sigma}"""
    return Form.from_elem(big_bracket(mu.elem, sigma.elem), sigma.degree + 1)


def schouten(mu: Mu, P: MultiVector, Q: MultiVector) -> MultiVector:
    """[P, Q] = {{P, mu}, Q}"""
    degree = P.degree + Q.degree - 1
    elem = big_bracket(big_bracket(P.elem, mu.elem), Q.elem)
    if degree < 0:
        return Form.from_elem(elem, 0)
    return MultiVector.from_elem(elem, degree)


def dual_bracket(mu_pi: Mu, alpha: Form, beta: Form) -> Form:
    """[alpha, beta]_pi = {{alpha, mu_pi}, beta}"""
    return Form.from_elem(big_bracket(big_bracket(alpha.elem, mu_pi.elem), beta.elem), 1)


def deform_by_endo(mu: Mu, N: EndoTensor) -> Mu:
    """mu_N = {N, mu}"""
    return Mu(big_bracket(N.elem, mu.elem), dual=mu.dual)


def deform_twice(mu: Mu, N: EndoTensor, S: EndoTensor) -> Mu:
    """mu_{N,S} = {S, {N, mu}}"""
    return Mu(big_bracket(S.elem, big_bracket(N.elem, mu.elem)), dual=mu.dual)


def deform_by_bivector(mu: Mu, pi: MultiVector) -> Mu:
    """mu_pi = {pi, mu}, an algebroid structure on the dual when pi is Poisson"""
    if pi.degree != 2:
        raise ShapeMismatchError(f"deformation needs a bivector, got a {pi.degree}-vector")
    return Mu(big_bracket(pi.elem, mu.elem), dual=True)


def torsion(mu: Mu, N: EndoTensor) -> ValuedForm:
    """TN = 1/2 (mu_{N,N} - mu_{N^2})"""
    twice = big_bracket(N.elem, big_bracket(N.elem, mu.elem))
    squared = big_bracket(N.square().elem, mu.elem)
    return ValuedForm.from_elem((twice - squared).scale(Fraction(1, 2)), 2)


def concomitant(mu: Mu, pi: MultiVector, N: EndoTensor) -> SuperElem:
    """C_{pi,N} = {pi, {N, mu}} + {N, {pi, mu}}"""
    return big_bracket(pi.elem, big_bracket(N.elem, mu.elem)) + big_bracket(N.elem, big_bracket(pi.elem, mu.elem))


def evaluate(K: Union[ValuedForm, Form], *sections: Section):
    """Value of an A-valued form (a section) or a form (a function) on sections"""
    return K.evaluate(*sections)


def _shuffles(l: int, rest: int) -> Iterable[Tuple[int, Tuple[int, ...]]]:
    """(sign, permutation) over (l, rest)-shuffles"""
    total = l + rest
    for head in combinations(range(total), l):
        tail = tuple(i for i in range(total) if i not in head)
        order = head + tail
        yield _permutation_sign(order), order


def insertion(K: ValuedForm, L: ValuedForm) -> ValuedForm:
    """
    i_L K of degree k + l - 1

    (i_L K)(Y_1..Y_r) = sum over (l, k-1)-shuffles s of
    sign(s) K(L(Y_s(1)..Y_s(l)), Y_s(l+1)..Y_s(r)).
    """
    if K.gens != L.gens:
        raise GeneratorMismatchError("insertion operands live over different generator sets")
    if K.degree < 1:
        raise DegreeUnderflowError("cannot insert into an A-valued form of degree 0")
    r = K.degree + L.degree - 1
    if r > 2:
        raise UnsupportedDegreeError(f"insertion of degree {L.degree} into degree {K.degree} is not supported")
    gens = K.gens
    basis = [Section.basis(gens, a) for a in range(gens.d)]
    comps = {}
    for index in _increasing(r, gens.d):
        args = [basis[a] for a in index]
        total = [RatFunc.zero(gens.variables) for _ in range(gens.d)]
        for sign, order in _shuffles(L.degree, K.degree - 1):
            picked = [args[i] for i in order]
            inner = L.evaluate(*picked[:L.degree])
            value = K.evaluate(inner, *picked[L.degree:]).vector()
            total = [t + v * sign for t, v in zip(total, value)]
        for c, value in enumerate(total):
            comps[(c, index)] = value
    return ValuedForm.from_components(gens, r, comps)


def frolicher_nijenhuis(mu: Mu, K: ValuedForm, L: ValuedForm) -> ValuedForm:
    """[K, L]_FN = {{K, mu}, L} + (-1)^{k(l+1)} {i_L K, mu}"""
    k, l = K.degree, L.degree
    first = big_bracket(big_bracket(K.elem, mu.elem), L.elem)
    second = big_bracket(insertion(K, L).elem, mu.elem)
    if (k * (l + 1)) % 2:
        second = -second
    return ValuedForm.from_elem(first + second, k + l)


def contract_bivector(pi: MultiVector, phi: CoeffMatrix) -> MultiVector:
    """
    i_phi pi with i_phi pi(a, b) = pi(phi a, b) - pi(phi b, a)

    phi acts on covectors as the matrix F; the result has matrix F^T P + P F.
    """
    P = pi.matrix()
    return MultiVector.from_matrix(pi.gens, phi.T @ P + P @ phi)


def transition_tensor(pi: MultiVector, omega: Form) -> EndoTensor:
    """pi# o omega_flat, matrix P^T W^T"""
    return EndoTensor.from_matrix(pi.gens, pi.matrix().T @ omega.matrix().T)


def lemma_ksr_sides(mu: Mu, pi: MultiVector, omega: Form) -> Tuple[SuperElem, SuperElem]:
    """
    Both sides of

        {{[pi,pi], w}, w} = {{{pi, dw}, pi}, w} - {{pi, N}, dw} + 2{pi, {w, {N, mu}}} + 4 TN

    with N = pi# o w_flat.
    """
    bb = big_bracket
    N = transition_tensor(pi, omega)
    pipi = bb(bb(pi.elem, mu.elem), pi.elem)
    d_omega = bb(mu.elem, omega.elem)
    lhs = bb(bb(pipi, omega.elem), omega.elem)
    rhs = (
        bb(bb(bb(pi.elem, d_omega), pi.elem), omega.elem)
        - bb(bb(pi.elem, N.elem), d_omega)
        + bb(pi.elem, bb(omega.elem, bb(N.elem, mu.elem))).scale(2)
        + torsion(mu, N).elem.scale(4)
    )
    return lhs, rhs


def lemma_ksr_check(mu: Mu, pi: MultiVector, omega: Form) -> bool:
    lhs, rhs = lemma_ksr_sides(mu, pi, omega)
    return lhs == rhs
