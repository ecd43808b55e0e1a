"""
epsilon-hypersymplectic structures

A SymplecticTriple holds three closed nondegenerate 2-forms on an algebroid,
their inverse Poisson bivectors and the transition tensors
N_i = pi_{i-1}# o omega_{i+1}_flat (indices mod 3). Matrix conventions: vectors
are columns, omega(X,Y) = X^T W Y so omega_flat acts as W^T, and
pi(a,b) = a^T P b with P = W^-1 so pi# acts as P^T.

Indices are 0-based internally and printed 1-based.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..common.errors import (
    ConventionMismatchError,
    DegenerateFormError,
    EvaluationError,
    JacobiError,
    NotAntisymmetricError,
    NotClosedError,
    PreconditionError,
    ShapeMismatchError,
    SingularMatrixError,
)
from ..common.utils import CheckResult
from .algebroid import (
    EndoTensor,
    Form,
    MultiVector,
    Mu,
    concomitant,
    contract_bivector,
    differential,
    frolicher_nijenhuis,
    lemma_ksr_check,
    schouten,
    torsion,
)
from .coeff import Scalar
from .matrix import CoeffMatrix
from .superalgebra import big_bracket


def _up(i: int) -> int:
    return (i + 1) % 3


def _down(i: int) -> int:
    return (i + 2) % 3


@dataclass
class SymplecticTriple:
    mu: Mu
    W: Tuple[CoeffMatrix, CoeffMatrix, CoeffMatrix]
    Pi: Tuple[CoeffMatrix, CoeffMatrix, CoeffMatrix]
    omega: Tuple[Form, Form, Form]
    pi: Tuple[MultiVector, MultiVector, MultiVector]
    N: Tuple[EndoTensor, EndoTensor, EndoTensor]
    names: Tuple[str, str, str] = ("omega1", "omega2", "omega3")

    @property
    def gens(self):
        return self.mu.gens

    @property
    def identity(self) -> CoeffMatrix:
        return CoeffMatrix.identity(self.gens.d, self.gens.variables)

    def n_matrix(self, i: int) -> CoeffMatrix:
        return self.N[i].matrix()


@dataclass(frozen=True)
class EpsilonSignature:
    eps: Tuple[int, int, int]

    @property
    def product(self) -> int:
        return self.eps[0] * self.eps[1] * self.eps[2]

    def __getitem__(self, i: int) -> int:
        return self.eps[i % 3]

    def to_list(self) -> List[int]:
        return list(self.eps)


@dataclass
class MetricG:
    """
    g_flat = e3 e2 omega3_flat o pi1# o omega2_flat as a map A -> A*

    The bilinear form g(X,Y) = <g_flat X, Y> has matrix gflat^T; the inverse
    bivector has matrix ginv^T.
    """

    gflat: CoeffMatrix
    ginv: CoeffMatrix

    @property
    def symmetric(self) -> bool:
        return self.gflat.is_symmetric()

    @property
    def antisymmetric(self) -> bool:
        return self.gflat.is_antisymmetric()

    @property
    def form_matrix(self) -> CoeffMatrix:
        return self.gflat.T

    @property
    def bivector_matrix(self) -> CoeffMatrix:
        return self.ginv.T

    def as_form(self, gens) -> Form:
        """g as a 2-form (product +1 only)"""
        return Form.from_matrix(gens, self.form_matrix)

    def inverse_bivector(self, gens) -> MultiVector:
        """g^-1 as a bivector (product +1 only)"""
        return MultiVector.from_matrix(gens, self.bivector_matrix)

    def to_dict(self) -> Dict[str, object]:
        return {
            "gflat": self.gflat.to_strings(),
            "symmetric": self.symmetric,
        }


class StructClass(str, Enum):
    NOT_EPSILON = "NotEpsilonHypersymplectic"
    HYPERSYMPLECTIC = "Hypersymplectic"
    PARA_HYPERSYMPLECTIC = "ParaHypersymplectic"
    POSITIVE_PRODUCT = "PositiveProduct"


@dataclass
class InducedPair:
    kind: str  # PN, OmegaN or POmega
    left: str
    right: str
    passed: bool

    def to_dict(self) -> Dict[str, object]:
        return {"kind": self.kind, "left": self.left, "right": self.right, "passed": self.passed}


@dataclass
class HyperkahlerReport:
    checks: List[CheckResult]
    n3_sign: Optional[int]
    reconstruction_signs: List[Optional[int]]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> Dict[str, object]:
        return {
            "checks": [check.to_dict() for check in self.checks],
            "n3_sign": self.n3_sign,
            "reconstruction_signs": self.reconstruction_signs,
        }


@dataclass
class ClassificationReport:
    triple: Tuple[str, str, str]
    struct_class: StructClass
    epsilon: Optional[EpsilonSignature] = None
    canonical_epsilon: Optional[Tuple[int, int, int]] = None
    metric: Optional[MetricG] = None
    suite: List[CheckResult] = field(default_factory=list)
    positive_suite: List[CheckResult] = field(default_factory=list)
    compatibility: List[CheckResult] = field(default_factory=list)
    induced: List[InducedPair] = field(default_factory=list)
    hyperkahler: Optional[HyperkahlerReport] = None
    signature_at_origin: Optional[Tuple[int, int]] = None

    def failures(self) -> List[str]:
        names = [check.name for check in self.suite + self.positive_suite + self.compatibility if not check.passed]
        names.extend(f"{pair.kind}({pair.left}, {pair.right})" for pair in self.induced if not pair.passed)
        if self.hyperkahler is not None:
            names.extend(check.name for check in self.hyperkahler.checks if not check.passed)
        return names

    @property
    def passed(self) -> bool:
        return not self.failures()

    def to_dict(self) -> Dict[str, object]:
        return {
            "triple": list(self.triple),
            "class": self.struct_class.value,
            "epsilon": self.epsilon.to_list() if self.epsilon else None,
            "canonical_epsilon": list(self.canonical_epsilon) if self.canonical_epsilon else None,
            "metric": self.metric.to_dict() if self.metric else None,
            "suite": [check.to_dict() for check in self.suite],
            "positive_suite": [check.to_dict() for check in self.positive_suite],
            "compatibility": [check.to_dict() for check in self.compatibility],
            "induced": [pair.to_dict() for pair in self.induced],
            "hyperkahler": self.hyperkahler.to_dict() if self.hyperkahler else None,
            "signature_at_origin": list(self.signature_at_origin) if self.signature_at_origin else None,
        }


# Construction


def build_triple(mu: Mu, W1: CoeffMatrix, W2: CoeffMatrix, W3: CoeffMatrix,
                 names: Sequence[str] = ("omega1", "omega2", "omega3")) -> SymplecticTriple:
    """Validate three 2-forms and assemble inverses and transition tensors"""
    if mu.jacobi is False:
        raise JacobiError()
    gens = mu.gens
    matrices = (W1, W2, W3)
    omegas, inverses, bivectors = [], [], []
    for i, W in enumerate(matrices):
        name = names[i]
        if W.shape != (gens.d, gens.d):
            raise ShapeMismatchError(f"{name} is {W.shape}, expected {gens.d}x{gens.d}")
        if not W.is_antisymmetric():
            raise NotAntisymmetricError(i + 1, name)
        omega = Form.from_matrix(gens, W)
        if not differential(mu, omega).is_zero:
            raise NotClosedError(i + 1, name)
        try:
            Pi = W.inverse()
        except SingularMatrixError:
            raise DegenerateFormError(i + 1, name)
        if not (W.T @ Pi.T).is_scalar(1):
            raise ConventionMismatchError(f"omega_flat o pi# != Id for {name}")
        omegas.append(omega)
        inverses.append(Pi)
        bivectors.append(MultiVector.from_matrix(gens, Pi))

    tensors = tuple(
        EndoTensor.from_matrix(gens, inverses[_down(i)].T @ matrices[_up(i)].T) for i in range(3)
    )
    return SymplecticTriple(
        mu=mu,
        W=matrices,
        Pi=tuple(inverses),
        omega=tuple(omegas),
        pi=tuple(bivectors),
        N=tensors,
        names=tuple(names),
    )


def epsilon_signature(t: SymplecticTriple) -> Optional[EpsilonSignature]:
    """N_i^2 = e_i Id for each i, or None"""
    identity = t.identity
    eps = []
    for i in range(3):
        square = t.n_matrix(i) @ t.n_matrix(i)
        if square == identity:
            eps.append(1)
        elif square == -identity:
            eps.append(-1)
        else:
            return None
    signature = EpsilonSignature(tuple(eps))
    for i in range(3):
        lhs = t.W[_up(i)].T @ t.Pi[_down(i)].T
        rhs = (t.W[_down(i)].T @ t.Pi[_up(i)].T).scale(signature[i])
        if lhs != rhs:
            raise ConventionMismatchError(f"form-only epsilon relation fails for index {i + 1}")
    return signature


def metric_g(t: SymplecticTriple, eps: EpsilonSignature) -> MetricG:
    """g_flat from the (3,1,2) formula, cross-checked against the other two circular permutations"""
    gflat = (t.W[2].T @ t.Pi[0].T @ t.W[1].T).scale(eps[2] * eps[1])
    for i in range(3):
        candidate = (t.W[_down(i)].T @ t.Pi[i].T @ t.W[_up(i)].T).scale(eps[_down(i)] * eps[_up(i)])
        if candidate != gflat:
            raise ConventionMismatchError(f"metric formula for index {i + 1} disagrees with the reference formula")
    return MetricG(gflat=gflat, ginv=gflat.inverse())


# Identity suite


def _check(name: str, *sides) -> CheckResult:
    """All sides equal"""
    first = sides[0]
    for position, other in enumerate(sides[1:], start=2):
        if other != first:
            return CheckResult(name, False, f"side {position} differs from side 1")
    return CheckResult(name, True)


def _label(i: int) -> int:
    return i + 1


def check_structure_relations(t: SymplecticTriple, eps: EpsilonSignature, metric: MetricG) -> List[CheckResult]:
    """Morphism relations, big-bracket tables, vanishing torsion and the bracket lemma"""
    results: List[CheckResult] = []
    I = t.identity
    e = eps
    prod = eps.product
    N = [t.n_matrix(i) for i in range(3)]
    W, Pi = t.W, t.Pi
    g, ginv = metric.gflat, metric.ginv

    for i in range(3):
        k = _label(i)
        results.append(_check(f"N{k}^-1 = e{k} N{k}", N[i].inverse(), N[i].scale(e[i])))

    results.append(_check("N3 N2 N1 = Id", N[2] @ N[1] @ N[0], I))
    results.append(_check("N1 N2 N3 = e1e2e3 Id", N[0] @ N[1] @ N[2], I.scale(prod)))
    results.append(_check("g_flat* = -e1e2e3 g_flat", g.T, g.scale(-prod)))

    for i in range(3):
        k = _label(i)
        results.append(_check(
            f"omega{k}_flat N{k} = e1e2e3 N{k}* omega{k}_flat = e{_label(_down(i))} g_flat",
            W[i].T @ N[i], (N[i].T @ W[i].T).scale(prod), g.scale(e[_down(i)]),
        ))
        results.append(_check(
            f"pi{k}# N{k}* = e1e2e3 N{k} pi{k}# = e{_label(_up(i))} g^-1",
            Pi[i].T @ N[i].T, (N[i] @ Pi[i].T).scale(prod), ginv.scale(e[_up(i)]),
        ))
        results.append(_check(
            f"g_flat N{k} = e1e2e3 N{k}* g_flat = e{k}e{_label(_down(i))} omega{k}_flat",
            g @ N[i], (N[i].T @ g).scale(prod), W[i].T.scale(e[i] * e[_down(i)]),
        ))
        G = g.T
        results.append(_check(
            f"g(N{k}X, N{k}Y) = e{_label(_down(i))}e{_label(_up(i))} g(X,Y)",
            N[i].T @ G @ N[i], G.scale(e[_down(i)] * e[_up(i)]),
        ))

    for i in range(3):
        for k in (_up(i), _down(i)):
            a, b = _label(i), _label(k)
            if k == _up(i):
                omega_rhs = W[_down(i)].T
                pi_rhs = Pi[_down(i)].T.scale(e[_up(i)])
                nn_rhs = N[_down(i)].scale(e[i] * e[_up(i)])
            else:
                omega_rhs = W[_up(i)].T.scale(e[_down(i)])
                pi_rhs = Pi[_up(i)].T
                nn_rhs = N[_up(i)].scale(e[_up(i)])
            results.append(_check(f"omega{a}_flat N{b} = N{b}* omega{a}_flat", W[i].T @ N[k], N[k].T @ W[i].T, omega_rhs))
            results.append(_check(f"pi{a}# N{b}* = N{b} pi{a}#", Pi[i].T @ N[k].T, N[k] @ Pi[i].T, pi_rhs))
            results.append(_check(f"N{a} N{b} = e1e2e3 N{b} N{a}", N[i] @ N[k], (N[k] @ N[i]).scale(prod), nn_rhs))

    results.extend(_bracket_tables(t, eps, metric))

    for i in range(3):
        results.append(CheckResult(f"T N{_label(i)} = 0", torsion(t.mu, t.N[i]).is_zero))

    for i in range(3):
        pi, omega = t.pi[_down(i)], t.omega[_up(i)]
        results.append(CheckResult(
            f"bracket lemma on (pi{_label(_down(i))}, omega{_label(_up(i))})",
            lemma_ksr_check(t.mu, pi, omega),
        ))
    return results


def _bracket_tables(t: SymplecticTriple, eps: EpsilonSignature, metric: MetricG) -> List[CheckResult]:
    gens = t.gens
    e = eps
    prod = eps.product
    results = []
    zero2 = Form.from_components(gens, 2, {})
    zero_bv = MultiVector.from_components(gens, 2, {})
    g_form = metric.as_form(gens) if prod == 1 else zero2
    g_inv = metric.inverse_bivector(gens) if prod == 1 else zero_bv

    for i in range(3):
        for k in range(3):
            a, b = _label(i), _label(k)
            bracket = EndoTensor.from_elem(big_bracket(t.omega[i].elem, t.pi[k].elem))
            if k == i:
                expected = EndoTensor.identity(gens)
            elif k == _up(i):
                expected = t.N[_down(i)]
            else:
                expected = t.N[_up(i)].scale(e[_up(i)])
            results.append(_check(f"{{omega{a}, pi{b}}}", bracket, expected))

    for k in range(3):
        a, b, c = _label(k), _label(_up(k)), _label(_down(k))
        forward = big_bracket(t.N[k].elem, t.N[_up(k)].elem)
        backward = big_bracket(t.N[_up(k)].elem, t.N[k].elem)
        expected = t.N[_down(k)].elem.scale(e[_down(k)] * (1 - prod))
        results.append(_check(f"{{N{a}, N{b}}} = -{{N{b}, N{a}}} = e{c}(1-e1e2e3) N{c}", forward, -backward, expected))

    for k in range(3):
        for i in range(3):
            a, b = _label(k), _label(i)
            bracket = Form.from_elem(big_bracket(t.N[k].elem, t.omega[i].elem), 2)
            if k == i:
                expected = g_form.scale(e[_down(i)] * (1 + prod))
            elif k == _up(i):
                expected = t.omega[_down(i)].scale(2)
            else:
                expected = t.omega[_up(i)].scale(2 * e[_down(i)])
            results.append(_check(f"{{N{a}, omega{b}}}", bracket, expected))

    for k in range(3):
        for i in range(3):
            a, b = _label(k), _label(i)
            bracket = MultiVector.from_elem(big_bracket(t.N[k].elem, t.pi[i].elem), 2)
            if k == i:
                expected = g_inv.scale(-e[_up(i)] * (1 + prod))
            elif k == _up(i):
                expected = t.pi[_down(i)].scale(-2 * e[_up(i)])
            else:
                expected = t.pi[_up(i)].scale(-2)
            results.append(_check(f"{{N{a}, pi{b}}}", bracket, expected))
    return results


# PN, Omega-N and P-Omega predicates


def _form_from_flat(gens, flat: CoeffMatrix) -> Optional[Form]:
    matrix = flat.T
    if not matrix.is_antisymmetric():
        return None
    return Form.from_matrix(gens, matrix)


def pn_conditions(mu: Mu, pi: MultiVector, N: EndoTensor) -> List[CheckResult]:
    P, M = pi.matrix(), N.matrix()
    return [
        CheckResult("[pi, pi] = 0", schouten(mu, pi, pi).is_zero),
        CheckResult("T N = 0", torsion(mu, N).is_zero),
        CheckResult("N pi# = pi# N*", M @ P.T == P.T @ M.T),
        CheckResult("C(pi, N) = 0", concomitant(mu, pi, N).is_zero),
    ]


def omega_n_conditions(mu: Mu, omega: Form, N: EndoTensor) -> List[CheckResult]:
    W, M = omega.matrix(), N.matrix()
    deformed = _form_from_flat(mu.gens, W.T @ M)
    return [
        CheckResult("d omega = 0", differential(mu, omega).is_zero),
        CheckResult("T N = 0", torsion(mu, N).is_zero),
        CheckResult("omega_flat N = N* omega_flat", W.T @ M == M.T @ W.T),
        CheckResult("d omega_N = 0", deformed is not None and differential(mu, deformed).is_zero),
    ]


def p_omega_conditions(mu: Mu, pi: MultiVector, omega: Form) -> List[CheckResult]:
    W = omega.matrix()
    N = pi.matrix().T @ W.T
    deformed = _form_from_flat(mu.gens, W.T @ N)
    return [
        CheckResult("[pi, pi] = 0", schouten(mu, pi, pi).is_zero),
        CheckResult("d omega = 0", differential(mu, omega).is_zero),
        CheckResult("d omega_N = 0", deformed is not None and differential(mu, deformed).is_zero),
    ]


def is_pn(mu: Mu, pi: MultiVector, N: EndoTensor) -> bool:
    return all(check.passed for check in pn_conditions(mu, pi, N))


def is_omega_n(mu: Mu, omega: Form, N: EndoTensor) -> bool:
    return all(check.passed for check in omega_n_conditions(mu, omega, N))


def is_p_omega(mu: Mu, pi: MultiVector, omega: Form) -> bool:
    return all(check.passed for check in p_omega_conditions(mu, pi, omega))


def poisson_compatible(mu: Mu, p1: MultiVector, p2: MultiVector) -> bool:
    """[p1, p2] = 0 for two Poisson bivectors"""
    return schouten(mu, p1, p2).is_zero


def nijenhuis_compatible(mu: Mu, N: EndoTensor, M: EndoTensor) -> bool:
    """[N, M]_FN = 0, cross-checked against T(N + M) = 0"""
    if not torsion(mu, N).is_zero or not torsion(mu, M).is_zero:
        raise PreconditionError("Nijenhuis compatibility needs two Nijenhuis tensors")
    by_bracket = frolicher_nijenhuis(mu, N, M).is_zero
    by_torsion = torsion(mu, N + M).is_zero
    if by_bracket != by_torsion:
        raise ConventionMismatchError("Froelicher-Nijenhuis and torsion-of-sum paths disagree")
    return by_bracket


def induced_structures(t: SymplecticTriple, eps: EpsilonSignature, metric: MetricG) -> List[InducedPair]:
    """Verify every PN, Omega-N and P-Omega pair the structure induces"""
    mu = t.mu
    pairs: List[InducedPair] = []
    for i in range(3):
        for k in (_up(i), _down(i)):
            pairs.append(InducedPair("POmega", f"pi{_label(k)}", f"omega{_label(i)}", is_p_omega(mu, t.pi[k], t.omega[i])))
    for i in range(3):
        for k in (_up(i), _down(i)):
            pairs.append(InducedPair("PN", f"pi{_label(i)}", f"N{_label(k)}", is_pn(mu, t.pi[i], t.N[k])))
    for i in range(3):
        for k in (_up(i), _down(i)):
            pairs.append(InducedPair("OmegaN", f"omega{_label(i)}", f"N{_label(k)}", is_omega_n(mu, t.omega[i], t.N[k])))

    if eps.product == 1:
        gens = t.gens
        g_form = metric.as_form(gens)
        g_inv = metric.inverse_bivector(gens)
        for i in range(3):
            k = _label(i)
            pairs.append(InducedPair("PN", f"pi{k}", f"N{k}", is_pn(mu, t.pi[i], t.N[i])))
            pairs.append(InducedPair("PN", "g^-1", f"N{k}", is_pn(mu, g_inv, t.N[i])))
            pairs.append(InducedPair("OmegaN", f"omega{k}", f"N{k}", is_omega_n(mu, t.omega[i], t.N[i])))
            pairs.append(InducedPair("OmegaN", "g", f"N{k}", is_omega_n(mu, g_form, t.N[i])))
            pairs.append(InducedPair("POmega", f"pi{k}", "g", is_p_omega(mu, t.pi[i], g_form)))
            pairs.append(InducedPair("POmega", "g^-1", f"omega{k}", is_p_omega(mu, g_inv, t.omega[i])))
    return pairs


def positive_product_checks(t: SymplecticTriple, eps: EpsilonSignature, metric: MetricG) -> List[CheckResult]:
    """Identities specific to e1e2e3 = +1; empty otherwise"""
    if eps.product != 1:
        return []
    mu = t.mu
    gens = t.gens
    bb = big_bracket
    g_form = metric.as_form(gens)
    g_inv = metric.inverse_bivector(gens)
    e = eps
    results = [
        CheckResult("g^-1 Poisson", schouten(mu, g_inv, g_inv).is_zero),
        CheckResult("d g = 0", differential(mu, g_form).is_zero),
    ]
    for i in range(3):
        k, up, down = _label(i), _label(_up(i)), _label(_down(i))
        pi, N = t.pi[i], t.N[i]
        results.append(CheckResult(f"C(pi{k}, N{k}) = 0", concomitant(mu, pi, N).is_zero))
        results.append(_check(
            f"i_(N{k}*) pi{k} = 2 e{up} g^-1",
            contract_bivector(pi, N.matrix().T).matrix(),
            metric.bivector_matrix.scale(2 * e[_up(i)]),
        ))
        results.append(CheckResult(f"[pi{k}, g^-1] = 0", poisson_compatible(mu, pi, g_inv)))
        results.append(_check(
            f"{{pi{k}, {{N{k}, mu}}}} = -e{k} {{N{up}, {{pi{up}, mu}}}}",
            bb(pi.elem, bb(N.elem, mu.elem)),
            bb(t.N[_up(i)].elem, bb(t.pi[_up(i)].elem, mu.elem)).scale(-e[i]),
        ))
        results.append(_check(
            f"{{N{k}, {{pi{k}, mu}}}} = -e{k} {{pi{up}, {{N{up}, mu}}}}",
            bb(N.elem, bb(pi.elem, mu.elem)),
            bb(t.pi[_up(i)].elem, bb(t.N[_up(i)].elem, mu.elem)).scale(-e[i]),
        ))
        results.append(_check(f"pi{k}# g_flat = e{down} N{k}", t.Pi[i].T @ metric.gflat, t.n_matrix(i).scale(e[_down(i)])))
        results.append(_check(
            f"{{pi{down}, N{k}}} = 2 e{k} pi{up}",
            MultiVector.from_elem(bb(t.pi[_down(i)].elem, N.elem), 2),
            t.pi[_up(i)].scale(2 * e[i]),
        ))
        results.append(_check(
            f"{{pi{k}, {{N{k}, mu}}}} = 1/2 {{{{pi{k}, N{k}}}, mu}}",
            bb(pi.elem, bb(N.elem, mu.elem)),
            bb(bb(pi.elem, N.elem), mu.elem).scale(Fraction(1, 2)),
        ))
    return results


def compatibility_checks(t: SymplecticTriple, eps: Optional[EpsilonSignature] = None) -> List[CheckResult]:
    """Pairwise Poisson and Nijenhuis compatibility, plus the FN bracket of consecutive N's"""
    mu = t.mu
    results = []
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = _label(i), _label(j)
            results.append(CheckResult(f"[pi{a}, pi{b}] = 0", poisson_compatible(mu, t.pi[i], t.pi[j])))
            total = t.pi[i] + t.pi[j]
            results.append(CheckResult(f"pi{a} + pi{b} Poisson", schouten(mu, total, total).is_zero))
            by_bracket = frolicher_nijenhuis(mu, t.N[i], t.N[j]).is_zero
            by_torsion = torsion(mu, t.N[i] + t.N[j]).is_zero
            results.append(CheckResult(f"[N{a}, N{b}]_FN = 0", by_bracket))
            results.append(CheckResult(f"T(N{a} + N{b}) = 0", by_torsion))
            results.append(CheckResult(f"N{a}, N{b} compatibility paths agree", by_bracket == by_torsion))
    if eps is not None:
        for i in range(3):
            a, up, down = _label(i), _label(_up(i)), _label(_down(i))
            fn = frolicher_nijenhuis(mu, t.N[i], t.N[_up(i)])
            inner = big_bracket(big_bracket(big_bracket(t.N[i].elem, t.omega[i].elem), mu.elem), t.pi[_down(i)].elem)
            results.append(_check(
                f"[N{a}, N{up}]_FN = e{up} {{{{{{N{a}, omega{a}}}, mu}}, pi{down}}}",
                fn.elem, inner.scale(eps[_up(i)]),
            ))
    return results


# Classification and the hyperkaehler correspondence


def canonical_epsilon(eps: EpsilonSignature) -> Tuple[int, int, int]:
    """Cyclic rotation moving the single -1 of a para signature to the last slot"""
    values = eps.eps
    if eps.product == -1 and values.count(-1) == 1:
        shift = values.index(-1) - 2
        return tuple(values[(j + shift) % 3] for j in range(3))
    return values


def structure_class(eps: Optional[EpsilonSignature]) -> StructClass:
    if eps is None:
        return StructClass.NOT_EPSILON
    if eps.product == 1:
        return StructClass.POSITIVE_PRODUCT
    if eps.eps == (-1, -1, -1):
        return StructClass.HYPERSYMPLECTIC
    return StructClass.PARA_HYPERSYMPLECTIC


def to_hyperkahler(t: SymplecticTriple, eps: EpsilonSignature, metric: Optional[MetricG] = None) -> HyperkahlerReport:
    """Verify (g, N1, N2, N3) is a (para-)hyperkaehler structure"""
    if eps.product != -1:
        raise PreconditionError(f"hyperkaehler correspondence needs e1e2e3 = -1, got {eps.product:+d}")
    metric = metric or metric_g(t, eps)
    g = metric.gflat
    N = [t.n_matrix(i) for i in range(3)]
    gens = t.gens
    checks = [
        CheckResult("g symmetric", metric.symmetric),
        CheckResult("g nondegenerate", not g.determinant().is_zero),
    ]
    for j in range(2):
        k = _label(j)
        checks.append(_check(f"g N{k} + N{k}* g = 0", (g @ N[j] + N[j].T @ g), CoeffMatrix.zeros(gens.d, gens.d, gens.variables)))
        checks.append(_check(f"N{k}^2 = e{k} Id", N[j] @ N[j], t.identity.scale(eps[j])))
    checks.append(_check("N1 N2 = -N2 N1", N[0] @ N[1], -(N[1] @ N[0])))

    product = N[0] @ N[1]
    if N[2] == product:
        n3_sign = 1
    elif N[2] == -product:
        n3_sign = -1
    else:
        n3_sign = None
    checks.append(CheckResult("N3 = +-N1 N2", n3_sign is not None, f"sign {n3_sign}" if n3_sign else ""))

    signs: List[Optional[int]] = []
    for i in range(3):
        k = _label(i)
        flat = g @ N[i]
        form = _form_from_flat(gens, flat)
        checks.append(CheckResult(f"g_flat N{k} closed", form is not None and differential(t.mu, form).is_zero))
        if flat == t.W[i].T:
            sign = 1
        elif flat == -t.W[i].T:
            sign = -1
        else:
            sign = None
        signs.append(sign)
        expected = eps[i] * eps[_down(i)]
        checks.append(CheckResult(
            f"g_flat N{k} = e{k}e{_label(_down(i))} omega{k}_flat",
            sign == expected,
            f"found {sign}, expected {expected}",
        ))
    return HyperkahlerReport(checks=checks, n3_sign=n3_sign, reconstruction_signs=signs)


def from_hyperkahler(mu: Mu, gflat: CoeffMatrix, N1: CoeffMatrix, N2: CoeffMatrix, N3: CoeffMatrix,
                     names: Sequence[str] = ("omega1", "omega2", "omega3")) -> SymplecticTriple:
    """Triple with omega_i_flat = g_flat o N_i"""
    matrices = [(gflat @ N).T for N in (N1, N2, N3)]
    return build_triple(mu, *matrices, names=names)


def signature_at_point(metric: MetricG, point: Sequence[Scalar]) -> Tuple[int, int]:
    """
    Sylvester signature (n_plus, n_minus) of g evaluated at a rational point

    Diagonalizes by congruence, taking diagonal pivots in order and falling
    back to a symmetric swap or an (i, j) row/column combination.
    """
    if not metric.symmetric:
        raise PreconditionError("signature requires a symmetric g")
    rows = metric.form_matrix.evaluate(point)
    return sylvester_signature(rows)


def sylvester_signature(rows: List[List[Fraction]]) -> Tuple[int, int]:
    a = [list(map(Fraction, row)) for row in rows]
    n = len(a)
    positive = negative = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][r] != 0), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
            else:
                other = next((r for r in range(k + 1, n) if a[k][r] != 0), None)
                if other is None:
                    continue
                # row_k += row_other, col_k += col_other keeps the form congruent
                for c in range(n):
                    a[k][c] += a[other][c]
                for r in range(n):
                    a[r][k] += a[r][other]
        pivot = a[k][k]
        if pivot > 0:
            positive += 1
        else:
            negative += 1
        for r in range(k + 1, n):
            if a[r][k] == 0:
                continue
            factor = a[r][k] / pivot
            for c in range(k, n):
                a[r][c] -= factor * a[k][c]
            for c in range(k, n):
                a[c][r] = a[r][c]
    return positive, negative


def classify(t: SymplecticTriple, full: bool = True) -> ClassificationReport:
    """Signature, class, metric, identity suites, induced structures and hyperkaehler data"""
    eps = epsilon_signature(t)
    report = ClassificationReport(triple=t.names, struct_class=structure_class(eps), epsilon=eps)
    if eps is None:
        return report
    report.canonical_epsilon = canonical_epsilon(eps)
    metric = metric_g(t, eps)
    report.metric = metric
    if not full:
        return report
    report.suite = check_structure_relations(t, eps, metric)
    report.positive_suite = positive_product_checks(t, eps, metric)
    report.compatibility = compatibility_checks(t, eps)
    report.induced = induced_structures(t, eps, metric)
    if eps.product == -1:
        report.hyperkahler = to_hyperkahler(t, eps, metric)
        origin = [0] * t.gens.n
        try:
            report.signature_at_origin = signature_at_point(metric, origin)
        except (PreconditionError, EvaluationError):
            report.signature_at_origin = None
    return report
