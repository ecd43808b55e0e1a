"""
Component formulas for algebroid operations

These compute brackets, differentials and deformations directly from the
anchor and structure functions, without the superalgebra. They are the second
computation path the calibration gate compares the derived-bracket path with.
Vectors and covectors are tuples of RatFunc of length d.
"""

from typing import List, Sequence, Tuple

from .algebroid import AlgebroidSpec
from .coeff import RatFunc
from .matrix import CoeffMatrix

Vector = Tuple[RatFunc, ...]


def _add(u: Sequence[RatFunc], v: Sequence[RatFunc]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def _sub(u: Sequence[RatFunc], v: Sequence[RatFunc]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def _pair(alpha: Sequence[RatFunc], X: Sequence[RatFunc], variables) -> RatFunc:
    total = RatFunc.zero(variables)
    for a, x in zip(alpha, X):
        if a and x:
            total = total + a * x
    return total


class ComponentAlgebroid:
    """Anchor and bracket of an AlgebroidSpec in components"""

    def __init__(self, spec: AlgebroidSpec):
        self.spec = spec
        self.d = spec.d
        self.n = spec.n
        self.variables = spec.variables

    def zero(self) -> Vector:
        return tuple(RatFunc.zero(self.variables) for _ in range(self.d))

    def basis(self, a: int) -> Vector:
        return tuple(RatFunc.one(self.variables) if b == a else RatFunc.zero(self.variables) for b in range(self.d))

    def anchor(self, X: Sequence[RatFunc]) -> Vector:
        """rho(X)^i = rho^i_a X^a"""
        spec = self.spec
        return tuple(_pair([spec.rho(i, a) for a in range(self.d)], X, self.variables) for i in range(self.n))

    def act(self, X: Sequence[RatFunc], f: RatFunc) -> RatFunc:
        """rho(X) f"""
        total = RatFunc.zero(self.variables)
        for name, component in zip(self.variables, self.anchor(X)):
            if component:
                total = total + component * f.diff(name)
        return total

    def bracket(self, X: Sequence[RatFunc], Y: Sequence[RatFunc]) -> Vector:
        """[X,Y]^c = rho(X)Y^c - rho(Y)X^c + X^a Y^b c^c_{ab}"""
        out = []
        for c in range(self.d):
            value = self.act(X, Y[c]) - self.act(Y, X[c])
            for (a, b, cc), const in self.spec.structure.items():
                if cc != c:
                    continue
                value = value + const * (X[a] * Y[b] - X[b] * Y[a])
            out.append(value)
        return tuple(out)


class DeformedAlgebroid(ComponentAlgebroid):
    """Bracket [X,Y]_N = [NX,Y] + [X,NY] - N[X,Y] with anchor rho o N"""

    def __init__(self, base: ComponentAlgebroid, N: CoeffMatrix):
        super().__init__(base.spec)
        self.base = base
        self.N = N

    def anchor(self, X: Sequence[RatFunc]) -> Vector:
        return self.base.anchor(self.N.apply(X))

    def act(self, X: Sequence[RatFunc], f: RatFunc) -> RatFunc:
        return self.base.act(self.N.apply(X), f)

    def bracket(self, X: Sequence[RatFunc], Y: Sequence[RatFunc]) -> Vector:
        base = self.base
        NX, NY = self.N.apply(X), self.N.apply(Y)
        return _sub(_add(base.bracket(NX, Y), base.bracket(X, NY)), self.N.apply(base.bracket(X, Y)))


def torsion(alg: ComponentAlgebroid, N: CoeffMatrix, X: Vector, Y: Vector) -> Vector:
    """TN(X,Y) = [NX,NY] - N[X,Y]_N"""
    deformed = DeformedAlgebroid(alg, N)
    return _sub(alg.bracket(N.apply(X), N.apply(Y)), N.apply(deformed.bracket(X, Y)))


def jacobiator(alg: ComponentAlgebroid, X: Vector, Y: Vector, Z: Vector) -> Vector:
    """[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y]"""
    first = alg.bracket(alg.bracket(X, Y), Z)
    second = alg.bracket(alg.bracket(Y, Z), X)
    third = alg.bracket(alg.bracket(Z, X), Y)
    return _add(_add(first, second), third)


def structure_jacobiator(spec: AlgebroidSpec) -> bool:
    """sum_e c^e_{ab} c^f_{ec} + cyclic vanishes for all a, b, c, f (constant structures)"""
    d = spec.d
    c = spec.structure_constant
    for a in range(d):
        for b in range(d):
            for cc in range(d):
                for f in range(d):
                    total = RatFunc.zero(spec.variables)
                    for e in range(d):
                        total = total + c(a, b, e) * c(e, cc, f) + c(b, cc, e) * c(e, a, f) + c(cc, a, e) * c(e, b, f)
                    if not total.is_zero:
                        return False
    return True


def wedge(U: Sequence[RatFunc], V: Sequence[RatFunc]) -> CoeffMatrix:
    """(U ^ V)^{ab} = U^a V^b - U^b V^a"""
    d = len(U)
    variables = U[0].variables
    return CoeffMatrix.from_function(d, d, lambda a, b: U[a] * V[b] - U[b] * V[a], variables)


def schouten_wedge_section(alg: ComponentAlgebroid, X: Vector, Y: Vector, Z: Vector) -> CoeffMatrix:
    """[X ^ Y, Z] = [X,Z] ^ Y + X ^ [Y,Z]"""
    return wedge(alg.bracket(X, Z), Y) + wedge(X, alg.bracket(Y, Z))


# Covector side


def differential_function(alg: ComponentAlgebroid, f: RatFunc) -> Vector:
    """(df)_b = rho(e_b) f"""
    return tuple(alg.act(alg.basis(b), f) for b in range(alg.d))


def differential_one_form(alg: ComponentAlgebroid, alpha: Sequence[RatFunc]) -> CoeffMatrix:
    """d alpha(e_a, e_b) = rho(e_a) alpha_b - rho(e_b) alpha_a - alpha([e_a, e_b])"""
    d = alg.d

    def entry(a: int, b: int) -> RatFunc:
        ea, eb = alg.basis(a), alg.basis(b)
        return alg.act(ea, alpha[b]) - alg.act(eb, alpha[a]) - _pair(alpha, alg.bracket(ea, eb), alg.variables)

    return CoeffMatrix.from_function(d, d, entry, alg.variables)


def lie_derivative_form(alg: ComponentAlgebroid, X: Vector, alpha: Sequence[RatFunc]) -> Vector:
    """(L_X alpha)(e_b) = rho(X) alpha_b - alpha([X, e_b])"""
    return tuple(
        alg.act(X, alpha[b]) - _pair(alpha, alg.bracket(X, alg.basis(b)), alg.variables)
        for b in range(alg.d)
    )


def sharp(P: CoeffMatrix, alpha: Sequence[RatFunc]) -> Vector:
    """pi#(alpha) = P^T alpha"""
    return P.T.apply(alpha)


def dual_bracket(alg: ComponentAlgebroid, P: CoeffMatrix, alpha: Vector, beta: Vector) -> Vector:
    """[a,b]_pi = L_{pi# a} b - L_{pi# b} a - d(pi(a,b))"""
    pi_ab = _pair(alpha, P.apply(beta), alg.variables)
    return _sub(
        _sub(lie_derivative_form(alg, sharp(P, alpha), beta), lie_derivative_form(alg, sharp(P, beta), alpha)),
        differential_function(alg, pi_ab),
    )


def dual_bracket_deformed(alg: ComponentAlgebroid, P: CoeffMatrix, N: CoeffMatrix,
                          alpha: Vector, beta: Vector) -> Vector:
    """([a,b]_pi)_{N*} = [N*a, b]_pi + [a, N*b]_pi - N*[a,b]_pi"""
    Nt = N.T
    return _sub(
        _add(dual_bracket(alg, P, Nt.apply(alpha), beta), dual_bracket(alg, P, alpha, Nt.apply(beta))),
        Nt.apply(dual_bracket(alg, P, alpha, beta)),
    )


def concomitant(alg: ComponentAlgebroid, P: CoeffMatrix, N: CoeffMatrix, alpha: Vector, beta: Vector) -> Vector:
    """C(a,b) = ([a,b]_N)_pi - ([a,b]_pi)_{N*}"""
    deformed = DeformedAlgebroid(alg, N)
    return _sub(dual_bracket(deformed, P, alpha, beta), dual_bracket_deformed(alg, P, N, alpha, beta))


def insertion_oracle(K: List[CoeffMatrix], L: CoeffMatrix) -> List[CoeffMatrix]:
    """
    i_L K for an A-valued 2-form K (one antisymmetric matrix K^c per target c)
    and a (1,1)-tensor L: (i_L K)^c(u, v) = K^c(Lu, v) + K^c(u, Lv)
    """
    return [L.T @ Kc + Kc @ L for Kc in K]


def compose_oracle(K: CoeffMatrix, L: List[CoeffMatrix]) -> List[CoeffMatrix]:
    """i_L K for a (1,1)-tensor K and an A-valued 2-form L: (K o L)^c = K^c_e L^e"""
    d = K.rows
    out = []
    for c in range(d):
        total = CoeffMatrix.zeros(d, d, K.variables)
        for e in range(d):
            if K[c, e]:
                total = total + L[e].scale(K[c, e])
        out.append(total)
    return out
