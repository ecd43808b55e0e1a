#!/usr/bin/env python3
"""
Tests for algebroid structure elements and the derived-bracket operations
"""

import unittest
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ..algebra.algebroid import (
    AlgebroidSpec,
    EndoTensor,
    Form,
    MultiVector,
    Section,
    ValuedForm,
    anchor_apply,
    build_mu,
    check_jacobi,
    concomitant,
    contract_bivector,
    deform_by_bivector,
    deform_by_endo,
    deform_twice,
    differential,
    evaluate,
    frolicher_nijenhuis,
    insertion,
    lemma_ksr_check,
    lie_bracket,
    lie_derivative,
    schouten,
    torsion,
)
from ..algebra.catalog import R4_VARIABLES, abelian_spec, antisymmetric_from_upper, so3_spec, tangent_spec
from ..algebra.coeff import RatFunc, poly_parse
from ..algebra.components import ComponentAlgebroid, jacobiator, structure_jacobiator
from ..algebra.matrix import CoeffMatrix
from ..algebra.superalgebra import SuperElem, SuperMonomial, big_bracket
from ..common.errors import DegreeUnderflowError, ShapeMismatchError, UnsupportedDegreeError

XY = ("x", "y")


def rf(text, variables=XY):
    return poly_parse(text, variables)


class TestStructureElement(unittest.TestCase):
    """build_mu and check_jacobi"""

    def test_jacobi_holds_on_standard_algebroids(self):
        for spec in (abelian_spec(2, 3), tangent_spec(XY), tangent_spec(R4_VARIABLES), so3_spec()):
            with self.subTest(spec=spec.name):
                mu = build_mu(spec)
                self.assertTrue(check_jacobi(mu))
                self.assertTrue(mu.jacobi)

    def test_broken_so3_fails_jacobi(self):
        spec = so3_spec(broken=True)
        mu = build_mu(spec)
        self.assertFalse(check_jacobi(mu))
        self.assertFalse(structure_jacobiator(spec))
        alg = ComponentAlgebroid(spec)
        J = jacobiator(alg, alg.basis(0), alg.basis(1), alg.basis(2))
        self.assertEqual([v.constant_value() for v in J], [0, -1, 0])

    def test_so3_element(self):
        mu = build_mu(so3_spec())
        self.assertEqual(len(mu.elem), 3)
        self.assertTrue(mu.elem.is_bihomogeneous(1, 2))
        self.assertFalse(mu.is_zero)

    def test_abelian_is_zero(self):
        self.assertTrue(build_mu(abelian_spec(0, 2)).is_zero)

    def test_anchor_on_point_is_rejected(self):
        with self.assertRaises(ShapeMismatchError):
            AlgebroidSpec(2, 2, XY, None, {})
        with self.assertRaises(ShapeMismatchError):
            AlgebroidSpec(0, 2, (), None, {(1, 0, 0): 1})

    def test_structure_constant_is_antisymmetric(self):
        spec = so3_spec()
        self.assertEqual(spec.structure_constant(0, 1, 2), RatFunc.one(()))
        self.assertEqual(spec.structure_constant(1, 0, 2), -RatFunc.one(()))
        self.assertTrue(spec.structure_constant(1, 1, 0).is_zero)


class TestSectionsAndForms(unittest.TestCase):

    def setUp(self):
        self.so3 = build_mu(so3_spec())
        self.plane = build_mu(tangent_spec(XY))

    def test_so3_bracket_table(self):
        gens = self.so3.gens
        e = [Section.basis(gens, a) for a in range(3)]
        self.assertEqual(lie_bracket(self.so3, e[0], e[1]), e[2])
        self.assertEqual(lie_bracket(self.so3, e[1], e[2]), e[0])
        self.assertEqual(lie_bracket(self.so3, e[2], e[0]), e[1])
        self.assertEqual(lie_bracket(self.so3, e[1], e[0]), -e[2])

    def test_vector_field_bracket(self):
        gens = self.plane.gens
        X = Section.from_vector(gens, ["x", "0"])
        Y = Section.from_vector(gens, ["0", "x*y"])
        bracket = lie_bracket(self.plane, X, Y)
        self.assertEqual(bracket.vector(), (RatFunc.zero(XY), rf("x*y")))

    def test_anchor_apply(self):
        gens = self.plane.gens
        X = Section.from_vector(gens, ["y", "1"])
        self.assertEqual(anchor_apply(self.plane, X, rf("x^2*y")), rf("2*x*y^2 + x^2"))

    def test_lie_derivative_commutes_with_d(self):
        space = build_mu(tangent_spec(("x", "y", "z")))
        X = Section.from_vector(space.gens, ["y", "x*z", "1"])
        alpha = Form.from_vector(space.gens, ["x*y", "z^2", "x"])
        lhs = lie_derivative(space, X, differential(space, alpha).elem)
        rhs = differential(space, Form.from_elem(lie_derivative(space, X, alpha.elem), 1)).elem
        self.assertEqual(lhs, rhs)

    def test_lie_derivative_of_function_is_anchor(self):
        gens = self.plane.gens
        X = Section.from_vector(gens, ["x", "y"])
        f = rf("x*y^2")
        self.assertEqual(lie_derivative(self.plane, X, SuperElem.constant(gens, f)),
                         SuperElem.constant(gens, anchor_apply(self.plane, X, f)))

    def test_differential_of_function(self):
        df = differential(self.plane, Form.scalar(self.plane.gens, "x^2*y"))
        self.assertEqual(df.degree, 1)
        self.assertEqual(df.vector(), (rf("2*x*y"), rf("x^2")))

    def test_differential_of_one_form(self):
        alpha = Form.from_vector(self.plane.gens, ["0", "x*y"])
        d_alpha = differential(self.plane, alpha)
        self.assertEqual(d_alpha.component((0, 1)), rf("y"))
        self.assertEqual(d_alpha.component((1, 0)), rf("-y"))

    def test_so3_differential(self):
        gens = self.so3.gens
        d_xi3 = differential(self.so3, Form.from_vector(gens, [0, 0, 1]))
        self.assertEqual(d_xi3.component((0, 1)).constant_value(), -1)

    def test_d_squared_vanishes(self):
        space = build_mu(tangent_spec(("x", "y", "z")))
        alpha = Form.from_vector(space.gens, ["x*y", "y*z", "z*x^2"])
        self.assertTrue(differential(space, differential(space, alpha)).is_zero)
        gens = self.so3.gens
        beta = Form.from_vector(gens, [1, 2, 3])
        self.assertTrue(differential(self.so3, differential(self.so3, beta)).is_zero)

    def test_form_evaluation(self):
        gens = self.plane.gens
        sigma = Form.from_matrix(gens, CoeffMatrix.parse([["0", "x"], ["-x", "0"]], XY))
        X = Section.from_vector(gens, ["1", "0"])
        Y = Section.from_vector(gens, ["y", "1"])
        self.assertEqual(evaluate(sigma, X, Y), rf("x"))
        self.assertEqual(sigma.evaluate(Y, X), rf("-x"))
        with self.assertRaises(ShapeMismatchError):
            sigma.evaluate(X)

    def test_matrix_round_trip(self):
        gens = self.plane.gens
        W = CoeffMatrix.parse([["0", "x + y"], ["-x - y", "0"]], XY)
        self.assertEqual(Form.from_matrix(gens, W).matrix(), W)
        self.assertEqual(MultiVector.from_matrix(gens, W).matrix(), W)
        with self.assertRaises(ShapeMismatchError):
            Form.from_matrix(gens, CoeffMatrix.identity(2, XY))

    def test_schouten_of_sections_is_lie_bracket(self):
        gens = self.so3.gens
        e = [Section.basis(gens, a) for a in range(3)]
        self.assertEqual(schouten(self.so3, e[0], e[1]), e[2])


class TestDeformations(unittest.TestCase):

    def setUp(self):
        self.so3 = build_mu(so3_spec())
        self.gens = self.so3.gens

    def test_identity_deformation_is_mu(self):
        identity = EndoTensor.identity(self.gens)
        self.assertEqual(deform_by_endo(self.so3, identity).elem, self.so3.elem)
        self.assertEqual(deform_twice(self.so3, identity, identity).elem, self.so3.elem)

    def test_identity_is_nijenhuis(self):
        identity = EndoTensor.identity(self.gens)
        self.assertTrue(torsion(self.so3, identity).is_zero)

    def test_fn_bracket_is_minus_twice_torsion(self):
        N = EndoTensor.from_matrix(self.gens, CoeffMatrix([[1, 2, 0], [0, 1, -1], [3, 0, 2]], ()))
        T = torsion(self.so3, N)
        self.assertFalse(T.is_zero)
        self.assertEqual(frolicher_nijenhuis(self.so3, N, N), T.scale(-2))

    def test_bivector_deformation_is_dual(self):
        pi = MultiVector.from_matrix(self.gens, CoeffMatrix([[0, 1, 0], [-1, 0, 2], [0, -2, 0]], ()))
        mu_pi = deform_by_bivector(self.so3, pi)
        self.assertTrue(mu_pi.dual)
        self.assertTrue(mu_pi.elem.is_bihomogeneous(2, 1))
        with self.assertRaises(ShapeMismatchError):
            deform_by_bivector(self.so3, Section.basis(self.gens, 0))


PLANE_POLYS = ["0", "1", "x", "-y", "x*y + 1", "y^2 - x", "2*x^2*y"]


class TestDeformationIdentities:
    """Torsion, double deformations and the concomitant on T R^2 and so(3)"""

    @settings(max_examples=20, deadline=None)
    @given(st.sampled_from(["1", "x", "x^2 + 1", "2*x - 3", "x^3"]),
           st.sampled_from(["1", "y", "y^2 - 2", "-y", "3*y^2 + y"]))
    def test_torsion_free_deformation_is_jacobi(self, f, g):
        mu = build_mu(tangent_spec(XY))
        N = EndoTensor.from_matrix(mu.gens, CoeffMatrix.parse([[f, "0"], ["0", g]], XY))
        assert torsion(mu, N).is_zero
        assert check_jacobi(deform_by_endo(mu, N))

    @settings(max_examples=10, deadline=None)
    @given(st.integers(-3, 3))
    def test_scalar_deformation_of_so3_is_jacobi(self, c):
        mu = build_mu(so3_spec())
        N = EndoTensor.from_matrix(mu.gens, CoeffMatrix.identity(3, ()).scale(c))
        assert torsion(mu, N).is_zero
        assert check_jacobi(deform_by_endo(mu, N))

    def test_deform_twice_by_zero(self):
        mu = build_mu(tangent_spec(XY))
        N = EndoTensor.from_matrix(mu.gens, CoeffMatrix.parse([["x", "y"], ["1", "x*y"]], XY))
        zero = EndoTensor.from_matrix(mu.gens, CoeffMatrix.zeros(2, 2, XY))
        assert deform_twice(mu, N, zero).is_zero

    @settings(max_examples=20, deadline=None)
    @given(st.lists(st.sampled_from(PLANE_POLYS), min_size=4, max_size=4))
    def test_double_deformation_minus_square_is_twice_torsion(self, entries):
        mu = build_mu(tangent_spec(XY))
        N = EndoTensor.from_matrix(mu.gens, CoeffMatrix.parse([entries[:2], entries[2:]], XY))
        difference = deform_twice(mu, N, N).elem - deform_by_endo(mu, N.square()).elem
        assert difference == torsion(mu, N).elem.scale(2)

    @staticmethod
    def half_concomitant_holds(mu, pi, N):
        """{pi, {N, mu}} - 1/2 {{pi, N}, mu} = 1/2 C_{pi,N}"""
        inner = big_bracket(pi.elem, big_bracket(N.elem, mu.elem))
        lhs = inner - big_bracket(big_bracket(pi.elem, N.elem), mu.elem).scale(Fraction(1, 2))
        return lhs == concomitant(mu, pi, N).scale(Fraction(1, 2))

    @settings(max_examples=20, deadline=None)
    @given(st.sampled_from(PLANE_POLYS), st.lists(st.sampled_from(PLANE_POLYS), min_size=4, max_size=4))
    def test_concomitant_identity_on_plane(self, p, entries):
        mu = build_mu(tangent_spec(XY))
        pi = MultiVector.from_matrix(mu.gens, antisymmetric_from_upper(2, {(1, 2): p}, XY))
        N = EndoTensor.from_matrix(mu.gens, CoeffMatrix.parse([entries[:2], entries[2:]], XY))
        assert self.half_concomitant_holds(mu, pi, N)

    @settings(max_examples=20, deadline=None)
    @given(st.lists(st.integers(-2, 2), min_size=12, max_size=12))
    def test_concomitant_identity_on_so3(self, entries):
        mu = build_mu(so3_spec())
        pi = MultiVector.from_matrix(
            mu.gens, antisymmetric_from_upper(3, dict(zip([(1, 2), (1, 3), (2, 3)], entries[:3])), ()),
        )
        N = EndoTensor.from_matrix(mu.gens, CoeffMatrix([entries[3:6], entries[6:9], entries[9:]], ()))
        assert self.half_concomitant_holds(mu, pi, N)

    def test_vanishing_concomitant(self):
        mu = build_mu(tangent_spec(XY))
        pi = MultiVector.from_matrix(mu.gens, antisymmetric_from_upper(2, {(1, 2): "x*y + 1"}, XY))
        N = EndoTensor.from_matrix(mu.gens, CoeffMatrix.zeros(2, 2, XY))
        assert concomitant(mu, pi, N).is_zero
        assert self.half_concomitant_holds(mu, pi, N)


class TestValuedForms:

    @pytest.fixture
    def gens(self):
        return build_mu(so3_spec()).gens

    def test_endo_apply(self, gens):
        M = CoeffMatrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]], ())
        N = EndoTensor.from_matrix(gens, M)
        assert N.matrix() == M
        X = Section.from_vector(gens, [1, 2, 3])
        assert N.apply(X).vector() == tuple(M.apply(X.vector()))
        assert N.evaluate(X) == N.apply(X)

    def test_bracket_with_section_applies_endo(self, gens):
        N = EndoTensor.from_matrix(gens, CoeffMatrix([[2, 1, 0], [0, 1, 0], [0, 5, 1]], ()))
        X = Section.from_vector(gens, [1, -1, 1])
        assert Section.from_elem(big_bracket(X.elem, N.elem)) == N.apply(X)

    def test_insertion_underflow(self, gens):
        scalar = ValuedForm.from_components(gens, 0, {(0, ()): 1})
        N = EndoTensor.identity(gens)
        with pytest.raises(DegreeUnderflowError):
            insertion(scalar, N)

    def test_unsupported_degree(self, gens):
        with pytest.raises(UnsupportedDegreeError):
            ValuedForm.from_components(gens, 4, {})

    def test_identity_insertion_doubles(self, gens):
        K = ValuedForm.from_components(gens, 2, {(0, (0, 1)): 1, (2, (1, 2)): 3})
        assert insertion(K, EndoTensor.identity(gens)) == K.scale(2)
        assert insertion(EndoTensor.identity(gens), K) == K

    def test_contract_bivector(self, gens):
        P = CoeffMatrix([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]], ())
        pi = MultiVector.from_matrix(gens, P)
        assert contract_bivector(pi, CoeffMatrix.identity(3, ())) == pi.scale(2)
        assert contract_bivector(pi, CoeffMatrix.zeros(3, 3, ())).is_zero


class TestBracketLemma:

    def test_zero_bivector(self):
        mu = build_mu(tangent_spec(XY))
        gens = mu.gens
        pi = MultiVector.from_components(gens, 2, {})
        omega = Form.from_matrix(gens, CoeffMatrix.parse([["0", "x"], ["-x", "0"]], XY))
        assert lemma_ksr_check(mu, pi, omega)

    def test_polynomial_plane(self):
        mu = build_mu(tangent_spec(XY))
        gens = mu.gens
        pi = MultiVector.from_matrix(gens, CoeffMatrix.parse([["0", "x*y + 1"], ["-x*y - 1", "0"]], XY))
        omega = Form.from_matrix(gens, CoeffMatrix.parse([["0", "x^2"], ["-x^2", "0"]], XY))
        assert lemma_ksr_check(mu, pi, omega)

    @settings(max_examples=20, deadline=None)
    @given(st.lists(st.integers(-3, 3), min_size=12, max_size=12))
    def test_random_constant_pairs_on_r4(self, entries):
        mu = build_mu(tangent_spec(R4_VARIABLES))
        pairs = [(i, j) for i in range(1, 5) for j in range(i + 1, 5)]
        P = antisymmetric_from_upper(4, dict(zip(pairs, entries[:6])), R4_VARIABLES)
        W = antisymmetric_from_upper(4, dict(zip(pairs, entries[6:])), R4_VARIABLES)
        assert lemma_ksr_check(mu, MultiVector.from_matrix(mu.gens, P), Form.from_matrix(mu.gens, W))

    @settings(max_examples=20, deadline=None)
    @given(st.sampled_from(["1", "x", "x*y + 1", "y^2 - x", "2*x^2*y"]),
           st.sampled_from(["1", "-y", "x + y", "x^2", "x*y^2 - 3"]))
    def test_random_polynomial_pairs_on_plane(self, p, w):
        mu = build_mu(tangent_spec(XY))
        pi = MultiVector.from_matrix(mu.gens, antisymmetric_from_upper(2, {(1, 2): p}, XY))
        omega = Form.from_matrix(mu.gens, antisymmetric_from_upper(2, {(1, 2): w}, XY))
        assert lemma_ksr_check(mu, pi, omega)


def test_superalgebra_monomial_layout():
    """mu on T R^2 is p1 xi1 + p2 xi2"""
    mu = build_mu(tangent_spec(XY))
    expected = SuperElem(mu.gens, {
        SuperMonomial((), (1, 0), (0,)): RatFunc.one(XY),
        SuperMonomial((), (0, 1), (1,)): RatFunc.one(XY),
    })
    assert mu.elem == expected
