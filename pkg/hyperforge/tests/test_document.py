#!/usr/bin/env python3
"""
Tests for input document loading and validation
"""

import unittest
from fractions import Fraction

import pytest

from ..algebra.algebroid import build_mu, check_jacobi
from ..algebra.document import load_document, parse_document
from ..common.config import DEFAULT_FIXTURE, FIXTURES_DIR
from ..common.errors import (
    ExpressionSyntaxError,
    InputDocumentError,
    UnknownFormError,
    UnknownVariableError,
)


def plane_document(**overrides):
    data = {
        "base": {"dim": 2, "vars": ["x", "y"]},
        "rank": 2,
        "anchor": [[1, 0], [0, 1]],
        "forms": {"sigma": [[0, "x + 1"], ["-x - 1", 0]]},
    }
    data.update(overrides)
    return data


class TestFixtures(unittest.TestCase):

    def test_r4_basis(self):
        doc = load_document(DEFAULT_FIXTURE)
        self.assertEqual(doc.source, "r4_basis.json")
        self.assertEqual(doc.variables, ("x", "y", "p", "q"))
        self.assertEqual(doc.form_names, [f"omega{i}" for i in range(1, 7)])
        self.assertTrue(check_jacobi(build_mu(doc.to_spec())))

    def test_so3_point(self):
        doc = load_document(FIXTURES_DIR / "so3_point.json")
        spec = doc.to_spec()
        self.assertEqual((spec.n, spec.d), (0, 3))
        self.assertTrue(check_jacobi(build_mu(spec)))

    def test_broken_jacobi(self):
        doc = load_document(FIXTURES_DIR / "broken_jacobi.json")
        self.assertFalse(check_jacobi(build_mu(doc.to_spec())))

    def test_resolve_triple(self):
        doc = load_document(DEFAULT_FIXTURE)
        self.assertEqual(doc.resolve_triple("omega1, omega2,omega3"), ("omega1", "omega2", "omega3"))
        self.assertEqual(doc.resolve_triple(["omega1", "omega1", "omega2"]), ("omega1", "omega1", "omega2"))
        with self.assertRaises(UnknownFormError):
            doc.resolve_triple("omega1,omega2,omega9")
        with self.assertRaises(InputDocumentError):
            doc.resolve_triple("omega1,omega2")


class TestValidation:

    def test_valid_plane(self):
        doc = parse_document(plane_document(), source="plane")
        assert doc.form("sigma")[0, 1].to_expression() == "x + 1"
        assert doc.to_dict() == {"file": "plane", "forms": ["sigma"]}

    @pytest.mark.parametrize("data,fragment", [
        ([1, 2], "single object"),
        ({"base": {"dim": 2, "vars": ["x", "y"]}, "rank": 2}, "forms"),
        (plane_document(base={"dim": 2, "vars": ["x"]}), "base.vars"),
        (plane_document(rank=0), "rank"),
        (plane_document(anchor=None), "anchor is required"),
        (plane_document(anchor=[[1, 0]]), "anchor must have 2 rows"),
        (plane_document(forms={"s": [[0, 0.5], [-0.5, 0]]}), "fraction"),
        (plane_document(forms={"s": [[0, True], [0, 0]]}), "expected an expression"),
        (plane_document(structure=[{"a": 2, "b": 1, "c": 1, "coeff": 1}]), "a < b"),
        (plane_document(structure=[{"a": 1, "b": 2, "coeff": 1}]), "needs keys"),
    ])
    def test_rejected(self, data, fragment):
        with pytest.raises(InputDocumentError) as info:
            parse_document(data)
        assert fragment in str(info.value)

    def test_anchor_on_point(self):
        with pytest.raises(InputDocumentError):
            parse_document({"base": {"dim": 0, "vars": []}, "rank": 1, "anchor": [[1]], "forms": {}})

    def test_repeated_structure_entry(self):
        entry = {"a": 1, "b": 2, "c": 1, "coeff": "x"}
        with pytest.raises(InputDocumentError):
            parse_document(plane_document(structure=[entry, dict(entry)]))

    def test_non_antisymmetric_form(self):
        doc = parse_document(plane_document(forms={"g": [[1, 0], [0, 1]]}))
        with pytest.raises(InputDocumentError):
            doc.form("g")

    def test_bad_expression(self):
        doc = parse_document(plane_document(forms={"s": [[0, "x +* y"], ["-x", 0]]}))
        with pytest.raises(ExpressionSyntaxError):
            doc.form_matrices()

    def test_unknown_variable(self):
        doc = parse_document(plane_document(forms={"s": [[0, "z"], ["-z", 0]]}))
        with pytest.raises(UnknownVariableError) as info:
            doc.form("s")
        assert info.value.name == "z"


class TestLoading:

    def test_yaml(self, tmp_path):
        path = tmp_path / "plane.yaml"
        path.write_text(
            "base: {dim: 2, vars: [x, y]}\n"
            "rank: 2\n"
            "anchor: [[1, 0], [0, 1]]\n"
            "forms:\n"
            "  sigma: [[0, '1/2'], ['-1/2', 0]]\n"
        )
        doc = load_document(path)
        assert doc.source == "plane.yaml"
        assert doc.form("sigma")[0, 1].constant_value() == Fraction(1, 2)

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputDocumentError):
            load_document(tmp_path / "absent.json")

    def test_unsupported_suffix(self, tmp_path):
        path = tmp_path / "plane.txt"
        path.write_text(DEFAULT_FIXTURE.read_text())
        with pytest.raises(InputDocumentError, match="plane.txt"):
            load_document(path)

    def test_malformed(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"base": [1, 2')
        with pytest.raises(InputDocumentError):
            load_document(path)
