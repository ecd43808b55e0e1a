#!/usr/bin/env python3
"""
Tests for the positive-product search
"""

import unittest

import pytest

from ..algebra.hyperstruct import StructClass, classify
from ..algebra.search import PHASE_RANDOM, PHASE_STRUCTURED, SearchResult, commuting_pairs, search_positive_product, signed_basis
from ..common.errors import PreconditionError


class TestStructuredSweep(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.result = search_positive_product()

    def test_first_hit(self):
        result = self.result
        self.assertTrue(result.found)
        self.assertEqual(result.phase, PHASE_STRUCTURED)
        self.assertEqual(result.names, ("omega1", "omega1", "omega2"))
        self.assertEqual(result.examined, 1)
        self.assertEqual(result.epsilon, (-1, -1, 1))

    def test_hit_classifies_as_positive_product(self):
        report = classify(self.result.triple(), full=False)
        self.assertEqual(report.struct_class, StructClass.POSITIVE_PRODUCT)
        self.assertEqual(report.epsilon.product, 1)

    def test_to_dict(self):
        data = self.result.to_dict()
        self.assertTrue(data["found"])
        self.assertEqual(data["phase"], "structured")
        self.assertEqual(data["triple"], ["omega1", "omega1", "omega2"])
        self.assertEqual(data["epsilon"], [-1, -1, 1])
        self.assertEqual(list(data["forms"]), ["omega1", "omega2"])


@pytest.fixture(scope="module")
def hit():
    return search_positive_product(budget=20, seed=7, structured=False)


class TestRandomPhase:

    def test_zero_budget(self):
        result = search_positive_product(budget=0, structured=False)
        assert not result.found
        assert result.examined == 0
        assert result.to_dict()["triple"] == []
        with pytest.raises(PreconditionError):
            result.triple()

    def test_finds_a_conjugated_triple(self, hit):
        assert hit.found
        assert hit.phase == PHASE_RANDOM
        assert hit.examined <= 20
        eps = hit.epsilon
        assert eps[0] * eps[1] * eps[2] == 1

    def test_hit_passes_the_suite(self, hit):
        report = classify(hit.triple())
        assert report.struct_class == StructClass.POSITIVE_PRODUCT
        assert report.failures() == []

    def test_seeded_runs_repeat(self, hit):
        again = search_positive_product(budget=20, seed=7, structured=False)
        assert again.to_dict() == hit.to_dict()


def test_commuting_pairs():
    pairs = commuting_pairs()
    assert pairs
    for K, M in pairs:
        assert K @ M == M @ K
        assert not (K.is_scalar(1) or K.is_scalar(-1)) or not (M.is_scalar(1) or M.is_scalar(-1))


def test_signed_basis():
    basis = signed_basis()
    assert len(basis) == 12
    names = [name for name, _ in basis]
    assert names[:2] == ["omega1", "-omega1"]
    assert basis[1][1] == -basis[0][1]


def test_not_found_result():
    assert SearchResult(False, 5).to_dict()["epsilon"] is None
