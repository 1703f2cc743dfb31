# Copyright 2025 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import math
import unittest

import pydantic
from hypothesis import given, settings, strategies

from errors import InputError, NotPrimaryError
from hilbert import coefficients
from ideals import MonomialIdeal
from property_strategies import monomial_ideals
from rlr2d import (
    PointBasis,
    TwoDimReport,
    hoskin_deligne,
    lipman_polynomial,
    mixed_e1,
    mixed_length,
    multiplicity,
    zariski_product,
)

X2Y3 = MonomialIdeal(vars=2, generators=[(2, 0), (0, 3)])
M = MonomialIdeal(vars=2, generators=[(1, 0), (0, 1)])
M2 = MonomialIdeal(vars=2, generators=[(2, 0), (1, 1), (0, 2)])


class TestLipman(unittest.TestCase):
    def test_maximal_ideal(self):
        report = lipman_polynomial(M)
        self.assertEqual(report.e, (1, 0, 0))
        self.assertEqual(report.predicted, tuple(math.comb(n + 1, 2) for n in range(1, 9)))
        self.assertEqual(report.predicted, report.observed)

    def test_parameter_ideal(self):
        report = lipman_polynomial(X2Y3)
        self.assertEqual(report.e, (6, 1, 0))
        self.assertEqual(report.normal_colength, 5)
        self.assertEqual(report.observed[2], 33)

    def test_square_of_maximal_ideal(self):
        report = lipman_polynomial(M2, n_max=3)
        self.assertEqual(report.e, (4, 1, 0))
        self.assertEqual(report.observed, (3, 10, 21))
        self.assertEqual(report.to_json()["normal_colength"], 3)

    def test_requires_plane(self):
        with self.assertRaises(InputError):
            lipman_polynomial(MonomialIdeal(vars=3, generators=[(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
        with self.assertRaises(NotPrimaryError):
            lipman_polynomial(MonomialIdeal(vars=2, generators=[(2, 0), (1, 1)]))

    def test_report_invariant(self):
        with self.assertRaises(pydantic.ValidationError):
            TwoDimReport(e=(6, 1, 1), normal_colength=5, predicted=(), observed=())

    @settings(max_examples=30, deadline=None)
    @given(monomial_ideals(max_exponent=5))
    def test_random_ideals(self, I):
        report = lipman_polynomial(I)
        self.assertEqual(report.predicted, report.observed)
        self.assertEqual(coefficients(I, "normal").e[2], 0)


class TestMixedMultiplicity(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(mixed_e1(X2Y3, M), 2)
        self.assertEqual(mixed_e1(M, M), 1)

    def test_multiplicity(self):
        self.assertEqual(multiplicity(X2Y3), 6)
        self.assertEqual(multiplicity(M2), 4)

    def test_zariski_product(self):
        self.assertTrue(zariski_product(X2Y3, M))
        m3 = MonomialIdeal(vars=3, generators=[(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        self.assertTrue(zariski_product(m3, m3))

    @settings(max_examples=20, deadline=None)
    @given(monomial_ideals(max_exponent=5))
    def test_mixing_with_itself(self, I):
        self.assertEqual(mixed_e1(I, I), multiplicity(I))


class TestMixedLength(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(mixed_length(X2Y3, M, 1, 1), (8, 8))
        self.assertEqual(mixed_length(X2Y3, M, 2, 1), (21, 21))
        self.assertEqual(mixed_length(X2Y3, M, 0, 0), (0, 0))

    def test_degenerates_to_lipman(self):
        report = lipman_polynomial(X2Y3, n_max=3)
        for s in (1, 2, 3):
            self.assertEqual(mixed_length(M, X2Y3, 0, s)[0], report.observed[s - 1])

    def test_rejects_negative_exponents(self):
        with self.assertRaises(InputError):
            mixed_length(X2Y3, M, -1, 1)

    @settings(max_examples=20, deadline=None)
    @given(monomial_ideals(), monomial_ideals())
    def test_random_pairs(self, I, J):
        self.assertEqual(mixed_e1(I, J), mixed_e1(J, I))
        for r in range(4):
            for s in range(4):
                predicted, observed = mixed_length(I, J, r, s)
                self.assertEqual(predicted, observed)
                self.assertEqual(mixed_length(J, I, s, r), (predicted, observed))


class TestHoskinDeligne(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(
            hoskin_deligne(PointBasis(basis=[(2, 1), (1, 1), (1, 1)])).model_dump(),
            {"length": 5, "e0": 6, "e1": 1, "e2": 0},
        )
        maximal = hoskin_deligne(PointBasis(basis=[(1, 1)]))
        self.assertEqual((maximal.length, maximal.e0, maximal.e1), (1, 1, 0))
        cube = hoskin_deligne(PointBasis(basis=[(3, 1)]))
        self.assertEqual((cube.length, cube.e0, cube.e1), (6, 9, 3))

    def test_matches_closure_data(self):
        basis = PointBasis.model_validate_json('{"basis": [[2, 1], [1, 1], [1, 1]]}')
        result = hoskin_deligne(basis)
        report = lipman_polynomial(X2Y3, n_max=1)
        self.assertEqual((result.length, result.e0, result.e1), (report.normal_colength, *report.e[:2]))

    def test_rejects_empty_basis(self):
        with self.assertRaises(pydantic.ValidationError):
            PointBasis(basis=[])
        with self.assertRaises(pydantic.ValidationError):
            PointBasis(basis=[(0, 1)])

    @settings(max_examples=30, deadline=None)
    @given(
        strategies.lists(
            strategies.tuples(strategies.integers(1, 6), strategies.integers(1, 3)),
            min_size=1,
            max_size=6,
        )
    )
    def test_table(self, entries):
        result = hoskin_deligne(PointBasis(basis=entries))
        self.assertEqual(result.e1, result.e0 - result.length)
        self.assertEqual(result.e2, 0)


if __name__ == "__main__":
    unittest.main()
