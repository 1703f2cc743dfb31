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
import unittest

from errors import NotPrimaryError
from filtrations import NormalFiltration, OrdinaryFiltration, make_filtration
from ideals import MonomialIdeal, colength, power

X3Y3XY = MonomialIdeal(vars=2, generators=[(3, 0), (0, 3), (1, 1)])
X2Y3 = MonomialIdeal(vars=2, generators=[(2, 0), (0, 3)])


class TestMakeFiltration(unittest.TestCase):
    def test_kinds(self):
        self.assertIsInstance(make_filtration(X2Y3, "ordinary"), OrdinaryFiltration)
        self.assertIsInstance(make_filtration(X2Y3, "normal"), NormalFiltration)
        self.assertEqual(make_filtration(X2Y3, "normal").kind, "normal")

    def test_unknown_kind(self):
        with self.assertRaises(ValueError):
            make_filtration(X2Y3, "adic")

    def test_requires_m_primary(self):
        not_primary = MonomialIdeal(vars=2, generators=[(2, 0), (1, 1)])
        for kind in ("ordinary", "normal"):
            with self.assertRaises(NotPrimaryError):
                make_filtration(not_primary, kind)


class TestOrdinaryFiltration(unittest.TestCase):
    def test_terms_are_powers(self):
        filtration = OrdinaryFiltration(X3Y3XY)
        for n in range(1, 5):
            self.assertEqual(filtration.term(n), power(X3Y3XY, n))

    def test_terms_out_of_order(self):
        filtration = OrdinaryFiltration(X3Y3XY)
        self.assertEqual(filtration.term(3), power(X3Y3XY, 3))
        self.assertEqual(filtration.term(4), power(X3Y3XY, 4))
        self.assertEqual(filtration.term(1), X3Y3XY)

    def test_hilbert_function(self):
        self.assertEqual(OrdinaryFiltration(X2Y3).hilbert_function(2), [0, 6, 18])


class TestNormalFiltration(unittest.TestCase):
    def test_terms_are_closures(self):
        filtration = NormalFiltration(X2Y3)
        self.assertEqual(
            filtration.term(1), MonomialIdeal(vars=2, generators=[(2, 0), (1, 2), (0, 3)])
        )
        self.assertEqual(filtration.polyhedron.pure_bounds, (2, 3))

    def test_hilbert_function(self):
        self.assertEqual(NormalFiltration(X2Y3).hilbert_function(3), [0, 5, 16, 33])

    def test_colength_matches_terms(self):
        filtration = NormalFiltration(X3Y3XY)
        for n in range(1, 5):
            self.assertEqual(filtration.colength(n), colength(filtration.term(n)))

    def test_normal_sits_inside_ordinary(self):
        ordinary, normal = OrdinaryFiltration(X3Y3XY), NormalFiltration(X3Y3XY)
        for o, c in zip(ordinary.hilbert_function(5), normal.hilbert_function(5)):
            self.assertLessEqual(c, o)


if __name__ == "__main__":
    unittest.main()
