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
from fractions import Fraction
from unittest.mock import patch

import numpy as np
import pydantic
from hypothesis import given, settings

from ehrhart import (
    EhrhartPolynomial,
    RationalPolynomial,
    ehrhart_pair,
    ehrhart_polynomial,
    format_rational,
    leading_data,
    normal_hilbert_polynomial,
    normal_hilbert_via_ehrhart,
)
from errors import EhrhartMismatchError
from ideals import (
    LatticePolytope,
    MonomialIdeal,
    build_polyhedron,
    colength,
    count_lattice_points,
    half_spaces,
    integral_closure_power,
    normal_colength,
    split_generators,
)
from ideals.polytope import box_points, box_slices
from property_strategies import monomial_ideals

S = LatticePolytope(dim_ambient=2, vertices=((0, 0), (2, 0), (0, 3)))
SEGMENT = LatticePolytope(dim_ambient=2, vertices=((2, 0), (0, 3)))
POINT = LatticePolytope(dim_ambient=2, vertices=((1, 1),))
X2Y3 = MonomialIdeal(vars=2, generators=[(2, 0), (0, 3)])


class TestCounting(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(count_lattice_points(S, 1), 7)
        self.assertEqual(count_lattice_points(SEGMENT, 1), 2)
        self.assertEqual(count_lattice_points(S, 2), 19)
        self.assertEqual(count_lattice_points(S, 0), 1)

    def test_counts_by_lp(self):
        for n in (0, 1, 2):
            self.assertEqual(count_lattice_points(S, n, method="lp"), count_lattice_points(S, n))
            self.assertEqual(
                count_lattice_points(SEGMENT, n, method="lp"), count_lattice_points(SEGMENT, n)
            )

    def test_half_spaces(self):
        hs = half_spaces(S)
        self.assertEqual(hs.dimension, 2)
        self.assertEqual(hs.equations, ())
        self.assertEqual(set(hs.inequalities), {((1, 0), 0), ((0, 1), 0), ((-3, -2), -6)})
        segment = half_spaces(SEGMENT)
        self.assertEqual(segment.dimension, 1)
        self.assertEqual(len(segment.equations), 1)

    def test_vertices_are_validated(self):
        with self.assertRaises(pydantic.ValidationError):
            LatticePolytope(dim_ambient=2, vertices=((1, 1, 1),))


class TestEhrhartPolynomial(unittest.TestCase):
    def test_triangle(self):
        E = ehrhart_polynomial(S)
        self.assertEqual(E.coeffs, (1, 3, 3))
        self.assertEqual(str(E), "3*n**2 + 3*n + 1")

    def test_segment_and_point(self):
        self.assertEqual(ehrhart_polynomial(SEGMENT).coeffs, (1, 1, 0))
        self.assertEqual(ehrhart_polynomial(POINT).coeffs, (1, 0, 0))

    def test_leading_data(self):
        data = leading_data(ehrhart_polynomial(S))
        self.assertEqual(data.volume, 3)
        self.assertEqual(data.half_boundary, 3)
        self.assertFalse(data.lower_dimensional)

        segment = leading_data(ehrhart_polynomial(SEGMENT))
        self.assertTrue(segment.lower_dimensional)
        self.assertEqual(segment.leading_coefficient, 1)
        self.assertIsNone(segment.half_boundary)

        self.assertEqual(leading_data(ehrhart_polynomial(POINT)).volume, 0)

    def test_constant_term_invariant(self):
        with self.assertRaises(pydantic.ValidationError):
            EhrhartPolynomial(ambient_dim=1, coeffs=(Fraction(2), Fraction(1)))

    def test_verification_mismatch(self):
        polytope = LatticePolytope(dim_ambient=2, vertices=((0, 0), (1, 0), (0, 1)))
        real_count = count_lattice_points

        def off_by_one(p, n, method="facets"):
            return real_count(p, n, method) + (1 if n == 3 else 0)

        ehrhart_polynomial.cache_clear()
        with patch("ehrhart.count_lattice_points", side_effect=off_by_one):
            with self.assertRaises(EhrhartMismatchError):
                ehrhart_polynomial(polytope)
        ehrhart_polynomial.cache_clear()

    def test_format_rational(self):
        self.assertEqual(format_rational(Fraction(3)), 3)
        self.assertEqual(format_rational(Fraction(-5, 6)), "-5/6")
        poly = RationalPolynomial(ambient_dim=3, coeffs=(Fraction(0), Fraction(1, 2), Fraction(5, 6)))
        self.assertEqual(poly.to_json(), [0, "1/2", "5/6"])


class TestNormalHilbertIdentity(unittest.TestCase):
    def test_parameter_ideal(self):
        self.assertEqual(normal_hilbert_via_ehrhart(X2Y3, 1), 5)
        self.assertEqual(normal_hilbert_via_ehrhart(X2Y3, 2), 16)
        self.assertEqual(normal_hilbert_via_ehrhart(X2Y3, 0), 0)

    def test_pair(self):
        simplex_poly, lower_poly = ehrhart_pair(X2Y3)
        self.assertEqual(simplex_poly.coeffs, (1, 3, 3))
        self.assertEqual(lower_poly.coeffs, (1, 1, 0))
        # 3n^2 + 2n
        self.assertEqual(normal_hilbert_polynomial(X2Y3).coeffs, (0, 2, 3))

    @settings(max_examples=50, deadline=None)
    @given(monomial_ideals(dims=(2, 3), max_exponent=5))
    def test_three_computations_agree(self, I):
        polynomial = normal_hilbert_polynomial(I)
        self.assertEqual(polynomial(0), 0)
        for n in range(1, 7):
            by_ehrhart = normal_hilbert_via_ehrhart(I, n)
            self.assertEqual(by_ehrhart, normal_colength(I, n), (str(I), n))
            self.assertEqual(by_ehrhart, colength(integral_closure_power(I, n)), (str(I), n))


class TestEhrhartOfSplit(unittest.TestCase):
    @settings(max_examples=30, deadline=None)
    @given(monomial_ideals(dims=(2, 3), max_exponent=4))
    def test_counts_match_beyond_interpolation(self, I):
        d = I.dim
        for polytope in split_generators(build_polyhedron(I)):
            polynomial = ehrhart_polynomial(polytope)
            counts = [count_lattice_points(polytope, n) for n in range(d + 5)]
            self.assertEqual(counts, [polynomial(n) for n in range(d + 5)], polytope.vertices)
            self.assertEqual(counts, sorted(counts), polytope.vertices)

    def test_slices_cover_the_box(self):
        slices = list(box_slices([1, 0, 2], [3, 1, 2]))
        self.assertEqual(len(slices), 3)
        self.assertEqual(
            sorted(map(tuple, np.vstack(slices).tolist())),
            sorted(map(tuple, box_points([1, 0, 2], [3, 1, 2]).tolist())),
        )
        self.assertEqual(list(box_slices([0], [2]))[0].tolist(), [[0], [1], [2]])


if __name__ == "__main__":
    unittest.main()
