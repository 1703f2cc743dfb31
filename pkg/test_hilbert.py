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
from unittest.mock import patch

import pydantic
from hypothesis import given, settings

from ehrhart import normal_hilbert_polynomial
from errors import InputError, RangeTooShortError
from hilbert import (
    MAX_SAMPLE_RANGE,
    HilbertSamples,
    binomial,
    coefficients,
    extract,
    polynomial_value,
    sample,
    series,
    series_numerator,
)
from ideals import MonomialIdeal
from property_strategies import monomial_ideals

MARLEY = MonomialIdeal(
    vars=3,
    generators=[(3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 1, 0), (1, 2, 0), (0, 1, 2), (1, 1, 1)],
)
X2Y3 = MonomialIdeal(vars=2, generators=[(2, 0), (0, 3)])
M = MonomialIdeal(vars=2, generators=[(1, 0), (0, 1)])


class TestBinomial(unittest.TestCase):
    def test_polynomial_binomial(self):
        self.assertEqual(binomial(5, 2), 10)
        self.assertEqual(binomial(-1, 0), 1)
        self.assertEqual(binomial(0, 1), 0)
        self.assertEqual(binomial(-1, 2), 1)
        self.assertEqual(binomial(-2, 3), -4)
        self.assertEqual(binomial(5, -1), 0)

    def test_polynomial_value(self):
        # 27 C(n+2, 3) - 18 C(n+1, 2) + 4n + 1
        self.assertEqual(polynomial_value((27, 18, 4, -1), 3, 1), 14)
        self.assertEqual(polynomial_value((27, 18, 4, -1), 3, 0), 1)


class TestSample(unittest.TestCase):
    def test_normal_samples(self):
        self.assertEqual(sample(X2Y3, "normal", 5).values, (0, 5, 16, 33, 56, 85))

    def test_ordinary_samples(self):
        self.assertEqual(sample(M, "ordinary", 4).values, (0, 1, 3, 6, 10))

    def test_marley_first_sample(self):
        self.assertEqual(sample(MARLEY, "ordinary", 6).values[1], 14)

    def test_short_ranges(self):
        self.assertEqual(sample(X2Y3, "normal", 1).values, (0, 5))
        with self.assertRaises(InputError):
            sample(X2Y3, "normal", 0)
        with self.assertRaises(RangeTooShortError):
            extract(sample(M, "ordinary", 4))

    def test_zero_range_is_not_replaced_by_default(self):
        with self.assertRaises(InputError):
            coefficients(X2Y3, "normal", 0)

    def test_samples_are_validated(self):
        with self.assertRaises(pydantic.ValidationError):
            HilbertSamples(kind="normal", ideal=X2Y3, values=(1, 5))
        with self.assertRaises(pydantic.ValidationError):
            HilbertSamples(kind="normal", ideal=X2Y3, values=(0, 5, 4))


class TestExtract(unittest.TestCase):
    def test_parameter_ideal_normal(self):
        data = extract(sample(X2Y3, "normal", 10))
        self.assertEqual(data.e, (6, 1, 0))
        self.assertIsNone(data.postulation)
        self.assertEqual(data.fit_window, (8, 10))

    def test_marley(self):
        data = extract(sample(MARLEY, "ordinary", 12))
        self.assertEqual(data.e, (27, 18, 4, -1))
        self.assertEqual(data.polynomial(1), 14)
        # P(0) = 1 while H(0) = 0.
        self.assertEqual(data.polynomial(0), 1)
        self.assertGreaterEqual(data.postulation, 0)

    def test_maximal_ideal(self):
        data = extract(sample(M, "ordinary", 8))
        self.assertEqual(data.e, (1, 0, 0))
        self.assertIsNone(data.postulation)

    def test_too_few_samples(self):
        with self.assertRaises(RangeTooShortError) as cm:
            extract(sample(X2Y3, "normal", 5))
        self.assertIn("range too short", str(cm.exception))

    def test_detects_non_polynomial_tail(self):
        values = (0, 1, 3, 6, 10, 15, 21, 29, 38, 48)
        samples = HilbertSamples(kind="ordinary", ideal=M, values=values)
        with self.assertRaises(RangeTooShortError):
            extract(samples)

    def test_to_json(self):
        report = coefficients(X2Y3, "normal").to_json()
        self.assertEqual(report["e"], [6, 1, 0])
        self.assertIsNone(report["postulation"])
        self.assertEqual(report["samples"][:3], [0, 5, 16])
        self.assertEqual(report["series"][:3], [5, 11, 17])


class TestSeries(unittest.TestCase):
    def test_series(self):
        self.assertEqual(series(sample(X2Y3, "normal", 5)), [5, 11, 17, 23, 29])
        self.assertEqual(series(sample(M, "ordinary", 4)), [1, 2, 3, 4])

    def test_numerator(self):
        self.assertEqual(series_numerator(sample(X2Y3, "normal", 6)), [5, 1, 0, 0, 0, 0])
        self.assertEqual(series_numerator(sample(M, "ordinary", 5)), [1, 0, 0, 0, 0])


class TestCoefficients(unittest.TestCase):
    def test_doubles_short_range(self):
        data = coefficients(X2Y3, "normal", 5)
        self.assertEqual(data.e, (6, 1, 0))
        self.assertEqual(data.fit_window, (8, 10))

    def test_gives_up_at_cap(self):
        with patch("hilbert.extract", side_effect=RangeTooShortError(0)) as mock_extract:
            with self.assertRaises(RangeTooShortError):
                coefficients(X2Y3, "normal")
        last_samples = mock_extract.call_args.args[0]
        self.assertEqual(len(last_samples.values), MAX_SAMPLE_RANGE + 1)

    @settings(max_examples=50, deadline=None)
    @given(monomial_ideals(dims=(2, 3), max_exponent=5))
    def test_normal_coefficients(self, I):
        d = I.dim
        normal = coefficients(I, "normal")
        self.assertTrue(all(e_i >= 0 for e_i in normal.e[:d]), normal.e)
        self.assertEqual(normal.e[d], 0)
        self.assertEqual(normal.polynomial(0), 0)
        self.assertIsNone(normal.postulation)
        by_ehrhart = normal_hilbert_polynomial(I)
        for n in range(-d, d + 2):
            self.assertEqual(normal.polynomial(n), by_ehrhart(n), (str(I), n))


if __name__ == "__main__":
    unittest.main()
