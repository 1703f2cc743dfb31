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
"""Hilbert functions and Hilbert coefficients of monomial filtrations.

The Hilbert polynomial is written in the signed binomial basis

    P(n) = e_0 C(n+d-1, d) - e_1 C(n+d-2, d-1) + ... + (-1)^d e_d

and the coefficients are read off the last d+1 samples by finite differences.
"""
import logging
import math
from typing import Optional

import pydantic

from errors import InputError, RangeTooShortError
from filtrations import Filtration, FiltrationKind, make_filtration
from ideals import MonomialIdeal

logger = logging.getLogger(__name__)

MAX_SAMPLE_RANGE = 24


def default_range(d: int) -> int:
    return 2 * d + 6


def binomial(x: int, k: int) -> int:
    """C(x, k) as a polynomial in x, so C(-1, 0) = 1 and C(0, 1) = 0."""
    if k < 0:
        return 0
    numerator = 1
    for i in range(k):
        numerator *= x - i
    return numerator // math.factorial(k)


def polynomial_value(e: tuple[int, ...], d: int, n: int) -> int:
    return sum((-1) ** i * e_i * binomial(n + d - 1 - i, d - i) for i, e_i in enumerate(e))


class HilbertSamples(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    kind: FiltrationKind
    ideal: MonomialIdeal
    values: tuple[pydantic.NonNegativeInt, ...]

    @pydantic.field_validator("values")
    @classmethod
    def _hilbert_shape(cls, values):
        if not values or values[0] != 0:
            raise ValueError("H(0) must be 0")
        if any(b < a for a, b in zip(values, values[1:])):
            raise ValueError("a Hilbert function is nondecreasing")
        return values


class HilbertData(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    e: tuple[int, ...]
    # None: H agrees with P on the whole sampled range.
    postulation: Optional[int]
    fit_window: tuple[int, int]
    samples: HilbertSamples

    @pydantic.field_validator("e")
    @classmethod
    def _positive_multiplicity(cls, e):
        if e[0] < 1:
            raise ValueError(f"e_0 = {e[0]} must be positive")
        return e

    @property
    def dim(self) -> int:
        return len(self.e) - 1

    def polynomial(self, n: int) -> int:
        return polynomial_value(self.e, self.dim, n)

    def to_json(self) -> dict:
        return {
            "e": list(self.e),
            "postulation": self.postulation,
            "samples": list(self.samples.values),
            "series": series(self.samples),
        }


def sample(
    ideal: MonomialIdeal,
    kind: FiltrationKind,
    N: int,
    filtration: Optional[Filtration] = None,
) -> HilbertSamples:
    """Samples H(0..N) of the I-adic or the normal filtration.

    Any N >= 1 is accepted; `extract` decides whether the range is long enough.
    """
    if N < 1:
        raise InputError(f"range must be at least 1, got {N}")
    filtration = filtration or make_filtration(ideal, kind)
    return HilbertSamples(kind=kind, ideal=ideal, values=tuple(filtration.hilbert_function(N)))


def extract(samples: HilbertSamples) -> HilbertData:
    values = samples.values
    d = samples.ideal.dim
    N = len(values) - 1
    if len(values) < 2 * d + 3:
        raise RangeTooShortError(N)

    row = list(values[N - d :])
    deltas = []
    for _ in range(d + 1):
        deltas.append(row[-1])
        row = [b - a for a, b in zip(row, row[1:])]

    e: list[int] = []
    for j in range(d + 1):
        known = sum((-1) ** i * e[i] * binomial(N + j - 1 - i, j - i) for i in range(j))
        e.append((-1) ** j * (deltas[d - j] - known))
    e_tuple = tuple(e)

    for n in range(N - d - 1, N - 2 * d - 3, -1):
        if polynomial_value(e_tuple, d, n) != values[n]:
            raise RangeTooShortError(n)

    postulation = next(
        (n for n in range(N, -1, -1) if polynomial_value(e_tuple, d, n) != values[n]), None
    )
    return HilbertData(e=e_tuple, postulation=postulation, fit_window=(N - d, N), samples=samples)


def series(samples: HilbertSamples) -> list[int]:
    """Coefficients λ(I_{k}/I_{k+1}) of F(t) = Σ λ(I_{n-1}/I_n) t^{n-1}."""
    values = samples.values
    return [b - a for a, b in zip(values, values[1:])]


def series_numerator(samples: HilbertSamples) -> list[int]:
    """(1-t)^d F(t), exact on the sampled range."""
    coefficients = series(samples)
    d = samples.ideal.dim
    return [
        sum((-1) ** j * math.comb(d, j) * coefficients[k - j] for j in range(min(k, d) + 1))
        for k in range(len(coefficients))
    ]


def coefficients(
    ideal: MonomialIdeal,
    kind: FiltrationKind,
    N: Optional[int] = None,
    filtration: Optional[Filtration] = None,
) -> HilbertData:
    """Extracts e_0..e_d, doubling the range until the polynomial regime shows."""
    filtration = filtration or make_filtration(ideal, kind)
    if N is None:
        N = default_range(ideal.dim)
    while True:
        try:
            return extract(sample(ideal, kind, N, filtration))
        except RangeTooShortError as e:
            if N >= MAX_SAMPLE_RANGE:
                raise
            logger.info("%s samples of %s up to %d: %s; doubling", kind, ideal, N, e)
            N = min(2 * N, MAX_SAMPLE_RANGE)
