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
"""Length formulas for complete ideals in dimension two.

In k[x, y] products of complete ideals are complete, so for m-primary
monomial ideals

    λ(R/closure(I^n)) = e(I) C(n+1, 2) - [e(I) - λ(R/Ī)] n

and the lengths of closure(I^r J^s) are a quadratic form in (r, s) whose
cross term is the mixed multiplicity e_1(I|J).
"""
import functools
import logging
import math

import pydantic

from ehrhart import leading_data, normal_hilbert_polynomial
from errors import InputError, TheoremViolation
from hilbert import binomial, coefficients
from ideals import (
    MonomialIdeal,
    colength,
    integral_closure_power,
    normal_colength,
    power,
    product,
)

logger = logging.getLogger(__name__)

DEFAULT_NMAX = 8


class PointBasis(pydantic.BaseModel):
    """Orders o_T and residue degrees d_T of the transforms of a complete ideal."""

    model_config = pydantic.ConfigDict(frozen=True, populate_by_name=True)

    entries: tuple[tuple[pydantic.PositiveInt, pydantic.PositiveInt], ...] = pydantic.Field(
        alias="basis", min_length=1
    )


class TwoDimReport(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    e: tuple[int, int, int]
    normal_colength: int
    predicted: tuple[int, ...]
    observed: tuple[int, ...]

    @pydantic.field_validator("e")
    @classmethod
    def _e2_vanishes(cls, e):
        if e[2] != 0:
            raise ValueError(f"e_2 = {e[2]} in dimension two")
        return e

    def to_json(self) -> dict:
        return {
            "e": list(self.e),
            "normal_colength": self.normal_colength,
            "predicted": list(self.predicted),
            "observed": list(self.observed),
        }


class HoskinDeligne(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    length: int
    e0: int
    e1: int
    e2: int = 0


def _require_plane(*ideals: MonomialIdeal) -> None:
    for ideal in ideals:
        if ideal.dim != 2:
            raise InputError(f"{ideal} lives in dimension {ideal.dim}, expected 2")
        ideal.require_m_primary()


@functools.lru_cache(maxsize=256)
def multiplicity(ideal: MonomialIdeal) -> int:
    """e(I), taken from the normal Hilbert coefficients and checked against 2(vol S - vol P)."""
    e0 = coefficients(ideal, "normal").e[0]
    volume = leading_data(normal_hilbert_polynomial(ideal)).leading_coefficient
    if volume * math.factorial(ideal.dim) != e0:
        raise TheoremViolation(f"e(I) = {e0} but d! (vol S - vol P) = {volume * math.factorial(ideal.dim)}")
    return e0


def zariski_product(ideal: MonomialIdeal, other: MonomialIdeal) -> bool:
    """closure(I) closure(J) = closure(IJ); a theorem in dimension two only."""
    lhs = product(integral_closure_power(ideal), integral_closure_power(other))
    rhs = integral_closure_power(product(ideal, other))
    holds = lhs == rhs
    if ideal.dim == 2 and not holds:
        raise TheoremViolation(f"closure({ideal}) closure({other}) != closure of the product")
    logger.debug("product of closures of %s and %s is complete: %s", ideal, other, holds)
    return holds


def lipman_polynomial(ideal: MonomialIdeal, n_max: int = DEFAULT_NMAX) -> TwoDimReport:
    _require_plane(ideal)
    data = coefficients(ideal, "normal")
    e = multiplicity(ideal)
    ell = normal_colength(ideal, 1)
    if data.e[1] != e - ell or data.e[2] != 0:
        raise TheoremViolation(f"normal coefficients {data.e} of {ideal} but λ(R/Ī) = {ell}")
    ns = range(1, n_max + 1)
    predicted = tuple(e * binomial(n + 1, 2) - (e - ell) * n for n in ns)
    observed = tuple(normal_colength(ideal, n) for n in ns)
    if predicted != observed:
        raise TheoremViolation(f"λ(R/closure(I^n)) of {ideal}: predicted {predicted}, observed {observed}")
    return TwoDimReport(e=(e, e - ell, 0), normal_colength=ell, predicted=predicted, observed=observed)


def mixed_e1(ideal: MonomialIdeal, other: MonomialIdeal) -> int:
    """e_1(I|J) = λ(R/ĪJ̄) - λ(R/Ī) - λ(R/J̄)."""
    _require_plane(ideal, other)
    zariski_product(ideal, other)
    closure, other_closure = integral_closure_power(ideal), integral_closure_power(other)
    return colength(product(closure, other_closure)) - colength(closure) - colength(other_closure)


def _closure_colength_of_product(ideal: MonomialIdeal, other: MonomialIdeal, r: int, s: int) -> int:
    if r == 0 and s == 0:
        return 0
    factors = [power(ideal, r)] if r else []
    factors += [power(other, s)] if s else []
    combined = factors[0] if len(factors) == 1 else product(*factors)
    return normal_colength(combined, 1)


def mixed_length(ideal: MonomialIdeal, other: MonomialIdeal, r: int, s: int) -> tuple[int, int]:
    """Predicted and observed λ(R/closure(I^r J^s))."""
    _require_plane(ideal, other)
    if r < 0 or s < 0:
        raise InputError("r and s must be nonnegative")
    predicted = (
        multiplicity(ideal) * binomial(r, 2)
        + r * s * mixed_e1(ideal, other)
        + multiplicity(other) * binomial(s, 2)
        + r * normal_colength(ideal, 1)
        + s * normal_colength(other, 1)
    )
    observed = _closure_colength_of_product(ideal, other, r, s)
    if predicted != observed:
        raise TheoremViolation(
            f"λ(R/closure(I^{r} J^{s})) for I={ideal}, J={other}: predicted {predicted}, observed {observed}"
        )
    return predicted, observed


def hoskin_deligne(basis: PointBasis) -> HoskinDeligne:
    length = sum(binomial(o + 1, 2) * d for o, d in basis.entries)
    e0 = sum(o * o * d for o, d in basis.entries)
    e1 = sum(binomial(o, 2) * d for o, d in basis.entries)
    if e1 != e0 - length:
        raise TheoremViolation(f"e_1 = {e1} but e_0 - λ = {e0 - length}")
    return HoskinDeligne(length=length, e0=e0, e1=e1)
