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
"""Ehrhart polynomials of lattice polytopes and the normal Hilbert function.

For an m-primary monomial ideal, λ(R/closure(I^n)) = E_S(n) - E_P(n) where
S and P come from `ideals.split_generators`.
"""
import functools
import logging
from fractions import Fraction
from typing import Optional

import pydantic
import sympy

from errors import EhrhartMismatchError, TheoremViolation
from ideals import (
    LatticePolytope,
    MonomialIdeal,
    build_polyhedron,
    count_lattice_points,
    split_generators,
)
from ideals.polytope import CountMethod

logger = logging.getLogger(__name__)

VERIFICATION_NODES = 2


def format_rational(value: Fraction) -> int | str:
    """Integers stay integers; everything else becomes "p/q"."""
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


class RationalPolynomial(pydantic.BaseModel):
    """Polynomial in n with exact rational coefficients c_0, ..., c_d."""

    model_config = pydantic.ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ambient_dim: pydantic.PositiveInt
    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        nonzero = [i for i, c in enumerate(self.coeffs) if c]
        return nonzero[-1] if nonzero else -1

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def __call__(self, n: int) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * n + c
        return value

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(
            ambient_dim=self.ambient_dim,
            coeffs=tuple(self.coefficient(i) - other.coefficient(i) for i in range(size)),
        )

    def to_json(self) -> list:
        return [format_rational(c) for c in self.coeffs]

    def __str__(self) -> str:
        n = sympy.Symbol("n")
        expr = sum(sympy.Rational(c.numerator, c.denominator) * n**i for i, c in enumerate(self.coeffs))
        return str(sympy.expand(expr))


class EhrhartPolynomial(RationalPolynomial):
    """E_P(n) = |nP ∩ Z^d|; the constant term is 1 for a nonempty polytope."""

    @pydantic.model_validator(mode="after")
    def _check_invariants(self) -> "EhrhartPolynomial":
        if self.coefficient(0) != 1:
            raise ValueError(f"constant term {self.coefficient(0)} != 1")
        if self.coeffs[self.degree] <= 0:
            raise ValueError("leading coefficient must be positive")
        return self


class LeadingData(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, arbitrary_types_allowed=True)

    volume: Fraction
    half_boundary: Optional[Fraction]
    leading_coefficient: Fraction
    lower_dimensional: bool


@functools.lru_cache(maxsize=512)
def ehrhart_polynomial(polytope: LatticePolytope, method: CountMethod = "facets") -> EhrhartPolynomial:
    """Interpolates E_P on n = 0..d and verifies it on the next two dilates."""
    d = polytope.dim_ambient
    counts = [count_lattice_points(polytope, k, method) for k in range(d + 1 + VERIFICATION_NODES)]
    n = sympy.Symbol("n")
    expr = sympy.interpolate([(k, counts[k]) for k in range(d + 1)], n)
    poly = sympy.Poly(expr, n)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    coeffs += [Fraction(0)] * (d + 1 - len(coeffs))
    polynomial = EhrhartPolynomial(ambient_dim=d, coeffs=tuple(coeffs))
    for k in range(d + 1, d + 1 + VERIFICATION_NODES):
        if polynomial(k) != counts[k]:
            raise EhrhartMismatchError(k, counts[k], polynomial(k))
    logger.debug("E_P for %s: %s (counts %s)", polytope.vertices, polynomial, counts)
    return polynomial


def leading_data(polynomial: RationalPolynomial) -> LeadingData:
    """Returns c_d (the volume) and c_{d-1} (half the normalized boundary volume)."""
    d = polynomial.ambient_dim
    full = polynomial.degree == d
    leading = polynomial.coeffs[polynomial.degree] if polynomial.degree >= 0 else Fraction(0)
    return LeadingData(
        volume=polynomial.coefficient(d),
        half_boundary=polynomial.coefficient(d - 1) if full else None,
        leading_coefficient=leading,
        lower_dimensional=not full,
    )


def ehrhart_pair(ideal: MonomialIdeal) -> tuple[EhrhartPolynomial, EhrhartPolynomial]:
    simplex, lower = split_generators(build_polyhedron(ideal))
    return ehrhart_polynomial(simplex), ehrhart_polynomial(lower)


def normal_hilbert_polynomial(ideal: MonomialIdeal) -> RationalPolynomial:
    """E_S - E_P; its leading coefficient is vol(S) - vol(P) and its constant term is 0."""
    simplex_poly, lower_poly = ehrhart_pair(ideal)
    return simplex_poly - lower_poly


def normal_hilbert_via_ehrhart(ideal: MonomialIdeal, n: int) -> int:
    value = normal_hilbert_polynomial(ideal)(n)
    if value < 0 or value.denominator != 1:
        raise TheoremViolation(f"E_S({n}) - E_P({n}) = {value} is not a length")
    return int(value)
