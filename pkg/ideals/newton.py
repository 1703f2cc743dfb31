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
"""Newton polyhedra of m-primary monomial ideals.

Q = Q_+^d + conv(v_1, ..., v_q). The closure of I^n is generated by the
monomials x^a with a ∈ nQ, and λ(R/closure(I^n)) = |N^d minus nQ|.
"""
import functools
import itertools
import logging
import math
from fractions import Fraction
from typing import Sequence

import numpy as np
import pydantic

from errors import DimensionMismatchError, InputError, TheoremViolation
from .lp import is_feasible, solve_square
from .monomial import (
    ExponentVector,
    MonomialIdeal,
    format_monomial,
    minimal_points,
    minimalize,
    missing_generator,
    product,
)
from .polytope import CountMethod, HalfSpace, LatticePolytope, box_points, box_slices

logger = logging.getLogger(__name__)


class NewtonPolyhedron(pydantic.BaseModel):
    """Newton polyhedron of an m-primary monomial ideal.

    `generators` lists the d pure powers a_i e_i first, then the generators
    strictly below the hyperplane <v, weight> = 1, then the remaining ones.
    `facets` holds the lower facets as integer pairs (c, r) meaning c.x >= r.
    """

    model_config = pydantic.ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dim: pydantic.PositiveInt
    generators: tuple[ExponentVector, ...]
    pure_bounds: tuple[pydantic.PositiveInt, ...]
    weight: tuple[Fraction, ...]
    below_count: pydantic.NonNegativeInt
    facets: tuple[HalfSpace, ...]

    @property
    def below_hyperplane(self) -> tuple[ExponentVector, ...]:
        return self.generators[self.dim : self.dim + self.below_count]

    def mask(self, points: np.ndarray, n: int) -> np.ndarray:
        """Vectorized facet test of the rows of `points` against nQ."""
        inside = np.all(points >= 0, axis=1)
        for normal, rhs in self.facets:
            inside &= points @ np.asarray(normal, dtype=np.int64) >= n * rhs
        return inside

    def contains(self, a: Sequence[int], n: int) -> bool:
        if len(a) != self.dim:
            raise DimensionMismatchError(self.dim, len(a))
        return bool(self.mask(np.array([a], dtype=np.int64), n)[0])


def _pairing(v: Sequence[int], weight: Sequence[Fraction]) -> Fraction:
    return sum((e * w for e, w in zip(v, weight)), Fraction(0))


def _lower_facets(gens: Sequence[ExponentVector], d: int) -> tuple[HalfSpace, ...]:
    # Facet normals of Q are the vertices of {c >= 0 : <c, v_j> >= 1 for all j}.
    constraints = [(list(v), 1) for v in gens]
    constraints += [([1 if j == i else 0 for j in range(d)], 0) for i in range(d)]
    facets: set[HalfSpace] = set()
    for combo in itertools.combinations(constraints, d):
        c = solve_square([row for row, _ in combo], [rhs for _, rhs in combo])
        if c is None or any(x < 0 for x in c):
            continue
        if any(_pairing(v, c) < 1 for v in gens):
            continue
        scale = math.lcm(*(x.denominator for x in c))
        ints = [int(x * scale) for x in c]
        g = math.gcd(*ints, scale)
        facets.add((tuple(i // g for i in ints), scale // g))
    return tuple(sorted(facets))


@functools.lru_cache(maxsize=256)
def build_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    bounds = ideal.require_m_primary()
    d = ideal.dim
    weight = tuple(Fraction(1, b) for b in bounds)
    pure = [tuple(b if j == i else 0 for j in range(d)) for i, b in enumerate(bounds)]
    rest = [g for g in ideal.gens if g not in pure]
    below = [g for g in rest if _pairing(g, weight) < 1]
    above = [g for g in rest if _pairing(g, weight) >= 1]
    return NewtonPolyhedron(
        dim=d,
        generators=tuple(pure + below + above),
        pure_bounds=bounds,
        weight=weight,
        below_count=len(below),
        facets=_lower_facets(ideal.gens, d),
    )


def in_scaled_polyhedron(polyhedron: NewtonPolyhedron, a: Sequence[int], n: int) -> bool:
    """Exact LP test of a ∈ nQ: λ >= 0, Σλ_i = n, Σλ_i v_i <= a."""
    d = polyhedron.dim
    if len(a) != d:
        raise DimensionMismatchError(d, len(a))
    gens = polyhedron.generators
    A = [[v[j] for v in gens] + [1 if k == j else 0 for k in range(d)] for j in range(d)]
    A.append([1] * len(gens) + [0] * d)
    return is_feasible(A, list(a) + [n])


def _check_power(n: int) -> None:
    if n < 1:
        raise InputError("power exponent must be at least 1")


def integral_closure_power(ideal: MonomialIdeal, n: int = 1) -> MonomialIdeal:
    """closure(I^n), generated by the minimal lattice points of nQ."""
    _check_power(n)
    polyhedron = build_polyhedron(ideal)
    shape = tuple(n * b + 1 for b in polyhedron.pure_bounds)
    points = box_points([0] * ideal.dim, [s - 1 for s in shape])
    inside = polyhedron.mask(points, n).reshape(shape)
    return minimalize(minimal_points(inside), ideal.dim)


def normal_colength(ideal: MonomialIdeal, n: int, method: CountMethod = "facets") -> int:
    """λ(R/closure(I^n)) = |N^d minus nQ|, counted on the box of the pure powers."""
    if n == 0:
        return 0
    _check_power(n)
    polyhedron = build_polyhedron(ideal)
    upper = [n * b - 1 for b in polyhedron.pure_bounds]
    if method == "lp":
        ranges = [range(u + 1) for u in upper]
        return sum(
            1 for a in itertools.product(*ranges) if not in_scaled_polyhedron(polyhedron, a, n)
        )
    return sum(
        int(len(points) - np.count_nonzero(polyhedron.mask(points, n)))
        for points in box_slices([0] * ideal.dim, upper)
    )


def closure_product_contained(ideal: MonomialIdeal, m: int, n: int) -> bool:
    """Verifies closure(I^m) closure(I^n) ⊆ closure(I^{m+n}) and returns whether equality holds.

    Equality is only recorded; normality of the Rees algebra is not assumed.
    """
    lhs = product(integral_closure_power(ideal, m), integral_closure_power(ideal, n))
    rhs = integral_closure_power(ideal, m + n)
    witness = missing_generator(rhs, lhs)
    if witness is not None:
        raise TheoremViolation(
            f"{format_monomial(witness)} lies in closure(I^{m}) closure(I^{n}) "
            f"but not in closure(I^{m + n}) for {ideal}"
        )
    equal = lhs == rhs
    relation = "=" if equal else "⊊"
    logger.debug("closure(I^%d) closure(I^%d) %s closure(I^%d) for %s", m, n, relation, m + n, ideal)
    return equal


def split_generators(polyhedron: NewtonPolyhedron) -> tuple[LatticePolytope, LatticePolytope]:
    """S = conv(0, pure powers) and P = conv(pure powers, generators below the hyperplane)."""
    d = polyhedron.dim
    pure = polyhedron.generators[:d]
    simplex = LatticePolytope(dim_ambient=d, vertices=((0,) * d,) + pure)
    lower = LatticePolytope(dim_ambient=d, vertices=pure + polyhedron.below_hyperplane)
    return simplex, lower
