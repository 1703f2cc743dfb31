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
"""Hypothesis strategies for monomial ideals and simplicial complexes.

Ideals are drawn from their exponent vectors, so a failing example shrinks
to small pure powers and few extra generators.
"""
import itertools
from typing import Sequence

from hypothesis import strategies

from face_ring import SimplicialComplex
from ideals import MonomialIdeal, minimalize


@strategies.composite
def monomial_ideals(
    draw,
    dims: Sequence[int] = (2,),
    max_exponent: int = 4,
    extra_generators: int = 3,
    parameter: bool = False,
) -> MonomialIdeal:
    d = draw(strategies.sampled_from(dims))
    bounds = draw(strategies.lists(strategies.integers(1, max_exponent), min_size=d, max_size=d))
    vectors = [tuple(b if j == i else 0 for j in range(d)) for i, b in enumerate(bounds)]
    if not parameter:
        below = strategies.tuples(*(strategies.integers(0, b - 1) for b in bounds))
        extra = draw(strategies.lists(below, max_size=extra_generators))
        vectors += [v for v in extra if any(v)]
    return minimalize(vectors, d)


def parameter_ideals(dims: Sequence[int] = (2,), max_exponent: int = 4):
    return monomial_ideals(dims=dims, max_exponent=max_exponent, parameter=True)


@strategies.composite
def pure_complexes(draw, max_vertices: int = 8) -> SimplicialComplex:
    """Pure complexes whose facets are distinct k-subsets of {1, ..., n}."""
    n = draw(strategies.integers(1, max_vertices))
    k = draw(strategies.integers(1, n))
    candidates = [frozenset(c) for c in itertools.combinations(range(1, n + 1), k)]
    facets = draw(strategies.lists(strategies.sampled_from(candidates), min_size=1, unique=True))
    return SimplicialComplex(vertices=n, facets=facets)
