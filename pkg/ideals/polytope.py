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
import functools
import itertools
import math
from typing import Iterator, Literal, Sequence

import numpy as np
import pydantic
import sympy

from errors import DimensionMismatchError
from .lp import is_feasible

CountMethod = Literal["facets", "lp"]

# (normal, rhs) with integer entries.
HalfSpace = tuple[tuple[int, ...], int]


class LatticePolytope(pydantic.BaseModel):
    """conv(vertices) for integral vertices in the nonnegative orthant."""

    model_config = pydantic.ConfigDict(frozen=True)

    dim_ambient: pydantic.PositiveInt
    vertices: tuple[tuple[pydantic.NonNegativeInt, ...], ...] = pydantic.Field(min_length=1)

    @pydantic.field_validator("vertices")
    @classmethod
    def _deduplicate(cls, vertices, info: pydantic.ValidationInfo):
        d = info.data.get("dim_ambient")
        if d is not None:
            for v in vertices:
                if len(v) != d:
                    raise ValueError(f"vertex {list(v)} has length {len(v)}, expected {d}")
        return tuple(sorted(set(vertices)))


class HalfSpaces(pydantic.BaseModel):
    """H-representation: equations e.x = r and inequalities c.x >= r."""

    model_config = pydantic.ConfigDict(frozen=True)

    dimension: int
    equations: tuple[HalfSpace, ...]
    inequalities: tuple[HalfSpace, ...]


def _primitive(vector: Sequence) -> tuple[int, ...]:
    rationals = [sympy.Rational(x) for x in vector]
    scale = math.lcm(*(int(x.q) for x in rationals))
    ints = [int(x * scale) for x in rationals]
    g = math.gcd(*ints)
    return tuple(i // g for i in ints) if g else tuple(ints)


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


@functools.lru_cache(maxsize=512)
def half_spaces(polytope: LatticePolytope) -> HalfSpaces:
    """Computes the facets of P inside its affine hull."""
    d = polytope.dim_ambient
    vertices = polytope.vertices
    v0 = vertices[0]
    diffs = [[v[i] - v0[i] for i in range(d)] for v in vertices[1:]]
    M = sympy.Matrix(diffs) if diffs else sympy.zeros(1, d)

    equations = []
    for e in M.nullspace():
        normal = _primitive(list(e))
        equations.append((normal, _dot(normal, v0)))

    directions = [list(w) for w in M.rowspace()]
    r = len(directions)
    inequalities: set[HalfSpace] = set()
    if r:
        for subset in itertools.combinations(vertices, r):
            t0 = subset[0]
            rows = [
                [sum(w[k] * (t[k] - t0[k]) for k in range(d)) for w in directions]
                for t in subset[1:]
            ]
            kernel = sympy.Matrix(rows).nullspace() if rows else [sympy.Matrix([1])]
            if len(kernel) != 1:
                continue
            mu = kernel[0]
            normal = _primitive(
                [sum(mu[l] * directions[l][k] for l in range(r)) for k in range(d)]
            )
            rhs = _dot(normal, t0)
            values = [_dot(normal, v) for v in vertices]
            if all(value >= rhs for value in values):
                inequalities.add((normal, rhs))
            elif all(value <= rhs for value in values):
                inequalities.add((tuple(-c for c in normal), -rhs))
    return HalfSpaces(
        dimension=r,
        equations=tuple(sorted(equations)),
        inequalities=tuple(sorted(inequalities)),
    )


def box_points(lower: Sequence[int], upper: Sequence[int]) -> np.ndarray:
    """All integer points of the box lower <= a <= upper, one per row."""
    lower = np.asarray(lower, dtype=np.int64)
    shape = tuple(int(u - l + 1) for u, l in zip(upper, lower))
    return np.indices(shape, dtype=np.int64).reshape(len(shape), -1).T + lower


def box_slices(lower: Sequence[int], upper: Sequence[int]) -> Iterator[np.ndarray]:
    """The points of `box_points(lower, upper)`, one value of the first coordinate at a time."""
    if len(lower) == 1:
        yield box_points(lower, upper)
        return
    rest = box_points(lower[1:], upper[1:])
    column = np.empty((len(rest), 1), dtype=np.int64)
    for first in range(int(lower[0]), int(upper[0]) + 1):
        column.fill(first)
        yield np.hstack([column, rest])


def _facet_mask(points: np.ndarray, hs: HalfSpaces, n: int) -> np.ndarray:
    mask = np.ones(len(points), dtype=bool)
    for normal, rhs in hs.equations:
        mask &= points @ np.asarray(normal, dtype=np.int64) == n * rhs
    for normal, rhs in hs.inequalities:
        mask &= points @ np.asarray(normal, dtype=np.int64) >= n * rhs
    return mask


def in_dilate(polytope: LatticePolytope, a: Sequence[int], n: int) -> bool:
    """Exact LP test of a ∈ nP: λ >= 0, Σλ = n, Σλ_i v_i = a."""
    if len(a) != polytope.dim_ambient:
        raise DimensionMismatchError(polytope.dim_ambient, len(a))
    vertices = polytope.vertices
    A = [[v[j] for v in vertices] for j in range(polytope.dim_ambient)]
    A.append([1] * len(vertices))
    return is_feasible(A, list(a) + [n])


def count_lattice_points(polytope: LatticePolytope, n: int, method: CountMethod = "facets") -> int:
    """|nP ∩ Z^d| over the bounding box of nP."""
    vertices = np.array(polytope.vertices, dtype=np.int64)
    lower = n * vertices.min(axis=0)
    upper = n * vertices.max(axis=0)
    if method == "lp":
        ranges = [range(int(l), int(u) + 1) for l, u in zip(lower, upper)]
        return sum(1 for a in itertools.product(*ranges) if in_dilate(polytope, a, n))
    hs = half_spaces(polytope)
    return sum(int(np.count_nonzero(_facet_mask(points, hs, n))) for points in box_slices(lower, upper))
