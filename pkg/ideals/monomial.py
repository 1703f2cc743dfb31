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
import logging
import math
import random
from typing import Iterable, Optional, Sequence

import numpy as np
import pydantic

from errors import (
    ContainmentError,
    DimensionMismatchError,
    EmptyIdealError,
    InputError,
    NotPrimaryError,
)

logger = logging.getLogger(__name__)

# Exponent vectors are plain tuples so that ideals hash and compare as sets.
ExponentVector = tuple[int, ...]

# Above this many cells the dominance test falls back to pairwise comparison.
MAX_BOX_CELLS = 4_000_000

VARIABLE_NAMES = "xyzw"


def upward_closure(points: np.ndarray, shape: Sequence[int]) -> np.ndarray:
    """Marks every cell of the box that dominates one of `points`.

    Points lying outside the box are ignored; nothing inside the box can
    dominate them.
    """
    box = np.zeros(tuple(shape), dtype=bool)
    if len(points):
        inside = points[np.all(points < np.asarray(shape), axis=1)]
        if len(inside):
            box[tuple(inside.T)] = True
    for axis in range(box.ndim):
        box = np.logical_or.accumulate(box, axis=axis)
    return box


def minimal_points(box: np.ndarray) -> list[ExponentVector]:
    """Returns the minimal cells of an upward-closed boolean box, in lex order."""
    minimal = box.copy()
    for axis in range(box.ndim):
        dst = [slice(None)] * box.ndim
        src = [slice(None)] * box.ndim
        dst[axis] = slice(1, None)
        src[axis] = slice(None, -1)
        predecessor = np.zeros_like(box)
        predecessor[tuple(dst)] = box[tuple(src)]
        minimal &= ~predecessor
    return [tuple(p) for p in np.argwhere(minimal).tolist()]


def _minimal_rows(rows: np.ndarray) -> tuple[ExponentVector, ...]:
    rows = np.unique(np.asarray(rows, dtype=np.int64), axis=0)
    if len(rows) == 1:
        return (tuple(int(x) for x in rows[0]),)
    shape = tuple(int(m) + 1 for m in rows.max(axis=0))
    if math.prod(shape) <= MAX_BOX_CELLS:
        return tuple(minimal_points(upward_closure(rows, shape)))

    order = np.argsort(rows.sum(axis=1), kind="stable")
    kept = np.empty_like(rows)
    count = 0
    for row in rows[order]:
        if count and np.any(np.all(kept[:count] <= row, axis=1)):
            continue
        kept[count] = row
        count += 1
    return tuple(sorted(tuple(int(x) for x in row) for row in kept[:count]))


class MonomialIdeal(pydantic.BaseModel):
    """A monomial ideal of k[x_1, ..., x_d], stored by its minimal generators.

    Generators are minimalized and sorted lexicographically on construction,
    so two ideals are equal exactly when their generator tuples are.
    """

    model_config = pydantic.ConfigDict(frozen=True, populate_by_name=True)

    dim: pydantic.PositiveInt = pydantic.Field(alias="vars")
    gens: tuple[tuple[pydantic.NonNegativeInt, ...], ...] = pydantic.Field(
        alias="generators", min_length=1
    )

    @pydantic.field_validator("gens")
    @classmethod
    def _minimal_generators(cls, gens, info: pydantic.ValidationInfo):
        dim = info.data.get("dim")
        if dim is None:
            return gens
        for g in gens:
            if len(g) != dim:
                raise ValueError(f"generator {list(g)} has length {len(g)}, expected {dim}")
            if not any(g):
                raise ValueError("the unit ideal is not representable")
        return _minimal_rows(np.array(gens))

    @property
    def pure_bounds(self) -> tuple[Optional[int], ...]:
        """Exponent of the pure power x_i^a_i among the generators, per coordinate."""
        bounds: list[Optional[int]] = [None] * self.dim
        for g in self.gens:
            support = [i for i, e in enumerate(g) if e]
            if len(support) == 1:
                bounds[support[0]] = g[support[0]]
        return tuple(bounds)

    @property
    def is_m_primary(self) -> bool:
        return all(b is not None for b in self.pure_bounds)

    @property
    def is_parameter(self) -> bool:
        """True when I is generated by pure powers of all the variables."""
        return self.is_m_primary and len(self.gens) == self.dim

    def require_m_primary(self) -> tuple[int, ...]:
        bounds = self.pure_bounds
        for i, b in enumerate(bounds):
            if b is None:
                raise NotPrimaryError(i)
        return tuple(bounds)

    def to_json_dict(self) -> dict:
        return {"vars": self.dim, "generators": [list(g) for g in self.gens]}

    def __str__(self) -> str:
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def _from_minimal(dim: int, gens: tuple[ExponentVector, ...]) -> MonomialIdeal:
    return MonomialIdeal.model_construct(vars=dim, generators=gens)


def format_monomial(a: Sequence[int]) -> str:
    names = VARIABLE_NAMES if len(a) <= len(VARIABLE_NAMES) else None
    parts = []
    for i, e in enumerate(a):
        if not e:
            continue
        name = names[i] if names else f"x{i + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) or "1"


def _check_vector(a: Sequence[int], d: int) -> None:
    if len(a) != d:
        raise DimensionMismatchError(d, len(a))
    if any(e < 0 for e in a):
        raise InputError(f"negative exponent in {list(a)}")


def _check_same_dim(ideal: MonomialIdeal, other: MonomialIdeal) -> None:
    if ideal.dim != other.dim:
        raise DimensionMismatchError(ideal.dim, other.dim)


def minimalize(vectors: Iterable[Sequence[int]], d: int) -> MonomialIdeal:
    """Builds the monomial ideal generated by `vectors`."""
    vectors = [tuple(int(e) for e in v) for v in vectors]
    if not vectors:
        raise EmptyIdealError("at least one generator is required")
    for v in vectors:
        _check_vector(v, d)
        if not any(v):
            raise InputError("the unit ideal is not representable")
    return _from_minimal(d, _minimal_rows(np.array(vectors)))


def contains_monomial(ideal: MonomialIdeal, a: Sequence[int]) -> bool:
    _check_vector(a, ideal.dim)
    return any(all(gi <= ai for gi, ai in zip(g, a)) for g in ideal.gens)


def missing_generator(ideal: MonomialIdeal, sub: MonomialIdeal) -> Optional[ExponentVector]:
    """Returns a generator of `sub` outside `ideal`, or None when sub ⊆ ideal."""
    _check_same_dim(ideal, sub)
    for g in sub.gens:
        if not contains_monomial(ideal, g):
            return g
    return None


def product(ideal: MonomialIdeal, other: MonomialIdeal) -> MonomialIdeal:
    _check_same_dim(ideal, other)
    a = np.array(ideal.gens, dtype=np.int64)
    b = np.array(other.gens, dtype=np.int64)
    sums = (a[:, None, :] + b[None, :, :]).reshape(-1, ideal.dim)
    return _from_minimal(ideal.dim, _minimal_rows(sums))


def power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """Computes I^n by repeated squaring."""
    if n < 1:
        raise InputError("power exponent must be at least 1")
    result: Optional[MonomialIdeal] = None
    base = ideal
    while n:
        if n & 1:
            result = base if result is None else product(result, base)
        n >>= 1
        if n:
            base = product(base, base)
    return result


def intersect(ideal: MonomialIdeal, other: MonomialIdeal) -> MonomialIdeal:
    _check_same_dim(ideal, other)
    a = np.array(ideal.gens, dtype=np.int64)
    b = np.array(other.gens, dtype=np.int64)
    lcms = np.maximum(a[:, None, :], b[None, :, :]).reshape(-1, ideal.dim)
    return _from_minimal(ideal.dim, _minimal_rows(lcms))


def ideal_sum(ideal: MonomialIdeal, other: MonomialIdeal) -> MonomialIdeal:
    _check_same_dim(ideal, other)
    rows = np.vstack([np.array(ideal.gens), np.array(other.gens)])
    return _from_minimal(ideal.dim, _minimal_rows(rows))


def colength(ideal: MonomialIdeal) -> int:
    """λ(R/I): the number of standard monomials, counted on the staircase box."""
    bounds = ideal.require_m_primary()
    box = upward_closure(np.array(ideal.gens, dtype=np.int64), bounds)
    return int(box.size - np.count_nonzero(box))


def quotient_length(ideal: MonomialIdeal, sub: MonomialIdeal) -> int:
    """λ(A/B) for B ⊆ A."""
    witness = missing_generator(ideal, sub)
    if witness is not None:
        raise ContainmentError(witness)
    return colength(sub) - colength(ideal)


def random_ideal(
    rng: random.Random,
    d: int,
    max_exponent: int,
    extra_generators: int = 3,
    parameter: bool = False,
) -> MonomialIdeal:
    """Draws an m-primary monomial ideal with pure powers at most `max_exponent`."""
    bounds = [rng.randint(1, max_exponent) for _ in range(d)]
    vectors = [tuple(b if j == i else 0 for j in range(d)) for i, b in enumerate(bounds)]
    if not parameter:
        for _ in range(rng.randint(0, extra_generators)):
            v = tuple(rng.randint(0, b - 1) for b in bounds)
            if any(v):
                vectors.append(v)
    return minimalize(vectors, d)
