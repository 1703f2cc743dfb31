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
"""Simplicial complexes and the Chern number of the face ring's maximal ideal.

For a (d-1)-dimensional complex Δ the face ring k[Δ] has
e_1(m) = ē_1(m) = d f_{d-1} - f_{d-2} = h'(1), which is negative for the
non-pure family Δ_n = {{1,2},{3},...,{n+2}}.
"""
import itertools

import pydantic
import sympy


class SimplicialComplex(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, populate_by_name=True)

    n_vertices: pydantic.PositiveInt = pydantic.Field(alias="vertices")
    facets: tuple[frozenset[pydantic.PositiveInt], ...] = pydantic.Field(min_length=1)

    @pydantic.field_validator("facets")
    @classmethod
    def _antichain(cls, facets, info: pydantic.ValidationInfo):
        n = info.data.get("n_vertices")
        for facet in facets:
            if not facet:
                raise ValueError("facets must be nonempty")
            if n is not None and max(facet) > n:
                raise ValueError(f"vertex {max(facet)} outside 1..{n}")
        for a, b in itertools.permutations(facets, 2):
            if a <= b:
                raise ValueError(f"facet {sorted(a)} is contained in {sorted(b)}")
        return tuple(sorted(facets, key=lambda f: (len(f), sorted(f))))

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def to_json_dict(self) -> dict:
        return {"vertices": self.n_vertices, "facets": [sorted(f) for f in self.facets]}


class FVector(pydantic.BaseModel):
    """(f_{-1}, f_0, ..., f_{d-1})."""

    model_config = pydantic.ConfigDict(frozen=True)

    f: tuple[pydantic.NonNegativeInt, ...]

    @pydantic.field_validator("f")
    @classmethod
    def _empty_face(cls, f):
        if not f or f[0] != 1:
            raise ValueError("f_{-1} must be 1")
        return f

    @property
    def d(self) -> int:
        return len(self.f) - 1


def f_vector(complex_: SimplicialComplex) -> FVector:
    faces: set[frozenset[int]] = set()
    for facet in complex_.facets:
        for size in range(len(facet) + 1):
            faces.update(frozenset(c) for c in itertools.combinations(sorted(facet), size))
    counts = [0] * (complex_.dimension + 2)
    for face in faces:
        counts[len(face)] += 1
    return FVector(f=tuple(counts))


def _h_polynomial(f: FVector) -> sympy.Poly:
    t = sympy.Symbol("t")
    d = f.d
    expr = sum(f.f[i] * t**i * (1 - t) ** (d - i) for i in range(d + 1))
    return sympy.Poly(sympy.expand(expr), t)


def h_vector(f: FVector) -> list[int]:
    """Coefficients of Σ f_{i-1} t^i (1-t)^{d-i}, padded to length d+1."""
    coeffs = [int(c) for c in reversed(_h_polynomial(f).all_coeffs())]
    return coeffs + [0] * (f.d + 1 - len(coeffs))


def chern_number(complex_: SimplicialComplex) -> int:
    f = f_vector(complex_).f
    d = complex_.dimension + 1
    return d * f[d] - f[d - 1]


def chern_via_h_derivative(complex_: SimplicialComplex) -> int:
    """h'(1)."""
    poly = _h_polynomial(f_vector(complex_))
    return int(poly.diff().eval(1))


def is_pure(complex_: SimplicialComplex) -> bool:
    return len({len(f) for f in complex_.facets}) == 1


def delta_n(n: int) -> SimplicialComplex:
    """Δ_n = {{1,2},{3},...,{n+2}}."""
    facets = [frozenset({1, 2})] + [frozenset({v}) for v in range(3, n + 3)]
    return SimplicialComplex(vertices=n + 2, facets=facets)
