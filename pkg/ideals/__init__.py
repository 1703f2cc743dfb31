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
from .monomial import (
    ExponentVector,
    MonomialIdeal,
    colength,
    contains_monomial,
    ideal_sum,
    intersect,
    minimalize,
    missing_generator,
    power,
    product,
    quotient_length,
    random_ideal,
)
from .newton import (
    NewtonPolyhedron,
    build_polyhedron,
    closure_product_contained,
    in_scaled_polyhedron,
    integral_closure_power,
    normal_colength,
    split_generators,
)
from .polytope import LatticePolytope, count_lattice_points, half_spaces, in_dilate

__all__ = [
    "ExponentVector",
    "MonomialIdeal",
    "colength",
    "contains_monomial",
    "ideal_sum",
    "intersect",
    "minimalize",
    "missing_generator",
    "power",
    "product",
    "quotient_length",
    "random_ideal",
    "NewtonPolyhedron",
    "build_polyhedron",
    "closure_product_contained",
    "in_scaled_polyhedron",
    "integral_closure_power",
    "normal_colength",
    "split_generators",
    "LatticePolytope",
    "count_lattice_points",
    "half_spaces",
    "in_dilate",
]
