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
from ideals import (
    MonomialIdeal,
    NewtonPolyhedron,
    build_polyhedron,
    integral_closure_power,
    normal_colength,
)
from ..filtration import Filtration


class NormalFiltration(Filtration):
    """The integral closure filtration {closure(I^n)}, read off the Newton polyhedron."""

    kind = "normal"

    def __init__(self, ideal: MonomialIdeal):
        super().__init__(ideal)
        self._polyhedron = build_polyhedron(ideal)

    @property
    def polyhedron(self) -> NewtonPolyhedron:
        return self._polyhedron

    def term(self, n: int) -> MonomialIdeal:
        if n not in self._terms:
            self._terms[n] = integral_closure_power(self._ideal, n)
        return self._terms[n]

    def colength(self, n: int) -> int:
        return normal_colength(self._ideal, n)
