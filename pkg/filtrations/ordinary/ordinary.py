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
from ideals import MonomialIdeal, colength, power, product
from ..filtration import Filtration


class OrdinaryFiltration(Filtration):
    """The I-adic filtration {I^n}."""

    kind = "ordinary"

    def term(self, n: int) -> MonomialIdeal:
        if n not in self._terms:
            previous = self._terms.get(n - 1)
            if previous is not None:
                self._terms[n] = product(previous, self._ideal)
            else:
                self._terms[n] = power(self._ideal, n)
        return self._terms[n]

    def colength(self, n: int) -> int:
        if n == 0:
            return 0
        return colength(self.term(n))
