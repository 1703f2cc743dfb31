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
import abc
from typing import Literal

from ideals import MonomialIdeal

FiltrationKind = Literal["ordinary", "normal"]


class Filtration(abc.ABC):
    """Defines an interface for filtrations {I_n} of an m-primary monomial ideal."""

    kind: FiltrationKind

    def __init__(self, ideal: MonomialIdeal):
        ideal.require_m_primary()
        self._ideal = ideal
        self._terms: dict[int, MonomialIdeal] = {}

    @property
    def ideal(self) -> MonomialIdeal:
        return self._ideal

    @abc.abstractmethod
    def term(self, n: int) -> MonomialIdeal:
        """Returns I_n for n >= 1."""

    @abc.abstractmethod
    def colength(self, n: int) -> int:
        """Returns λ(R/I_n); the value at n = 0 is 0 since I_0 = R."""

    def hilbert_function(self, stop: int) -> list[int]:
        """Returns H(0), ..., H(stop)."""
        return [self.colength(n) for n in range(stop + 1)]
