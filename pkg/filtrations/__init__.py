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
from ideals import MonomialIdeal
from .filtration import Filtration, FiltrationKind
from .normal.normal import NormalFiltration
from .ordinary.ordinary import OrdinaryFiltration


def make_filtration(ideal: MonomialIdeal, kind: FiltrationKind) -> Filtration:
    if kind == "ordinary":
        return OrdinaryFiltration(ideal)
    elif kind == "normal":
        return NormalFiltration(ideal)
    raise ValueError(f"Unknown filtration: {kind}")


__all__ = [
    "Filtration",
    "FiltrationKind",
    "NormalFiltration",
    "OrdinaryFiltration",
    "make_filtration",
]
