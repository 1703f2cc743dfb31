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
from typing import Any, Optional


class InputError(ValueError):
    """Invalid user input. The CLI exits with status 2."""


class EmptyIdealError(InputError):
    pass


class DimensionMismatchError(InputError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"Dimension mismatch: expected {expected}, got {got}")
        self.expected = expected
        self.got = got


class NotPrimaryError(InputError):
    """The ideal has no pure power in some coordinate."""

    def __init__(self, coordinate: int):
        super().__init__(
            f"Ideal is not m-primary: no pure power of x{coordinate + 1}"
        )
        self.coordinate = coordinate


class NotParameterError(InputError):
    """The ideal is not generated by pure powers of the variables."""


class ContainmentError(InputError):
    def __init__(self, witness: tuple[int, ...]):
        super().__init__(f"Containment fails: generator {list(witness)} is missing")
        self.witness = witness


class RangeTooShortError(RuntimeError):
    """The sampled range does not reach the polynomial regime."""

    def __init__(self, index: int):
        super().__init__(f"range too short: polynomial regime not reached (index {index})")
        self.index = index


class EhrhartMismatchError(RuntimeError):
    def __init__(self, n: int, expected: int, got: Any):
        super().__init__(
            f"Ehrhart interpolation disagrees with the count at n={n}: "
            f"counted {expected}, polynomial gives {got}"
        )


class TheoremViolation(AssertionError):
    """A verified statement failed on an input meeting its hypotheses.

    This can only come from an implementation bug. The CLI exits with status 3.
    """

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report
