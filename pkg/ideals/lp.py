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
"""Exact linear algebra over the rationals.

Only `fractions.Fraction` ever enters these routines; membership questions
are decided on the boundary, where floating point cannot be trusted.
"""
from fractions import Fraction
from typing import Literal, Optional, Sequence

Matrix = list[list[Fraction]]


class PhaseOneTableau:
    """Phase-one simplex for {x : A x = b, x >= 0}.

    One artificial variable per row starts in the basis; the tableau minimizes
    their sum with Bland's rule, so it terminates on degenerate problems.
    """

    def __init__(self, A: Sequence[Sequence[int | Fraction]], b: Sequence[int | Fraction]):
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.rows: Matrix = []
        self.rhs: list[Fraction] = []
        for row, value in zip(A, b):
            sign = -1 if value < 0 else 1
            artificial = [Fraction(0)] * self.m
            artificial[len(self.rows)] = Fraction(1)
            self.rows.append([Fraction(sign * a) for a in row] + artificial)
            self.rhs.append(Fraction(sign * value))
        self.basis = list(range(self.n, self.n + self.m))
        width = self.n + self.m
        self.cost = [
            -sum((self.rows[i][j] for i in range(self.m)), Fraction(0)) if j < self.n else Fraction(0)
            for j in range(width)
        ]
        self.value = sum(self.rhs, Fraction(0))

    def pivot(self, i: int, j: int) -> None:
        row = self.rows[i]
        piv = row[j]
        self.rows[i] = row = [a / piv for a in row]
        self.rhs[i] /= piv
        for k in range(self.m):
            if k != i and self.rows[k][j]:
                f = self.rows[k][j]
                self.rows[k] = [a - f * r for a, r in zip(self.rows[k], row)]
                self.rhs[k] -= f * self.rhs[i]
        f = self.cost[j]
        if f:
            self.cost = [c - f * r for c, r in zip(self.cost, row)]
            self.value += f * self.rhs[i]
        self.basis[i] = j

    def bland_step(self) -> Literal["optimal", "go_on"]:
        entering = next((j for j, c in enumerate(self.cost) if c < 0), None)
        if entering is None:
            return "optimal"
        candidates = [
            (self.rhs[i] / self.rows[i][entering], self.basis[i], i)
            for i in range(self.m)
            if self.rows[i][entering] > 0
        ]
        # The phase-one objective is bounded below by zero.
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return "go_on"

    def solve(self) -> bool:
        while self.bland_step() == "go_on":
            pass
        return self.value == 0


def is_feasible(A: Sequence[Sequence[int | Fraction]], b: Sequence[int | Fraction]) -> bool:
    """Decides whether A x = b has a solution with x >= 0."""
    if not A:
        return True
    return PhaseOneTableau(A, b).solve()


def solve_square(A: Sequence[Sequence[int | Fraction]], b: Sequence[int | Fraction]) -> Optional[list[Fraction]]:
    """Solves the square system A x = b; returns None when A is singular."""
    size = len(A)
    rows = [[Fraction(a) for a in row] + [Fraction(v)] for row, v in zip(A, b)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        piv = rows[col][col]
        rows[col] = [a / piv for a in rows[col]]
        for r in range(size):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * p for a, p in zip(rows[r], rows[col])]
    return [rows[r][size] for r in range(size)]
