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
"""Instance checks of the inequalities for Hilbert coefficients of closure filtrations.

Every check returns a `Check` whose status is one of

  - "holds" / "equality": the statement is true here, strictly or with equality;
  - "violated": the statement fails although its hypotheses are met;
  - "skipped": the hypotheses are not met (e.g. I is not a parameter ideal);
  - "inconclusive": the Hilbert polynomial could not be extracted.

Statements involving a minimal reduction are only checked for parameter
ideals, where I itself is a minimal reduction of {closure(I^n)}. Reduction
numbers are verified up to `n_max` and reported as such.
"""
import functools
import logging
from typing import Any, Callable, Literal, Optional

import pydantic

from errors import InputError, NotParameterError, RangeTooShortError, TheoremViolation
from filtrations import NormalFiltration, OrdinaryFiltration
from hilbert import HilbertData, binomial, coefficients, series_numerator
from ideals import (
    MonomialIdeal,
    colength,
    ideal_sum,
    intersect,
    missing_generator,
    product,
    quotient_length,
)

logger = logging.getLogger(__name__)

DEFAULT_NMAX = 8

Status = Literal["holds", "equality", "violated", "skipped", "inconclusive"]

CHECK_IDS = (
    "multiplicity_agrees",
    "huneke_itoh",
    "briancon_skoda",
    "itoh_e1",
    "itoh_e2",
    "itoh_e3",
    "classify_e2",
    "e1_equality_normality",
    "ipro1",
    "huckaba_marley",
    "marley_e1",
    "marley_e2",
    "nonnegativity",
    "northcott",
    "e1_vanishing",
    "high_coefficients_vanish",
    "postulation_reduction",
)


class Check(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    id: str
    status: Status
    detail: dict[str, Any] = {}


class Lengths(pydantic.BaseModel):
    """λ(Ī/I), λ(Ī²/IĪ), λ(R/Ī) and λ(R/I)."""

    model_config = pydantic.ConfigDict(frozen=True)

    closure_over_ideal: int
    square_closure_over_product: int
    normal_colength: int
    colength: int

    def to_json(self) -> dict:
        return {
            "closure/I": self.closure_over_ideal,
            "closure(I^2)/I*closure": self.square_closure_over_product,
            "R/closure": self.normal_colength,
            "R/I": self.colength,
        }


class DiagnosticsReport(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    ideal: MonomialIdeal
    n_max: int
    lengths: Lengths
    e: Optional[tuple[int, ...]]
    e_bar: Optional[tuple[int, ...]]
    checks: tuple[Check, ...]
    # None: Ī^{n+1} = I Ī^n fails at n_max, or I is not a parameter ideal.
    reduction_bound: Optional[int]

    @property
    def violations(self) -> list[Check]:
        return [c for c in self.checks if c.status == "violated"]

    def check(self, check_id: str) -> Check:
        return next(c for c in self.checks if c.id == check_id)

    def to_json(self) -> dict:
        if self.reduction_bound is not None:
            bound: Any = self.reduction_bound
        elif self.ideal.is_parameter:
            bound = f"not reached by n_max={self.n_max}"
        else:
            bound = None
        return {
            "ideal": self.ideal.to_json_dict(),
            "lengths": self.lengths.to_json(),
            "e": list(self.e) if self.e is not None else None,
            "e_bar": list(self.e_bar) if self.e_bar is not None else None,
            "checks": [c.model_dump() for c in self.checks],
            "reduction_bound": bound,
        }


def _compare(lhs: int, rhs: int) -> Status:
    """Status of the statement lhs >= rhs."""
    if lhs > rhs:
        return "holds"
    return "equality" if lhs == rhs else "violated"


class Diagnostician:
    """Runs the checks on one m-primary monomial ideal, sharing powers and closures."""

    def __init__(self, ideal: MonomialIdeal, n_max: int = DEFAULT_NMAX):
        if n_max < 2:
            # Reduction bounds up to 2 are compared against equality cases.
            raise InputError(f"n_max must be at least 2, got {n_max}")
        ideal.require_m_primary()
        self._ideal = ideal
        self._n_max = n_max
        self._ordinary = OrdinaryFiltration(ideal)
        self._normal = NormalFiltration(ideal)

    @property
    def ideal(self) -> MonomialIdeal:
        return self._ideal

    @property
    def n_max(self) -> int:
        return self._n_max

    @property
    def d(self) -> int:
        return self._ideal.dim

    def closure(self, n: int) -> MonomialIdeal:
        return self._normal.term(n)

    def power(self, n: int) -> MonomialIdeal:
        return self._ordinary.term(n)

    @functools.cached_property
    def ordinary_data(self) -> HilbertData:
        return coefficients(self._ideal, "ordinary", filtration=self._ordinary)

    @functools.cached_property
    def normal_data(self) -> HilbertData:
        return coefficients(self._ideal, "normal", filtration=self._normal)

    @functools.cached_property
    def lengths(self) -> Lengths:
        closure = self.closure(1)
        return Lengths(
            closure_over_ideal=quotient_length(closure, self._ideal),
            square_closure_over_product=quotient_length(
                self.closure(2), product(self._ideal, closure)
            ),
            normal_colength=colength(closure),
            colength=colength(self._ideal),
        )

    def _require_parameter(self) -> None:
        if not self._ideal.is_parameter:
            raise NotParameterError(f"{self._ideal} is not generated by pure powers")

    def _reduction_holds(self, n: int) -> bool:
        if n == 0:
            return self.closure(1) == self._ideal
        return self.closure(n + 1) == product(self._ideal, self.closure(n))

    @functools.cached_property
    def reduction_bound(self) -> Optional[int]:
        """Smallest r with closure(I^{n+1}) = I closure(I^n) for r <= n <= n_max."""
        self._require_parameter()
        bound = None
        for n in range(self._n_max, -1, -1):
            if not self._reduction_holds(n):
                break
            bound = n
        logger.debug("reduction bound of %s up to %d: %s", self._ideal, self._n_max, bound)
        return bound

    def _reduction_at_most(self, r: int) -> bool:
        return self.reduction_bound is not None and self.reduction_bound <= r

    def _closed_form_numerator(self) -> list[int]:
        ell = self.lengths.normal_colength
        l2 = self.lengths.square_closure_over_product
        return [ell, self.normal_data.e[0] - ell - l2, l2]

    def _numerator_matches(self, expected: list[int]) -> tuple[bool, list[int]]:
        observed = series_numerator(self.normal_data.samples)
        padded = expected + [0] * (len(observed) - len(expected))
        return observed == padded, observed

    def multiplicity_agrees(self) -> Check:
        e0, e0_bar = self.ordinary_data.e[0], self.normal_data.e[0]
        status: Status = "equality" if e0 == e0_bar else "violated"
        return Check(id="multiplicity_agrees", status=status, detail={"e0": e0, "e0_bar": e0_bar})

    def huneke_itoh(self, n: int) -> Check:
        """I^n ∩ closure(I^{n+1}) = I^n closure(I)."""
        self._require_parameter()
        if n < 1:
            raise ValueError("n must be at least 1")
        lhs = intersect(self.power(n), self.closure(n + 1))
        rhs = product(self.power(n), self.closure(1))
        if lhs == rhs:
            return Check(id="huneke_itoh", status="equality", detail={"n": n})
        witness = missing_generator(rhs, lhs) or missing_generator(lhs, rhs)
        return Check(id="huneke_itoh", status="violated", detail={"n": n, "witness": list(witness)})

    def briancon_skoda(self, n: int) -> Check:
        """closure(I^{n+d}) ⊆ I^{n+1}."""
        witness = missing_generator(self.power(n + 1), self.closure(n + self.d))
        if witness is None:
            return Check(id="briancon_skoda", status="holds", detail={"n": n})
        return Check(
            id="briancon_skoda", status="violated", detail={"n": n, "witness": list(witness)}
        )

    def itoh_e1(self) -> Check:
        """ē_1 >= λ(Ī/I) + λ(Ī²/IĪ), with equality iff r̄ <= 2."""
        self._require_parameter()
        e1_bar = self.normal_data.e[1]
        bound = self.lengths.closure_over_ideal + self.lengths.square_closure_over_product
        status = _compare(e1_bar, bound)
        detail = {"e1_bar": e1_bar, "bound": bound, "reduction_bound": self.reduction_bound}
        if status != "violated" and (status == "equality") != self._reduction_at_most(2):
            detail["mismatch"] = "equality does not match reduction bound <= 2"
            status = "violated"
        return Check(id="itoh_e1", status=status, detail=detail)

    def itoh_e2(self) -> Check:
        """ē_2 >= ē_1 - λ(Ī/I), with equality iff r̄ <= 2."""
        self._require_parameter()
        if self.d < 2:
            return Check(id="itoh_e2", status="skipped", detail={"reason": "d < 2"})
        e = self.normal_data.e
        bound = e[1] - self.lengths.closure_over_ideal
        status = _compare(e[2], bound)
        detail: dict[str, Any] = {"e2_bar": e[2], "bound": bound}
        if status != "violated" and (status == "equality") != self._reduction_at_most(2):
            detail["mismatch"] = "equality does not match reduction bound <= 2"
            status = "violated"
        if status == "equality":
            expected = self._closed_form_numerator()
            matches, observed = self._numerator_matches(expected)
            detail["numerator"] = observed
            if not matches:
                detail["expected_numerator"] = expected
                status = "violated"
        return Check(id="itoh_e2", status=status, detail=detail)

    def itoh_e3(self) -> Check:
        """ē_3 >= 0; if ē_3 = 0 then closure(I^{n+2}) ⊆ I^n."""
        self._require_parameter()
        if self.d < 3:
            return Check(id="itoh_e3", status="skipped", detail={"reason": "d < 3"})
        e3 = self.normal_data.e[3]
        status = _compare(e3, 0)
        detail: dict[str, Any] = {"e3_bar": e3}
        if e3 == 0:
            for n in range(1, self._n_max):
                witness = missing_generator(self.power(n), self.closure(n + 2))
                if witness is not None:
                    detail.update(n=n, witness=list(witness))
                    status = "violated"
                    break
            # Itoh's conjecture concerns the Gorenstein case with closure(I) = m.
            evidence = self._reduction_at_most(2)
            detail["reduction_bound_at_most_2"] = evidence
            logger.info("e3_bar = 0 for %s; reduction bound <= 2: %s", self._ideal, evidence)
        return Check(id="itoh_e3", status=status, detail=detail)

    def classify_e2(self) -> Check:
        self._require_parameter()
        if self.d < 2:
            return Check(id="classify_e2", status="skipped", detail={"reason": "d < 2"})
        e = self.normal_data.e
        detail: dict[str, Any] = {"e2_bar": e[2], "reduction_bound": self.reduction_bound}
        if e[2] == 0:
            status: Status = "holds" if self._reduction_at_most(1) else "violated"
            return Check(id="classify_e2", status=status, detail=detail)
        if e[2] != 1:
            detail["reason"] = "e2_bar >= 2, no classification claimed"
            return Check(id="classify_e2", status="skipped", detail=detail)
        ell = self.lengths.normal_colength
        # The numerator sums to e_0 at t = 1.
        expected = [ell, e[0] - ell - 1, 1]
        matches, observed = self._numerator_matches(expected)
        detail["numerator"] = observed
        ok = e[1] == e[0] - ell + 1 and self.reduction_bound == 2 and matches
        return Check(id="classify_e2", status="holds" if ok else "violated", detail=detail)

    def e1_equality_normality(self, n_max: Optional[int] = None) -> Check:
        """For parameter ideals, e_1 = ē_1 forces closure(I^n) = I^n.

        Other ideals with e_1 = ē_1 are only observed: normal ones such as m²
        report `holds`, the rest `skipped` with the first n where the powers
        are not closed.
        """
        n_max = n_max or self._n_max
        e1, e1_bar = self.ordinary_data.e[1], self.normal_data.e[1]
        detail: dict[str, Any] = {"e1": e1, "e1_bar": e1_bar}
        if e1 != e1_bar:
            detail["reason"] = "hypothesis not met"
            return Check(id="e1_equality_normality", status="skipped", detail=detail)
        for n in range(1, n_max + 1):
            if self.power(n) != self.closure(n):
                detail["n"] = n
                if self._ideal.is_parameter:
                    return Check(id="e1_equality_normality", status="violated", detail=detail)
                detail["reason"] = "not a parameter ideal"
                logger.debug("e1 = e1_bar on %s, but closure(I^%d) != I^%d", self._ideal, n, n)
                return Check(id="e1_equality_normality", status="skipped", detail=detail)
        detail["verified_up_to"] = n_max
        return Check(id="e1_equality_normality", status="holds", detail=detail)

    def ipro1_bound(self, n: int) -> int:
        d = self.d
        l1 = self.lengths.closure_over_ideal
        l2 = self.lengths.square_closure_over_product
        return (
            self.lengths.colength * binomial(n + d, d)
            - (l1 + l2) * binomial(n + d - 1, d - 1)
            + l2 * binomial(n + d - 2, d - 2)
        )

    def ipro1(self, n: int) -> Check:
        """λ(R/closure(I^{n+1})) <= the bound from λ(R/I), λ(Ī/I) and λ(Ī²/IĪ)."""
        self._require_parameter()
        observed = self._normal.colength(n + 1)
        bound = self.ipro1_bound(n)
        return Check(
            id="ipro1",
            status=_compare(bound, observed),
            detail={"n": n, "observed": observed, "bound": bound},
        )

    def ipro1_all(self) -> Check:
        """Per-n bounds for 0 <= n <= n_max; equality for all n >= 1 iff r̄ <= 2."""
        self._require_parameter()
        per_n = [self.ipro1(n) for n in range(self._n_max + 1)]
        if any(c.status == "violated" for c in per_n):
            bad = next(c for c in per_n if c.status == "violated")
            return Check(id="ipro1", status="violated", detail=bad.detail)
        all_equal = all(c.status == "equality" for c in per_n[1:])
        detail: dict[str, Any] = {"equal_for_all_n": all_equal, "tested_up_to": self._n_max}
        if all_equal != self._reduction_at_most(2):
            detail["mismatch"] = "equality does not match reduction bound <= 2"
            return Check(id="ipro1", status="violated", detail=detail)
        return Check(id="ipro1", status="equality" if all_equal else "holds", detail=detail)

    def huckaba_marley(self, n_max: Optional[int] = None) -> Check:
        """Σ λ((Īⁿ, I)/I) <= ē_1 <= Σ λ(Īⁿ/IĪⁿ⁻¹), summed until the terms vanish."""
        self._require_parameter()
        n_max = n_max or self._n_max
        base = colength(self._ideal)
        lower = upper = 0
        truncated = True
        for n in range(1, n_max + 1):
            closure = self.closure(n)
            below = self._ideal if n == 1 else product(self._ideal, self.closure(n - 1))
            lower_term = base - colength(ideal_sum(closure, self._ideal))
            upper_term = colength(below) - colength(closure)
            lower += lower_term
            upper += upper_term
            if n > 1 and lower_term == 0 and upper_term == 0:
                truncated = False
                break
        e1_bar = self.normal_data.e[1]
        detail = {"lower": lower, "upper": upper, "e1_bar": e1_bar, "truncated": truncated}
        if lower > e1_bar:
            status: Status = "violated"
        elif e1_bar > upper:
            status = "inconclusive" if truncated else "violated"
        else:
            status = "equality" if e1_bar == upper else "holds"
        return Check(id="huckaba_marley", status=status, detail=detail)

    def marley_e1(self) -> Check:
        """ē_1 >= e_1."""
        e1, e1_bar = self.ordinary_data.e[1], self.normal_data.e[1]
        return Check(id="marley_e1", status=_compare(e1_bar, e1), detail={"e1": e1, "e1_bar": e1_bar})

    def marley_e2(self) -> Check:
        """e_2 >= 0 for the I-adic and the normal filtration."""
        if self.d < 2:
            return Check(id="marley_e2", status="skipped", detail={"reason": "d < 2"})
        e2, e2_bar = self.ordinary_data.e[2], self.normal_data.e[2]
        statuses = (_compare(e2, 0), _compare(e2_bar, 0))
        status: Status = "violated" if "violated" in statuses else "holds"
        return Check(id="marley_e2", status=status, detail={"e2": e2, "e2_bar": e2_bar})

    def nonnegativity(self) -> Check:
        """ē_i >= 0 for i < d and ē_d = 0."""
        e = self.normal_data.e
        negative = [i for i in range(self.d) if e[i] < 0]
        detail: dict[str, Any] = {"e_bar": list(e)}
        if negative:
            detail["negative"] = negative
            return Check(id="nonnegativity", status="violated", detail=detail)
        if e[self.d] != 0:
            detail["reason"] = "normal Hilbert polynomial does not vanish at 0"
            return Check(id="nonnegativity", status="violated", detail=detail)
        return Check(id="nonnegativity", status="holds", detail=detail)

    def northcott(self) -> Check:
        """λ(R/Ī) >= ē_0 - ē_1; for parameter ideals equality iff r̄ <= 1."""
        e = self.normal_data.e
        ell = self.lengths.normal_colength
        status = _compare(ell, e[0] - e[1])
        detail: dict[str, Any] = {"colength": ell, "bound": e[0] - e[1]}
        if status != "violated" and self._ideal.is_parameter:
            if (status == "equality") != self._reduction_at_most(1):
                detail["mismatch"] = "equality does not match reduction bound <= 1"
                status = "violated"
        return Check(id="northcott", status=status, detail=detail)

    def e1_vanishing(self) -> Check:
        """ē_1 = 0 forces I to be a normal parameter ideal."""
        e1_bar = self.normal_data.e[1]
        if e1_bar != 0:
            return Check(id="e1_vanishing", status="skipped", detail={"e1_bar": e1_bar})
        ok = (
            self._ideal.is_parameter
            and self.reduction_bound == 0
            and all(self.power(n) == self.closure(n) for n in range(1, self._n_max + 1))
        )
        return Check(id="e1_vanishing", status="holds" if ok else "violated", detail={"e1_bar": 0})

    def high_coefficients_vanish(self) -> Check:
        """r̄ <= 2 forces ē_i = 0 for i >= 3."""
        self._require_parameter()
        if self.d < 3 or not self._reduction_at_most(2):
            return Check(id="high_coefficients_vanish", status="skipped", detail={})
        e = self.normal_data.e
        nonzero = [i for i in range(3, self.d + 1) if e[i] != 0]
        status: Status = "violated" if nonzero else "holds"
        return Check(id="high_coefficients_vanish", status=status, detail={"nonzero": nonzero})

    def postulation_reduction(self) -> Check:
        """With r̄ <= 2 the reduction number is n̄ + d."""
        self._require_parameter()
        if not self._reduction_at_most(2):
            return Check(id="postulation_reduction", status="skipped", detail={})
        data = self.normal_data
        postulation = data.postulation
        if postulation is None:
            # H vanishes for n <= 0 and P(0) = 0, so n̄ is the largest n < 0 with P(n) != 0.
            postulation = next(n for n in range(-1, -self.d - 1, -1) if data.polynomial(n) != 0)
        r = self.reduction_bound
        detail = {"postulation": postulation, "reduction_bound": r}
        status: Status = "equality" if r == postulation + self.d else "violated"
        return Check(id="postulation_reduction", status=status, detail=detail)

    def _per_n(self, check_id: str, check: Callable[[int], Check], ns: range) -> Check:
        results = [check(n) for n in ns]
        bad = [c for c in results if c.status == "violated"]
        if bad:
            return bad[0]
        status: Status = "equality" if all(c.status == "equality" for c in results) else "holds"
        return Check(id=check_id, status=status, detail={"n": [ns.start, ns.stop - 1]})

    def run_check(self, check_id: str) -> Check:
        """Runs one check by id, mapping unmet hypotheses and extraction failures to a status."""
        try:
            if check_id == "huneke_itoh":
                return self._per_n(check_id, self.huneke_itoh, range(1, self._n_max + 1))
            elif check_id == "briancon_skoda":
                stop = max(self._n_max - self.d, 0) + 1
                return self._per_n(check_id, self.briancon_skoda, range(stop))
            elif check_id == "ipro1":
                return self.ipro1_all()
            elif check_id in CHECK_IDS:
                return getattr(self, check_id)()
            raise ValueError(f"Unknown check: {check_id}")
        except NotParameterError:
            return Check(id=check_id, status="skipped", detail={"reason": "not a parameter ideal"})
        except RangeTooShortError as e:
            return Check(id=check_id, status="inconclusive", detail={"reason": str(e)})

    def _safe_e(self, name: str) -> Optional[tuple[int, ...]]:
        try:
            return getattr(self, name).e
        except RangeTooShortError:
            return None

    def report(self) -> DiagnosticsReport:
        """Runs every check; raises TheoremViolation when one of them is violated."""
        checks = tuple(self.run_check(check_id) for check_id in CHECK_IDS)
        try:
            bound = self.reduction_bound
        except NotParameterError:
            bound = None
        result = DiagnosticsReport(
            ideal=self._ideal,
            n_max=self._n_max,
            lengths=self.lengths,
            e=self._safe_e("ordinary_data"),
            e_bar=self._safe_e("normal_data"),
            checks=checks,
            reduction_bound=bound,
        )
        if result.violations:
            names = ", ".join(c.id for c in result.violations)
            raise TheoremViolation(f"violated on {self._ideal}: {names}", report=result)
        return result


def huneke_itoh(ideal: MonomialIdeal, n: int = 1) -> Check:
    return Diagnostician(ideal).huneke_itoh(n)


def briancon_skoda(ideal: MonomialIdeal, n: int = 0) -> Check:
    return Diagnostician(ideal).briancon_skoda(n)


def itoh_e1(ideal: MonomialIdeal, n_max: int = DEFAULT_NMAX) -> Check:
    return Diagnostician(ideal, n_max).itoh_e1()


def itoh_e2(ideal: MonomialIdeal, n_max: int = DEFAULT_NMAX) -> Check:
    return Diagnostician(ideal, n_max).itoh_e2()


def classify_e2(ideal: MonomialIdeal, n_max: int = DEFAULT_NMAX) -> Check:
    return Diagnostician(ideal, n_max).classify_e2()


def e1_equality_normality(ideal: MonomialIdeal, n_max: int = DEFAULT_NMAX) -> Check:
    return Diagnostician(ideal, n_max).e1_equality_normality()


def ipro1(ideal: MonomialIdeal, n: int) -> Check:
    return Diagnostician(ideal).ipro1(n)


def reduction_number_bounded(ideal: MonomialIdeal, n_max: int = DEFAULT_NMAX) -> Optional[int]:
    return Diagnostician(ideal, n_max).reduction_bound


def huckaba_marley_bounds(ideal: MonomialIdeal, n_max: int = DEFAULT_NMAX) -> Check:
    return Diagnostician(ideal, n_max).huckaba_marley()


def diagnose(ideal: MonomialIdeal, n_max: int = DEFAULT_NMAX) -> DiagnosticsReport:
    return Diagnostician(ideal, n_max).report()
