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
import argparse
import json
import logging
import os
import random
import sys
from pathlib import Path
from typing import Any, Optional

import pydantic
import termcolor
from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from diagnostics import DEFAULT_NMAX, diagnose
from ehrhart import ehrhart_pair, format_rational, leading_data, normal_hilbert_polynomial
from errors import (
    DimensionMismatchError,
    EhrhartMismatchError,
    InputError,
    RangeTooShortError,
    TheoremViolation,
)
from face_ring import SimplicialComplex, chern_number, f_vector, h_vector, is_pure
from hilbert import coefficients, default_range, sample, series, series_numerator
from ideals import MonomialIdeal, colength, integral_closure_power, random_ideal
from rlr2d import PointBasis, hoskin_deligne, lipman_polynomial, mixed_e1, mixed_length

VERBS = (
    "closure",
    "hilbert",
    "coeffs",
    "series",
    "diagnose",
    "ehrhart",
    "face-ring",
    "rlr2d",
    "hoskin-deligne",
)
EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VIOLATION = 3
RANDOM_MAX_EXPONENT = 5

console = Console()
logger = logging.getLogger("nhl")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nhl",
        description="Integral closures and normal Hilbert coefficients of monomial ideals.",
    )
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument(
        "--ideal",
        action="append",
        default=[],
        help='JSON file {"vars": d, "generators": [[...], ...]}; twice for two-ideal queries.',
    )
    parser.add_argument("--power", type=int, default=1, help="Exponent n of closure(I^n).")
    parser.add_argument("--range", type=int, dest="sample_range", help="Sample H(0..N).")
    parser.add_argument("--nmax", type=int, help="Bound for reduction-number claims.")
    parser.add_argument("--format", choices=["table", "json"], default="table")
    parser.add_argument("--filtration", choices=["ordinary", "normal"], default="normal")
    parser.add_argument("--complex", help='JSON file {"vertices": n, "facets": [[1, 2], [3]]}.')
    parser.add_argument("--basis", help='JSON file {"basis": [[o, d], ...]}.')
    parser.add_argument("--r", type=int, help="Exponent of the first ideal.")
    parser.add_argument("--s", type=int, help="Exponent of the second ideal.")
    parser.add_argument("--seed", type=int, help="Draw a random ideal instead of reading --ideal.")
    parser.add_argument("--vars", type=int, default=2, help="Dimension of the random ideal.")
    parser.add_argument("--log-level", help="Overrides NHL_LOG_LEVEL.")
    return parser


def configure_logging(level: Optional[str]) -> None:
    level = (level or os.environ.get("NHL_LOG_LEVEL", "WARNING")).upper()
    if not isinstance(logging.getLevelName(level), int):
        raise InputError(f"unknown log level {level!r}")
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e


def load_ideals(args: argparse.Namespace) -> list[MonomialIdeal]:
    if args.seed is not None and not args.ideal:
        ideal = random_ideal(random.Random(args.seed), args.vars, RANDOM_MAX_EXPONENT)
        logger.info("seed %d drew %s", args.seed, ideal)
        return [ideal]
    if not args.ideal:
        raise InputError(f"{args.verb} needs --ideal")
    ideals = [MonomialIdeal.model_validate_json(_read(p)) for p in args.ideal]
    for other in ideals[1:]:
        if other.dim != ideals[0].dim:
            raise DimensionMismatchError(ideals[0].dim, other.dim)
    return ideals


def _n_max(args: argparse.Namespace) -> int:
    if args.nmax is not None:
        return args.nmax
    value = os.environ.get("NHL_NMAX", str(DEFAULT_NMAX))
    try:
        return int(value)
    except ValueError as e:
        raise InputError(f"NHL_NMAX must be an integer, got {value!r}") from e


def run_closure(args: argparse.Namespace) -> dict:
    ideal = load_ideals(args)[0]
    closure = integral_closure_power(ideal, args.power)
    return {
        "ideal": ideal.to_json_dict(),
        "power": args.power,
        "generators": [list(g) for g in closure.gens],
        "colength": colength(closure),
    }


def run_hilbert(args: argparse.Namespace) -> dict:
    ideal = load_ideals(args)[0]
    N = default_range(ideal.dim) if args.sample_range is None else args.sample_range
    samples = sample(ideal, args.filtration, N)
    return {"filtration": args.filtration, "samples": list(samples.values)}


def run_coeffs(args: argparse.Namespace) -> dict:
    ideal = load_ideals(args)[0]
    return coefficients(ideal, args.filtration, args.sample_range).to_json()


def run_series(args: argparse.Namespace) -> dict:
    ideal = load_ideals(args)[0]
    N = default_range(ideal.dim) if args.sample_range is None else args.sample_range
    samples = sample(ideal, args.filtration, N)
    return {"series": series(samples), "numerator": series_numerator(samples)}


def run_diagnose(args: argparse.Namespace) -> dict:
    return diagnose(load_ideals(args)[0], _n_max(args)).to_json()


def run_ehrhart(args: argparse.Namespace) -> dict:
    ideal = load_ideals(args)[0]
    simplex_poly, lower_poly = ehrhart_pair(ideal)
    difference = normal_hilbert_polynomial(ideal)
    lower = leading_data(lower_poly)
    return {
        "E_S": simplex_poly.to_json(),
        "E_P": lower_poly.to_json(),
        "normal_hilbert": difference.to_json(),
        "volume": format_rational(leading_data(difference).volume),
        "P_half_boundary": (
            format_rational(lower.half_boundary) if lower.half_boundary is not None else None
        ),
        "P_lower_dimensional": lower.lower_dimensional,
    }


def run_face_ring(args: argparse.Namespace) -> dict:
    if not args.complex:
        raise InputError("face-ring needs --complex")
    complex_ = SimplicialComplex.model_validate_json(_read(args.complex))
    f = f_vector(complex_)
    return {
        "f": list(f.f),
        "h": h_vector(f),
        "chern": chern_number(complex_),
        "pure": is_pure(complex_),
    }


def run_rlr2d(args: argparse.Namespace) -> dict:
    ideals = load_ideals(args)
    if len(ideals) == 1:
        return lipman_polynomial(ideals[0], _n_max(args)).to_json()
    if args.r is None or args.s is None:
        raise InputError("two-ideal rlr2d queries need --r and --s")
    predicted, observed = mixed_length(ideals[0], ideals[1], args.r, args.s)
    return {
        "e1_mixed": mixed_e1(ideals[0], ideals[1]),
        "r": args.r,
        "s": args.s,
        "predicted": predicted,
        "observed": observed,
    }


def run_hoskin_deligne(args: argparse.Namespace) -> dict:
    if not args.basis:
        raise InputError("hoskin-deligne needs --basis")
    return hoskin_deligne(PointBasis.model_validate_json(_read(args.basis))).model_dump()


HANDLERS = {
    "closure": run_closure,
    "hilbert": run_hilbert,
    "coeffs": run_coeffs,
    "series": run_series,
    "diagnose": run_diagnose,
    "ehrhart": run_ehrhart,
    "face-ring": run_face_ring,
    "rlr2d": run_rlr2d,
    "hoskin-deligne": run_hoskin_deligne,
}


def _cell(value: Any) -> str:
    return value if isinstance(value, str) else json.dumps(value)


def emit(verb: str, payload: dict, output_format: str) -> None:
    if output_format == "json":
        sys.stdout.write(json.dumps(payload) + "\n")
        return
    if verb == "diagnose":
        checks = Table(title="checks")
        for column in ("id", "status", "detail"):
            checks.add_column(column)
        for check in payload["checks"]:
            checks.add_row(check["id"], check["status"], _cell(check["detail"]))
        payload = {k: v for k, v in payload.items() if k != "checks"}
        console.print(checks)
    table = Table(title=verb)
    table.add_column("field")
    table.add_column("value")
    for key, value in payload.items():
        table.add_row(key, _cell(value))
    console.print(table)


def main(argv: Optional[list[str]] = None) -> int:
    load_dotenv()
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        configure_logging(args.log_level)
        payload = HANDLERS[args.verb](args)
    except (InputError, pydantic.ValidationError) as e:
        termcolor.cprint(f"input error: {e}", color="red", file=sys.stderr)
        return EXIT_INPUT
    except RangeTooShortError as e:
        termcolor.cprint(f"{e}; retry with a larger --range", color="yellow", file=sys.stderr)
        return EXIT_INPUT
    except EhrhartMismatchError as e:
        termcolor.cprint(f"internal error: {e}", color="red", attrs=["bold"], file=sys.stderr)
        return EXIT_VIOLATION
    except TheoremViolation as e:
        termcolor.cprint(f"theorem violation: {e}", color="red", attrs=["bold"], file=sys.stderr)
        if e.report is not None:
            dump = e.report.to_json() if hasattr(e.report, "to_json") else e.report
            sys.stderr.write(json.dumps(dump, default=str) + "\n")
        return EXIT_VIOLATION

    emit(args.verb, payload, args.format)
    if args.verb == "diagnose" and args.format == "table":
        skipped = sum(1 for c in payload["checks"] if c["status"] in ("skipped", "inconclusive"))
        color = "yellow" if skipped else "green"
        termcolor.cprint(f"{len(payload['checks'])} checks, {skipped} not applied", color, file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
