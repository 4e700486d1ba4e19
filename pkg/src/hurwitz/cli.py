"""Command-line front end.

Coefficients are given in ASCENDING order, constant term first:
``--coeffs 1,3,2,1`` is 1 + 3s + 2s^2 + s^3.

Exit codes: 0 analysis completed (whatever the verdict), 2 usage error,
3 the root oracle failed to converge.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import __version__
from .report import CRITERIA, DEFAULT_SEED, MODES, AnalysisRequest, render, run
from .root_oracle import IndeterminateError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3

SEED_ENV = "HURWITZ_SEED"


def parse_coefficients(text: str) -> Tuple[Fraction, ...]:
    """'1,0.5,3/2' -> (1, 1/2, 3/2); decimals are taken digit for digit."""
    parts = [t.strip() for t in text.split(",")]
    if not text.strip() or any(not t for t in parts):
        raise ValueError(f"malformed coefficient list {text!r}")
    try:
        return tuple(Fraction(t) for t in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed coefficient list {text!r}: {exc}") from None


def _criteria(text: str) -> Tuple[str, ...]:
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    bad = [n for n in names if n not in CRITERIA]
    if bad or not names:
        raise argparse.ArgumentTypeError(
            f"criteria must be a comma list drawn from {', '.join(CRITERIA)}"
        )
    return names


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hurwitz",
        description="Hurwitz / Schur stability of a real polynomial "
        "(coefficients ascending, constant term first).",
    )
    ap.add_argument("--mode", choices=MODES, default="continuous")
    src = ap.add_mutually_exclusive_group(required=True)
    src.add_argument("--coeffs", help="comma-separated ascending coefficients, e.g. 1,3,2,1 or 1,0.5,3/2")
    src.add_argument("--batch", metavar="FILE", help="one coefficient list per line; JSON lines out")
    ap.add_argument("--criteria", type=_criteria, default=CRITERIA,
                    help=f"comma list from {','.join(CRITERIA)} (default: all)")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED,
                    help=f"positivity sampling seed (env {SEED_ENV} overrides)")
    ap.add_argument("--json", action="store_true", help="emit JSON instead of a text table")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return ap


def _seed(args, parser) -> int:
    env = os.environ.get(SEED_ENV)
    if env is None:
        return args.seed
    try:
        return int(env, 0)
    except ValueError:
        parser.error(f"{SEED_ENV} must be an integer, got {env!r}")


def parse_request(argv: Optional[Sequence[str]] = None) -> AnalysisRequest:
    """Parse a single-polynomial invocation. Usage errors exit with status 2."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.coeffs is None:
        parser.error("--coeffs is required here")
    try:
        coeffs = parse_coefficients(args.coeffs)
    except ValueError as exc:
        parser.error(str(exc))
    return AnalysisRequest(
        coefficients=coeffs,
        mode=args.mode,
        criteria=args.criteria,
        sample_seed=_seed(args, parser),
        output="json" if args.json else "text",
    )


def _run_batch(path: str, args, seed: int, parser) -> int:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh]
    except OSError as exc:
        parser.error(f"cannot read batch file: {exc}")
    requests: List[AnalysisRequest] = []
    for i, ln in enumerate(lines, 1):
        if not ln or ln.startswith("#"):
            continue
        try:
            coeffs = parse_coefficients(ln)
        except ValueError as exc:
            parser.error(f"{path}:{i}: {exc}")
        requests.append(AnalysisRequest(coeffs, args.mode, args.criteria, seed, "json"))
    status = EXIT_OK
    for req in requests:
        try:
            sys.stdout.write(render(run(req), "json", compact=True))
        except IndeterminateError as exc:
            print(f"hurwitz: {exc}", file=sys.stderr)
            status = EXIT_INDETERMINATE
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.batch is not None:
        return _run_batch(args.batch, args, _seed(args, parser), parser)
    request = parse_request(argv)
    try:
        report = run(request)
    except IndeterminateError as exc:
        print(f"hurwitz: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    sys.stdout.write(render(report, request.output))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
