"""Run the selected criteria on one polynomial and render the result."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from .polynomials import Polynomial, has_positive_coefficients
from .rational_functions import SampleConfig
from .root_oracle import (
    IndeterminateError,
    OracleVerdict,
    classify_hurwitz,
    classify_schur,
    find_roots,
)
from .stability import (
    NotApplicable,
    Verdict,
    bilinear_substitute,
    hurwitz_by_reactance,
    routh_array,
    schur_stable_via_bilinear,
    theorem2_check,
)

CRITERIA = ("reactance", "routh", "theorem2", "oracle", "bilinear")
MODES = ("continuous", "discrete")
DEFAULT_SEED = 0x5EED


@dataclass(frozen=True)
class AnalysisRequest:
    coefficients: Tuple[Fraction, ...]
    mode: str = "continuous"
    criteria: Tuple[str, ...] = CRITERIA
    sample_seed: int = DEFAULT_SEED
    output: str = "text"

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("coefficient list is empty")
        if not self.criteria:
            raise ValueError("no criterion selected")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        unknown = set(self.criteria) - set(CRITERIA)
        if unknown:
            raise ValueError(f"unknown criteria: {', '.join(sorted(unknown))}")


@dataclass(frozen=True)
class CriterionVerdict:
    verdict: Verdict
    evidence: dict = field(default_factory=dict)


@dataclass(frozen=True)
class StabilityReport:
    input: Polynomial
    mode: str
    seed: int
    verdicts: Dict[str, CriterionVerdict]
    final: Verdict


# -- evidence helpers -------------------------------------------------------


def _rat(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _rats(xs) -> List[str]:
    return [_rat(x) for x in xs]


def _num(x: float) -> float:
    v = float(f"{x:.15g}")
    return 0.0 if v == 0 else v


def _cplx(z: complex) -> List[float]:
    return [_num(z.real), _num(z.imag)]


def _sorted_roots(roots) -> list:
    # input is real: imaginary parts at rounding level belong to real roots
    roots = [complex(z.real, 0.0) if abs(z.imag) <= 1e-12 * (1 + abs(z)) else z for z in roots]
    return sorted(roots, key=lambda z: (round(z.real, 12), round(z.imag, 12)))


_TO_DISCRETE = {
    Verdict.HURWITZ: Verdict.SCHUR_STABLE,
    Verdict.NOT_HURWITZ: Verdict.NOT_SCHUR_STABLE,
}


def _na(reason: str) -> CriterionVerdict:
    return CriterionVerdict(Verdict.NOT_APPLICABLE, {"reason": reason})


# -- individual criteria ----------------------------------------------------


def _reactance(p: Polynomial) -> CriterionVerdict:
    res = hurwitz_by_reactance(p)
    ev = {"reason": res.reason}
    if res.verdict is not Verdict.NOT_APPLICABLE:
        ev["negated"] = res.negated
    if res.expansion is not None:
        ev["orientation"] = "odd/even" if res.reciprocal else "even/odd"
        ev["cauer_coefficients"] = _rats(res.expansion.coefficients)
        ev["status"] = res.expansion.status
        ev["degenerate_step"] = res.expansion.degenerate_step
    return CriterionVerdict(res.verdict, ev)


def _routh(p: Polynomial) -> CriterionVerdict:
    try:
        rr = routh_array(p)
    except NotApplicable as exc:
        return _na(str(exc))
    return CriterionVerdict(
        rr.verdict,
        {
            "first_column": _rats(rr.first_column),
            "classification": rr.classification,
            "singular_row": rr.singular_row,
        },
    )


def _theorem2(p: Polynomial, seed: int) -> CriterionVerdict:
    if p.degree < 1:
        return _na("degree must be at least 1")
    if p.leading < 0:
        p = -p
    if not has_positive_coefficients(p):
        return _na("coefficients are not all positive")
    t2 = theorem2_check(p, sampler=SampleConfig(seed=seed))
    return CriterionVerdict(
        t2.verdict,
        {
            "positive": t2.positive.label,
            "witness": _cplx(t2.positive.witness) if t2.positive.witness is not None else None,
            "no_common_roots": t2.no_common_roots,
            "min_root_separation": None if t2.min_root_separation is None else _num(t2.min_root_separation),
            "boundary_ok": t2.boundary_ok,
            "boundary_points": t2.boundary_points,
            "hurwitz_claim": t2.hurwitz_claim.classification,
        },
    )


def _oracle(p: Polynomial, discrete: bool) -> CriterionVerdict:
    if p.degree < 1:
        return _na("degree must be at least 1")
    rs = find_roots(p)
    if not rs.converged:
        raise IndeterminateError(
            f"root oracle did not converge (residual {rs.residual:.3e})"
        )
    roots = _sorted_roots(rs.roots)
    ev = {"roots": [_cplx(r) for r in roots], "residual": _num(rs.residual)}
    if discrete:
        ov = classify_schur(rs)
        witness = max(roots, key=abs)
        ev["max_modulus"] = _num(abs(witness))
        verdicts = {
            OracleVerdict.YES: Verdict.SCHUR_STABLE,
            OracleVerdict.NO: Verdict.NOT_SCHUR_STABLE,
            OracleVerdict.MARGINAL: Verdict.MARGINAL,
        }
    else:
        ov = classify_hurwitz(rs)
        witness = max(roots, key=lambda z: z.real)
        ev["max_real_part"] = _num(witness.real)
        verdicts = {
            OracleVerdict.YES: Verdict.HURWITZ,
            OracleVerdict.NO: Verdict.NOT_HURWITZ,
            OracleVerdict.MARGINAL: Verdict.MARGINAL,
        }
    ev["witness"] = None if ov is OracleVerdict.YES else _cplx(witness)
    return CriterionVerdict(verdicts[ov], ev)


def _bilinear(d: Polynomial) -> CriterionVerdict:
    res = schur_stable_via_bilinear(d)
    ev = {"image": _rats(res.image.coeffs), "reason": res.reason}
    if res.routh is not None:
        ev["first_column"] = _rats(res.routh.first_column)
    return CriterionVerdict(res.verdict, ev)


def _on_image(cv: CriterionVerdict, image: Polynomial) -> CriterionVerdict:
    ev = {"image": _rats(image.coeffs), **cv.evidence}
    return CriterionVerdict(_TO_DISCRETE.get(cv.verdict, cv.verdict), ev)


# -- orchestration ----------------------------------------------------------


def consensus(verdicts: Sequence[Verdict]) -> Verdict:
    """Marginal wins, then any negative verdict, then any positive one."""
    vs = set(verdicts)
    if Verdict.MARGINAL in vs:
        return Verdict.MARGINAL
    for neg in (Verdict.NOT_HURWITZ, Verdict.NOT_SCHUR_STABLE):
        if neg in vs:
            return neg
    for pos in (Verdict.HURWITZ, Verdict.SCHUR_STABLE):
        if pos in vs:
            return pos
    return Verdict.NOT_APPLICABLE


def run(request: AnalysisRequest) -> StabilityReport:
    """Execute every selected criterion.

    In discrete mode the reactance, Routh and positive-real criteria run on
    the bilinear image of the input and are reported in Schur terms; the
    oracle works on the input's own roots. Raises IndeterminateError when
    the root oracle fails to converge.
    """
    p = Polynomial(request.coefficients)
    discrete = request.mode == "discrete"
    image = None
    dropped = False
    if discrete and p.degree >= 1:
        image = bilinear_substitute(p)
        dropped = image.degree < p.degree
        if image.leading < 0:
            image = -image

    out: Dict[str, CriterionVerdict] = {}
    for name in CRITERIA:
        if name not in request.criteria:
            continue
        if name == "oracle":
            out[name] = _oracle(p, discrete)
        elif name == "bilinear":
            out[name] = _bilinear(p) if discrete else _na("discrete mode only")
        elif discrete and image is None:
            out[name] = _na("degree must be at least 1")
        elif discrete and dropped:
            out[name] = CriterionVerdict(
                Verdict.MARGINAL, {"image": _rats(image.coeffs), "reason": "root at z = -1"}
            )
        else:
            target = image if discrete else p
            if name == "reactance":
                cv = _reactance(target)
            elif name == "routh":
                cv = _routh(target)
            else:
                cv = _theorem2(target, request.sample_seed)
            out[name] = _on_image(cv, image) if discrete else cv
    final = consensus([cv.verdict for cv in out.values()])
    return StabilityReport(p, request.mode, request.sample_seed, out, final)


# -- rendering --------------------------------------------------------------


def to_dict(report: StabilityReport) -> dict:
    return {
        "input": {
            "coefficients": _rats(report.input.coeffs),
            "degree": report.input.degree,
            "seed": report.seed,
        },
        "mode": report.mode,
        "verdicts": {
            name: {"verdict": cv.verdict.value, "evidence": cv.evidence}
            for name, cv in report.verdicts.items()
        },
        "final": report.final.value,
        "tool_version": __version__,
    }


def _fmt(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, float):
        return f"{v:.15g}"
    return str(v)


def render(report: StabilityReport, fmt: str = "text", compact: bool = False) -> str:
    if fmt == "json":
        d = to_dict(report)
        if compact:
            return json.dumps(d, separators=(",", ":")) + "\n"
        return json.dumps(d, indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [
        f"hurwitz {__version__} stability report",
        f"{'mode':<12} {report.mode}",
        f"{'input':<12} {_fmt(_rats(report.input.coeffs))}  (ascending, degree {report.input.degree})",
        f"{'seed':<12} {report.seed}",
        "",
        f"{'criterion':<12} {'verdict':<18} evidence",
        f"{'-' * 12} {'-' * 18} {'-' * 40}",
    ]
    for name, cv in report.verdicts.items():
        items = [f"{k}={_fmt(v)}" for k, v in cv.evidence.items()]
        first = items[0] if items else ""
        lines.append(f"{name:<12} {cv.verdict.value:<18} {first}".rstrip())
        for extra in items[1:]:
            lines.append(f"{'':<12} {'':<18} {extra}")
    lines.append(f"{'-' * 12} {'-' * 18} {'-' * 40}")
    lines.append(f"{'final':<12} {report.final.value}")
    return "\n".join(lines) + "\n"
