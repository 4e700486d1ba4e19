"""Exact stability criteria for real polynomials.

The main test is the reactance criterion. Split ``p`` into its even and
odd parts, form ``Z = even/odd`` (or the reciprocal), and expand ``Z`` as a
continued fraction at infinity. If the expansion runs the full degree with
every coefficient positive, ``Z`` is realizable as an LC ladder and ``p`` is
Hurwitz. The Routh table, a positive-real boundary check and a bilinear map
for discrete-time polynomials sit alongside it.

Every verdict here comes from exact rational arithmetic. Floating point is
used only in the positivity sampling and the boundary grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from .polynomials import (
    Polynomial,
    even_part,
    has_positive_coefficients,
    have_common_roots,
    is_real,
    odd_part,
)
from .rational_functions import (
    PositivityResult,
    RationalFunction,
    SampleConfig,
    is_odd,
    is_positive_sampled,
)
from .rational_functions import is_real as rf_is_real
from .root_oracle import find_roots


class Verdict(str, Enum):
    HURWITZ = "hurwitz"
    NOT_HURWITZ = "not_hurwitz"
    MARGINAL = "marginal"
    NOT_APPLICABLE = "not_applicable"
    SCHUR_STABLE = "schur_stable"
    NOT_SCHUR_STABLE = "not_schur_stable"


class NotApplicable(ValueError):
    """The criterion's preconditions do not hold for this input."""


class OrientationError(ValueError):
    """Numerator degree is not denominator degree + 1; try the reciprocal."""


class SynthesisError(ValueError):
    pass


# --------------------------------------------------------------------------
# Continued-fraction (Cauer) expansion


@dataclass(frozen=True)
class CauerExpansion:
    coefficients: Tuple[Fraction, ...]
    complete: bool
    degenerate_step: Optional[int] = None

    @property
    def status(self) -> str:
        return "complete" if self.complete else "degenerate"

    @property
    def all_positive(self) -> bool:
        return all(c > 0 for c in self.coefficients)


def cauer_expansion(z: RationalFunction) -> CauerExpansion:
    """Expand ``Z = c1*s + 1/(c2*s + 1/(...))`` about infinity.

    Each step divides numerator by denominator. The quotient must be exactly
    ``c*s`` and the remainder's degree must drop by one, otherwise the
    expansion is degenerate at that (1-based) step.
    """
    if not z.exact:
        raise TypeError("cauer_expansion works in exact mode only")
    num, den = z.num, z.denom
    if num.degree != den.degree + 1:
        raise OrientationError(
            f"numerator degree {num.degree} must be denominator degree {den.degree} + 1; "
            "expand the reciprocal instead"
        )
    total = num.degree
    coeffs: List[Fraction] = []
    step = 0
    while True:
        step += 1
        q, r = divmod(num, den)
        if q.degree != 1 or q[0] != 0:
            return CauerExpansion(tuple(coeffs), False, step)
        coeffs.append(q[1])
        if r.is_zero():
            if len(coeffs) == total:
                return CauerExpansion(tuple(coeffs), True)
            return CauerExpansion(tuple(coeffs), False, step)
        if r.degree != den.degree - 1:
            return CauerExpansion(tuple(coeffs), False, step + 1)
        num, den = den, r


def orient(z: RationalFunction) -> Tuple[RationalFunction, bool]:
    """Return (Z or 1/Z, flipped) so that deg num = deg denom + 1."""
    if z.num.degree == z.denom.degree + 1:
        return z, False
    if not z.num.is_zero() and z.denom.degree == z.num.degree + 1:
        return z.reciprocal(), True
    raise OrientationError(
        f"degree gap between numerator ({z.num.degree}) and denominator "
        f"({z.denom.degree}) is not one"
    )


def is_reactance(z: RationalFunction, n: int) -> bool:
    """Exact reactance test: a complete, all-positive expansion of length ``n``."""
    if not z.exact or not rf_is_real(z):
        raise NotApplicable("reactance test needs an exact real rational function")
    if not is_odd(z):
        raise NotApplicable("reactance functions are odd; this one is not")
    try:
        oriented, _ = orient(z)
    except OrientationError:
        return False
    ce = cauer_expansion(oriented)
    return ce.complete and ce.all_positive and len(ce.coefficients) == n


# --------------------------------------------------------------------------
# Hurwitz test via the reactance criterion


@dataclass(frozen=True)
class ReactanceResult:
    verdict: Verdict
    reason: Optional[str] = None
    expansion: Optional[CauerExpansion] = None
    reciprocal: bool = False
    negated: bool = False


def _normalize_sign(p: Polynomial) -> Tuple[Polynomial, bool]:
    if p.leading.real < 0:
        return -p, True
    return p, False


def hurwitz_by_reactance(p: Polynomial) -> ReactanceResult:
    """Decide whether ``p`` is Hurwitz from the expansion of even/odd.

    A polynomial with negative leading coefficient is negated first.
    """
    if not p.exact or not is_real(p):
        return ReactanceResult(Verdict.NOT_APPLICABLE, "input must be exact and real")
    if p.degree < 1:
        return ReactanceResult(Verdict.NOT_APPLICABLE, "degree must be at least 1")
    p, negated = _normalize_sign(p)
    if not has_positive_coefficients(p):
        return ReactanceResult(Verdict.NOT_HURWITZ, "nonpositive_coefficient", negated=negated)
    z = RationalFunction(even_part(p), odd_part(p))
    try:
        oriented, flipped = orient(z)
    except OrientationError:
        return ReactanceResult(Verdict.NOT_HURWITZ, "degree_mismatch", negated=negated)
    ce = cauer_expansion(oriented)
    if not ce.complete:
        return ReactanceResult(Verdict.NOT_HURWITZ, "degenerate_expansion", ce, flipped, negated)
    if not ce.all_positive:
        return ReactanceResult(Verdict.NOT_HURWITZ, "nonpositive_cauer_coefficient", ce, flipped, negated)
    if len(ce.coefficients) != p.degree:
        return ReactanceResult(Verdict.NOT_HURWITZ, "degree_mismatch", ce, flipped, negated)
    return ReactanceResult(Verdict.HURWITZ, None, ce, flipped, negated)


# --------------------------------------------------------------------------
# Routh table


@dataclass(frozen=True)
class RouthResult:
    first_column: Tuple[Fraction, ...]
    classification: str  # "hurwitz" | "not_hurwitz" | "singular"
    singular_row: Optional[int] = None  # power of s labelling the failing row

    @property
    def verdict(self) -> Verdict:
        return Verdict.HURWITZ if self.classification == "hurwitz" else Verdict.NOT_HURWITZ


def routh_array(p: Polynomial) -> RouthResult:
    """First column of the Routh table.

    A zero leading entry or an all-zero row stops the table and is reported
    as singular; no epsilon substitution is attempted.
    """
    if not p.exact or not is_real(p):
        raise NotApplicable("Routh table needs an exact real polynomial")
    n = p.degree
    if n < 1:
        raise NotApplicable("Routh table needs degree >= 1")
    desc = [Fraction(c.real) for c in reversed(p.coeffs)]
    width = n // 2 + 1
    prev = desc[0::2] + [Fraction(0)] * (width - len(desc[0::2]))
    cur = desc[1::2] + [Fraction(0)] * (width - len(desc[1::2]))
    column = [prev[0]]
    rows_left = n  # rows s^(n-1) .. s^0
    power = n - 1
    while True:
        if all(c == 0 for c in cur):
            return RouthResult(tuple(column), "singular", power)
        column.append(cur[0])
        if cur[0] == 0:
            return RouthResult(tuple(column), "singular", power)
        rows_left -= 1
        if rows_left == 0:
            break
        nxt = [
            (cur[0] * prev[j + 1] - prev[0] * cur[j + 1]) / cur[0]
            for j in range(width - 1)
        ] + [Fraction(0)]
        prev, cur = cur, nxt
        power -= 1
    sign = 1 if column[0] > 0 else -1
    ok = all(c * sign > 0 for c in column)
    return RouthResult(tuple(column), "hurwitz" if ok else "not_hurwitz")


# --------------------------------------------------------------------------
# Positive-real boundary check


@dataclass(frozen=True)
class BoundaryGrid:
    """Points j*w with w log-spaced in [lo, hi], plus w = 0."""

    n: int = 1024
    lo: float = 1e-3
    hi: float = 1e3
    include_zero: bool = True
    tol: float = 1e-9

    def omegas(self) -> List[float]:
        a, b = math.log10(self.lo), math.log10(self.hi)
        ws = [10.0 ** (a + (b - a) * i / (self.n - 1)) for i in range(self.n)]
        return ([0.0] if self.include_zero else []) + ws


@dataclass(frozen=True)
class Theorem2Result:
    boundary_ok: bool
    hurwitz_claim: RouthResult
    positive: PositivityResult
    no_common_roots: bool
    worst_boundary_re: float = 0.0
    boundary_points: int = 0
    min_root_separation: Optional[float] = None

    @property
    def premises_hold(self) -> bool:
        return self.no_common_roots and not self.positive.falsified

    @property
    def verdict(self) -> Verdict:
        if self.premises_hold and self.boundary_ok and self.hurwitz_claim.verdict is Verdict.HURWITZ:
            return Verdict.HURWITZ
        return Verdict.NOT_HURWITZ


def theorem2_check(
    p: Polynomial,
    grid: BoundaryGrid = BoundaryGrid(),
    sampler: SampleConfig = SampleConfig(),
) -> Theorem2Result:
    """Premises and conclusions of the positive-real criterion for ``even/odd``.

    Premises: the even and odd parts share no root, and ``Z = even/odd`` is
    not falsified as positive by sampling. Shared roots are decided exactly
    with a Euclidean gcd; interlacing roots of the two parts can sit closer
    than any fixed clustering tolerance. The smallest relative distance
    between the numeric root lists is kept as ``min_root_separation``. Conclusions: ``Re Z(jw) >= -tol`` on the grid,
    skipping roots of the odd part, and the Routh verdict for even + odd.
    """
    if not p.exact or not is_real(p) or p.degree < 1:
        raise NotApplicable("theorem2_check needs an exact real polynomial of degree >= 1")
    if not has_positive_coefficients(p):
        raise NotApplicable("theorem2_check needs all coefficients positive")
    fe, fo = even_part(p), odd_part(p)
    no_common = not have_common_roots(fe, fo)
    re_roots = find_roots(fe).roots if fe.degree >= 1 else ()
    ro_roots = find_roots(fo).roots if fo.degree >= 1 else ()
    separation = min(
        (abs(a - b) / max(1.0, abs(a)) for a in re_roots for b in ro_roots),
        default=None,
    )

    z = RationalFunction(fe, fo)
    positive = is_positive_sampled(z, sampler)

    fe_a, fo_a = fe.to_approx(), fo.to_approx()
    scale = max(abs(complex(c)) for c in fo.coeffs)
    worst = math.inf
    used = 0
    for w in grid.omegas():
        x = complex(0.0, w)
        o = fo_a(x)
        # skip (numerical) roots of the odd part
        if abs(o) <= 1e-12 * scale * max(1.0, w) ** fo.degree:
            continue
        v = fe_a(x) / o
        used += 1
        worst = min(worst, v.real)
    boundary_ok = used == 0 or worst >= -grid.tol
    claim = routh_array(fe + fo)
    return Theorem2Result(
        boundary_ok, claim, positive, no_common, worst if used else 0.0, used, separation
    )


# --------------------------------------------------------------------------
# Discrete time: bilinear map z = (1+s)/(1-s)


def bilinear_substitute(d: Polynomial) -> Polynomial:
    """(1 - s)^m * d((1 + s)/(1 - s)) for m = degree(d), expanded."""
    if not d.exact:
        raise TypeError("bilinear_substitute works in exact mode only")
    m = d.degree
    if m < 1:
        raise NotApplicable("bilinear_substitute needs degree >= 1")
    plus = Polynomial([1, 1])
    minus = Polynomial([1, -1])
    pp = [Polynomial([1])]
    mp = [Polynomial([1])]
    for _ in range(m):
        pp.append(pp[-1] * plus)
        mp.append(mp[-1] * minus)
    out = Polynomial([])
    for k, c in enumerate(d.coeffs):
        if c != 0:
            out = out + (pp[k] * mp[m - k]) * c
    return out


@dataclass(frozen=True)
class SchurResult:
    verdict: Verdict
    image: Polynomial
    reason: Optional[str] = None
    routh: Optional[RouthResult] = None


def schur_stable_via_bilinear(d: Polynomial) -> SchurResult:
    """Schur test by mapping the unit disk onto the left half-plane.

    A degree drop in the image means ``d(-1) = 0``, which is reported as
    marginal. A singular Routh table for the image rules out stability and
    is reported as not stable.
    """
    if not d.exact or not is_real(d):
        return SchurResult(Verdict.NOT_APPLICABLE, Polynomial([]), "input must be exact and real")
    if d.degree < 1:
        return SchurResult(Verdict.NOT_APPLICABLE, Polynomial([]), "degree must be at least 1")
    q = bilinear_substitute(d)
    if q.degree < d.degree:
        return SchurResult(Verdict.MARGINAL, q, "root at z = -1")
    q, _ = _normalize_sign(q)
    rr = routh_array(q)
    if rr.classification == "hurwitz":
        return SchurResult(Verdict.SCHUR_STABLE, q, None, rr)
    reason = "routh_singular" if rr.classification == "singular" else "routh_sign_change"
    return SchurResult(Verdict.NOT_SCHUR_STABLE, q, reason, rr)


# --------------------------------------------------------------------------
# LC ladder synthesis


class ElementKind(str, Enum):
    SERIES_L = "series_L"
    SHUNT_C = "shunt_C"


@dataclass(frozen=True)
class LadderElement:
    kind: ElementKind
    value: Fraction


@dataclass(frozen=True)
class LCLadder:
    """Cauer ladder: series inductors alternating with shunt capacitors.

    ``admittance`` is True when the synthesized function had to be
    reciprocated, i.e. the ladder's input impedance realizes 1/Z.
    """

    elements: Tuple[LadderElement, ...]
    admittance: bool = False

    def __post_init__(self):
        if not self.elements:
            raise ValueError("empty ladder")
        for i, e in enumerate(self.elements):
            want = ElementKind.SERIES_L if i % 2 == 0 else ElementKind.SHUNT_C
            if e.kind is not want:
                raise ValueError(f"element {i} should be {want.value}")
            if not e.value > 0:
                raise ValueError(f"element {i} has nonpositive value {e.value}")

    @property
    def values(self) -> Tuple[Fraction, ...]:
        return tuple(e.value for e in self.elements)

    @classmethod
    def from_values(cls, values, admittance: bool = False) -> LCLadder:
        kinds = (ElementKind.SERIES_L, ElementKind.SHUNT_C)
        return cls(
            tuple(LadderElement(kinds[i % 2], Fraction(v)) for i, v in enumerate(values)),
            admittance,
        )


def synthesize_lc_ladder(z: RationalFunction) -> LCLadder:
    try:
        ok = is_reactance(z, z.degree)
    except NotApplicable as exc:
        raise SynthesisError(str(exc)) from exc
    if not ok:
        raise SynthesisError("not a reactance function; no LC ladder exists")
    oriented, flipped = orient(z)
    ce = cauer_expansion(oriented)
    return LCLadder.from_values(ce.coefficients, admittance=flipped)


def ladder_to_impedance(ladder: LCLadder) -> RationalFunction:
    """Input impedance of the ladder, folded from the far end.

    The innermost element contributes ``c*s``; each outer element adds
    ``c*s + 1/Z_inner``.
    """
    values = ladder.values
    num = Polynomial([0, values[-1]])
    den = Polynomial([1])
    for c in reversed(values[:-1]):
        num, den = Polynomial([0, c]) * num + den, num
    return RationalFunction(num, den)


def realized_function(ladder: LCLadder) -> RationalFunction:
    """The function the ladder was synthesized from (impedance or admittance)."""
    z = ladder_to_impedance(ladder)
    return z.reciprocal() if ladder.admittance else z
