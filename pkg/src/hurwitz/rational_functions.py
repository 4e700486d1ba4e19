"""Rational functions kept as unreduced (numerator, denominator) pairs.

No common factor is ever cancelled: ``make(p, q).num is p`` always holds.
Common roots of numerator and denominator are therefore possible and the
stability checks look for them explicitly.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .polynomials import Polynomial, is_even, is_odd as poly_is_odd, is_real as poly_is_real


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""

    def __init__(self, x):
        super().__init__(f"denominator vanishes at x = {x}")
        self.x = x


@dataclass(frozen=True)
class RationalFunction:
    num: Polynomial
    denom: Polynomial

    def __post_init__(self):
        if not isinstance(self.num, Polynomial) or not isinstance(self.denom, Polynomial):
            raise TypeError("numerator and denominator must be Polynomial instances")
        if self.num.exact != self.denom.exact:
            raise TypeError("numerator and denominator must share a scalar domain")
        if self.denom.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")

    @property
    def exact(self) -> bool:
        return self.num.exact

    @property
    def degree(self) -> int:
        """max(deg num, deg denom), the network-theory degree."""
        return max(self.num.degree, self.denom.degree)

    def __call__(self, x):
        d = self.denom(x)
        if d == 0:
            raise PoleError(x)
        return self.num(x) / d

    def reciprocal(self) -> RationalFunction:
        if self.num.is_zero():
            raise ZeroDivisionError("reciprocal of the zero rational function")
        return RationalFunction(self.denom, self.num)

    def to_approx(self) -> RationalFunction:
        return RationalFunction(self.num.to_approx(), self.denom.to_approx())

    def cross_equal(self, other: RationalFunction) -> bool:
        """num * other.denom == other.num * denom (equality as functions)."""
        return self.num * other.denom == other.num * self.denom

    def __str__(self):
        return f"({list(map(str, self.num.coeffs))}) / ({list(map(str, self.denom.coeffs))})"


def make(num: Polynomial, denom: Polynomial) -> RationalFunction:
    return RationalFunction(num, denom)


def degree(z: RationalFunction) -> int:
    return z.degree


def evaluate(z: RationalFunction, x):
    return z(x)


def reciprocal(z: RationalFunction) -> RationalFunction:
    return z.reciprocal()


def is_real(z: RationalFunction) -> bool:
    return poly_is_real(z.num) and poly_is_real(z.denom)


def is_odd(z: RationalFunction) -> bool:
    """Structural parity test: even/odd or odd/even components.

    A zero numerator is both even and odd, so 0/q is odd whenever q has a
    definite parity.
    """
    n, d = z.num, z.denom
    return (is_even(n) and poly_is_odd(d)) or (poly_is_odd(n) and is_even(d))


def w_transform(z: RationalFunction) -> RationalFunction:
    """(num - denom) / (num + denom), i.e. (Z - 1)/(Z + 1) as a pair."""
    s = z.num + z.denom
    if s.is_zero():
        raise ZeroDivisionError("num + denom is the zero polynomial")
    return RationalFunction(z.num - z.denom, s)


@dataclass(frozen=True)
class SampleConfig:
    """Sampling of the open right half-plane.

    Real parts are log-uniform in ``[re_lo, re_hi]``; imaginary parts have a
    random sign and log-uniform magnitude in ``[im_lo, im_hi]``, so that
    features near the origin and far out are both visited.
    """

    n: int = 512
    re_lo: float = 1e-3
    re_hi: float = 1e3
    im_lo: float = 1e-3
    im_hi: float = 1e3
    seed: int = 0x5EED

    def points(self) -> Iterator[complex]:
        rng = random.Random(self.seed)
        a, b = math.log10(self.re_lo), math.log10(self.re_hi)
        c, d = math.log10(self.im_lo), math.log10(self.im_hi)
        for _ in range(self.n):
            re = 10.0 ** rng.uniform(a, b)
            im = rng.choice((-1.0, 1.0)) * 10.0 ** rng.uniform(c, d)
            yield complex(re, im)


@dataclass(frozen=True)
class PositivityResult:
    falsified: bool
    witness: Optional[complex] = None
    value: Optional[complex] = None
    samples: int = 0
    skipped: int = 0

    @property
    def label(self) -> str:
        return "falsified" if self.falsified else "not_falsified"


def is_positive_sampled(z: RationalFunction, sampler: SampleConfig = SampleConfig()) -> PositivityResult:
    """Look for a point with Re(x) > 0 and Re(Z(x)) <= 0.

    This can only falsify positivity; ``not_falsified`` is not a proof.
    Sample points that hit a pole (or overflow) are skipped.
    """
    if not is_real(z):
        raise ValueError("positivity sampling needs a real rational function")
    za = z.to_approx()
    skipped = 0
    for x in sampler.points():
        try:
            v = za(x)
        except (PoleError, OverflowError):
            skipped += 1
            continue
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            skipped += 1
            continue
        if v.real <= 0:
            return PositivityResult(True, x, v, sampler.n, skipped)
    return PositivityResult(False, None, None, sampler.n, skipped)
