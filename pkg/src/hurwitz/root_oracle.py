"""Numeric root finding used to cross-check the symbolic stability tests.

Roots are found with the Aberth-Ehrlich simultaneous iteration in plain
double-precision complex arithmetic. This is a verification aid for
desk-scale degrees, not a production root finder.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .polynomials import Polynomial

MAX_DEGREE = 64
MAX_SWEEPS = 1000
STEP_TOL = 1e-12
RESIDUAL_TOL = 1e-9
MARGINAL_BAND = 1e-8
EPS = 2.220446049250313e-16


class IndeterminateError(RuntimeError):
    """The iteration did not converge, so no verdict can be given."""


class OracleVerdict(str, Enum):
    YES = "yes"
    NO = "no"
    MARGINAL = "marginal"


@dataclass(frozen=True)
class RootSet:
    roots: tuple
    residual: float
    converged: bool
    sweeps: int = 0

    def __len__(self):
        return len(self.roots)


def _horner_with_derivative(cs, z):
    # cs ascending
    p = cs[-1]
    dp = 0j
    for c in reversed(cs[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _at_noise_floor(cs, z):
    # |p(z)| no larger than the Horner rounding bound: further steps only chase noise
    n = len(cs) - 1
    p = 0j
    bound = 0.0
    az = abs(z)
    for c in reversed(cs):
        p = p * z + c
        bound = bound * az + abs(c)
    return abs(p) <= 4 * n * EPS * bound


def _residual(cs, roots):
    n = len(cs) - 1
    cmax = max(abs(c) for c in cs)
    worst = 0.0
    for r in roots:
        p = 0j
        for c in reversed(cs):
            p = p * r + c
        scale = cmax * (1.0 + abs(r)) ** n
        worst = max(worst, abs(p) / scale)
    return worst


def find_roots(p: Polynomial, max_sweeps: int = MAX_SWEEPS, step_tol: float = STEP_TOL) -> RootSet:
    """All complex roots of ``p``, with multiplicity.

    Initial guesses sit on a ring of radius ``1 + max|c_i/c_n|`` (a Cauchy
    bound), rotated off the real axis so conjugate pairs are not started on
    a symmetry line. Iteration stops once the largest Aberth correction is
    below ``step_tol * (1 + max|root|)``, or once every iterate has a
    residual within the Horner rounding bound (multiple roots never reach the
    step criterion because their corrections stall at rounding noise).
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no root set")
    n = p.degree
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds the oracle cap of {MAX_DEGREE}")
    cs = [complex(c) for c in p.coeffs]
    if n == 0:
        return RootSet((), 0.0, True, 0)
    lead = cs[-1]
    mon = [c / lead for c in cs]

    # zero roots are split off exactly
    k = 0
    while mon[k] == 0:
        k += 1
    zeros = [0j] * k
    work = mon[k:]
    m = len(work) - 1
    if m == 0:
        return RootSet(tuple(zeros), _residual(cs, zeros), True, 0)
    if m == 1:
        roots = zeros + [-work[0]]
        return RootSet(tuple(roots), _residual(cs, roots), True, 0)

    radius = 1.0 + max(abs(c) for c in work[:-1])
    z = [radius * cmath.exp(1j * (2 * math.pi * i / m + 0.4)) for i in range(m)]

    converged = False
    sweeps = 0
    for sweeps in range(1, max_sweeps + 1):
        biggest = 0.0
        for i in range(m):
            zi = z[i]
            pv, dv = _horner_with_derivative(work, zi)
            if pv == 0:
                continue
            ratio = pv / dv if dv != 0 else complex(radius, 0)
            s = 0j
            for j in range(m):
                if j != i:
                    diff = zi - z[j]
                    if diff != 0:
                        s += 1 / diff
            denom = 1 - ratio * s
            step = ratio / denom if denom != 0 else ratio
            z[i] = zi - step
            biggest = max(biggest, abs(step))
        scale = 1.0 + max(abs(r) for r in z)
        if biggest < step_tol * scale or all(_at_noise_floor(work, r) for r in z):
            converged = True
            break
    roots = zeros + z
    residual = _residual(cs, roots)
    if residual > RESIDUAL_TOL:
        converged = False
    return RootSet(tuple(roots), residual, converged, sweeps)


def _require(rs: RootSet) -> RootSet:
    if not rs.converged:
        raise IndeterminateError(
            f"root iteration did not converge (residual {rs.residual:.3e} after {rs.sweeps} sweeps)"
        )
    return rs


def max_real_part(p: Polynomial) -> float:
    """Abscissa of the region of convergence: the largest root real part."""
    if p.degree < 1:
        raise ValueError("max_real_part needs degree >= 1")
    rs = _require(find_roots(p))
    return max(r.real for r in rs.roots)


def max_modulus(p: Polynomial) -> float:
    if p.degree < 1:
        raise ValueError("max_modulus needs degree >= 1")
    rs = _require(find_roots(p))
    return max(abs(r) for r in rs.roots)


def classify_hurwitz(rs: RootSet, band: float = MARGINAL_BAND) -> OracleVerdict:
    _require(rs)
    m = max(r.real for r in rs.roots)
    if m < -band:
        return OracleVerdict.YES
    if m <= band:
        return OracleVerdict.MARGINAL
    return OracleVerdict.NO


def classify_schur(rs: RootSet, band: float = MARGINAL_BAND) -> OracleVerdict:
    _require(rs)
    m = max(abs(r) for r in rs.roots)
    if m < 1 - band:
        return OracleVerdict.YES
    if m <= 1 + band:
        return OracleVerdict.MARGINAL
    return OracleVerdict.NO


def is_hurwitz_oracle(p: Polynomial, band: float = MARGINAL_BAND) -> OracleVerdict:
    if p.degree < 1:
        raise ValueError("is_hurwitz_oracle needs degree >= 1")
    return classify_hurwitz(find_roots(p), band)


def is_schur_oracle(d: Polynomial, band: float = MARGINAL_BAND) -> OracleVerdict:
    if d.degree < 1:
        raise ValueError("is_schur_oracle needs degree >= 1")
    return classify_schur(find_roots(d), band)

