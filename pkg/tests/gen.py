"""Random exact polynomial generators shared by the test modules."""

import random
from fractions import Fraction

from hurwitz.polynomials import Polynomial, has_positive_coefficients
from hurwitz.stability import LCLadder, ladder_to_impedance


def pos_rational(rng, hi_num=20, hi_den=10):
    return Fraction(rng.randint(1, hi_num), rng.randint(1, hi_den))


def stable_factor_product(rng, degree):
    """Product of (s + a) and (s^2 + b s + c) with a, b, c > 0, exact degree."""
    p = Polynomial([1])
    left = degree
    while left:
        if left >= 2 and rng.random() < 0.6:
            p = p * Polynomial([pos_rational(rng), pos_rational(rng), 1])
            left -= 2
        else:
            p = p * Polynomial([pos_rational(rng), 1])
            left -= 1
    return p * pos_rational(rng, 5, 3)


def planted_unstable(rng, degree, tries=20):
    """A polynomial with a root of real part >= 1e-3.

    Several candidates are drawn and one with all-positive coefficients is
    preferred, since those are the cases where the coefficient test alone
    cannot reject.
    """
    last = None
    for _ in range(tries):
        alpha = Fraction(rng.randint(1, 1000), 1000)
        if degree >= 2 and rng.random() < 0.75:
            beta = Fraction(rng.randint(1, 40), 8)
            bad = Polynomial([alpha * alpha + beta * beta, -2 * alpha, 1])
            rest = degree - 2
        else:
            bad = Polynomial([-alpha, 1])
            rest = degree - 1
        last = stable_factor_product(rng, rest) * bad
        if has_positive_coefficients(last):
            return last
    return last


def random_real_poly(rng, max_degree=10, zero_prob=0.2):
    n = rng.randint(0, max_degree)
    cs = [
        Fraction(0) if rng.random() < zero_prob else Fraction(rng.randint(-30, 30), rng.randint(1, 12))
        for _ in range(n)
    ]
    cs.append(Fraction(rng.choice((-1, 1)) * rng.randint(1, 30), rng.randint(1, 12)))
    return Polynomial(cs)


def random_ladder(rng, max_len=10):
    k = rng.randint(1, max_len)
    return LCLadder.from_values([pos_rational(rng, 50, 50) for _ in range(k)])


def random_reactance(rng, max_len=10):
    return ladder_to_impedance(random_ladder(rng, max_len))


def _disk_point(rng, lo, hi):
    """Rational (x, y), y >= 0, with lo <= |x + iy| < hi, by rejection."""
    while True:
        x = Fraction(rng.randint(-2000, 2000), 1000)
        y = Fraction(rng.randint(0, 2000), 1000)
        r2 = x * x + y * y
        if lo * lo <= r2 < hi * hi:
            return x, y


def random_discrete(rng, degree, stable):
    """Real polynomial in z with all roots inside |z| < 0.97 (stable) or at
    least one root with |z| > 1.03."""
    p = Polynomial([1])
    left = degree
    planted = stable
    while left:
        if planted:
            lo, hi = Fraction(0), Fraction(97, 100)
        else:
            lo, hi = Fraction(103, 100), Fraction(2)
            planted = True
        if left >= 2 and rng.random() < 0.6:
            x, y = _disk_point(rng, lo, hi)
            while y == 0:
                x, y = _disk_point(rng, lo, hi)
            p = p * Polynomial([x * x + y * y, -2 * x, 1])
            left -= 2
        else:
            while True:
                x = Fraction(rng.randint(-2000, 2000), 1000)
                if lo <= abs(x) < hi:
                    break
            p = p * Polynomial([-x, 1])
            left -= 1
    return p * Fraction(rng.choice((-1, 1)) * rng.randint(1, 9), rng.randint(1, 9))


def seeded(seed):
    return random.Random(seed)
