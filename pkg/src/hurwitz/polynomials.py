"""Dense univariate polynomials over exact rationals or double-precision complex.

Coefficients are stored ascending: ``coeffs[i]`` multiplies ``x**i``. The
zero polynomial is the empty tuple and has degree -1.

Two scalar domains are supported:

* exact -- coefficients are :class:`fractions.Fraction`, or
  :class:`ExactComplex` when an imaginary part is present.
* approx -- coefficients are Python ``complex``.

Operations never mix domains; convert explicitly with :meth:`Polynomial.to_approx`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

ZERO_TOL = 1e-10


class ExactComplex:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def real(self) -> Fraction:
        return self._re

    @property
    def imag(self) -> Fraction:
        return self._im

    def conjugate(self) -> ExactComplex:
        return ExactComplex(self._re, -self._im)

    def abs2(self) -> Fraction:
        return self._re * self._re + self._im * self._im

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def __repr__(self):
        return f"ExactComplex({self._re}, {self._im})"

    def __eq__(self, other):
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        return self._re == other.real and self._im == other.imag

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __neg__(self):
        return ExactComplex(-self._re, -self._im)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        return _simplify(ExactComplex(self._re + other.real, self._im + other.imag))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        return _simplify(ExactComplex(self._re - other.real, self._im - other.imag))

    def __rsub__(self, other):
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        return _simplify(ExactComplex(other.real - self._re, other.imag - self._im))

    def __mul__(self, other):
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self._re, self._im, other.real, other.imag
        return _simplify(ExactComplex(a * c - b * d, a * d + b * c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        den = other.real * other.real + other.imag * other.imag
        if den == 0:
            raise ZeroDivisionError("ExactComplex division by zero")
        a, b, c, d = self._re, self._im, other.real, other.imag
        return _simplify(ExactComplex((a * c + b * d) / den, (b * c - a * d) / den))

    def __rtruediv__(self, other):
        other = _coerce_exact(other)
        if other is NotImplemented:
            return NotImplemented
        return ExactComplex(other.real, other.imag) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return 1 / (self ** -n)
        result, base = ExactComplex(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


def _coerce_exact(x):
    if isinstance(x, ExactComplex):
        return x
    if isinstance(x, (int, Rational)):
        return ExactComplex(x)
    if isinstance(x, (float, complex)):
        return ExactComplex(Fraction(x.real), Fraction(x.imag))
    return NotImplemented


def _simplify(z: ExactComplex):
    return z.real if z.imag == 0 else z


Scalar = Union[Fraction, ExactComplex, complex]


def to_exact(x) -> Union[Fraction, ExactComplex]:
    """Convert ``x`` to an exact scalar.

    Strings go through :class:`Fraction` so ``"0.1"`` becomes ``1/10``; floats
    and complex numbers are converted by their binary value.
    """
    if isinstance(x, ExactComplex):
        return _simplify(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational, str)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, complex):
        return _simplify(ExactComplex(Fraction(x.real), Fraction(x.imag)))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact scalar")


class Polynomial:
    """Immutable polynomial with ascending coefficients.

    >>> p = Polynomial([1, 3, 2, 1])
    >>> p.degree
    3
    >>> p(2)
    Fraction(23, 1)
    """

    __slots__ = ("_coeffs", "_exact")

    def __init__(self, coeffs: Iterable = (), exact: bool = True):
        if exact:
            cs = [to_exact(c) for c in coeffs]
        else:
            cs = [complex(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)
        self._exact = exact

    @classmethod
    def _raw(cls, coeffs: list, exact: bool) -> Polynomial:
        # coefficients already in the right domain
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj._coeffs = tuple(coeffs)
        obj._exact = exact
        return obj

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def exact(self) -> bool:
        return self._exact

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading(self):
        if not self._coeffs:
            return 0
        return self._coeffs[-1]

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def __getitem__(self, i: int):
        # p[i] is the coefficient of x**i, zero past the degree
        if i < 0:
            raise IndexError("negative coefficient index")
        if i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0) if self._exact else 0j

    def __iter__(self):
        return iter(self._coeffs)

    def __repr__(self):
        tag = "" if self._exact else ", exact=False"
        return f"Polynomial([{', '.join(str(c) for c in self._coeffs)}]{tag})"

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._exact == other._exact and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._exact, self._coeffs))

    def _check_domain(self, other: Polynomial):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if self._exact != other._exact:
            raise TypeError("cannot combine exact and approx polynomials")

    def __call__(self, x):
        """Horner evaluation; the zero polynomial evaluates to 0."""
        if self._exact:
            x = to_exact(x)
            acc = Fraction(0)
        else:
            x = complex(x)
            acc = 0j
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return Polynomial._raw([-c for c in self._coeffs], self._exact)

    def __add__(self, other: Polynomial):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_domain(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial._raw(out, self._exact)

    def __sub__(self, other: Polynomial):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check_domain(other)
            a, b = self._coeffs, other._coeffs
            if not a or not b:
                return Polynomial._raw([], self._exact)
            zero = Fraction(0) if self._exact else 0j
            out = [zero] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if ca == 0:
                    continue
                for j, cb in enumerate(b):
                    out[i + j] = out[i + j] + ca * cb
            return Polynomial._raw(out, self._exact)
        # scalar multiple
        c = to_exact(other) if self._exact else complex(other)
        return Polynomial._raw([c * a for a in self._coeffs], self._exact)

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial):
        return poly_divmod(self, other)

    def scale_x(self, factor) -> Polynomial:
        """Return ``p(factor * x)``."""
        c = to_exact(factor) if self._exact else complex(factor)
        out, power = [], (Fraction(1) if self._exact else 1 + 0j)
        for a in self._coeffs:
            out.append(a * power)
            power = power * c
        return Polynomial._raw(out, self._exact)

    def to_approx(self) -> Polynomial:
        return Polynomial._raw([complex(c) for c in self._coeffs], False)

    @property
    def is_real(self) -> bool:
        return is_real(self)


def degree(p: Polynomial) -> int:
    return p.degree


def poly_divmod(p: Polynomial, q: Polynomial, zero_tol: float = ZERO_TOL):
    """Long division ``p = q*quot + rem`` with ``degree(rem) < degree(q)``.

    In approx mode, remainder coefficients with modulus at most ``zero_tol``
    are treated as zero when trimming.
    """
    p._check_domain(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    exact = p.exact
    zero = Fraction(0) if exact else 0j
    rem = list(p.coeffs)
    dq = q.degree
    lead = q.leading
    if len(rem) - 1 < dq:
        return Polynomial._raw([], exact), p
    quot = [zero] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq] / lead
        quot[k] = c
        if c != 0:
            for j, b in enumerate(q.coeffs):
                rem[k + j] = rem[k + j] - c * b
        rem[k + dq] = zero
    rem = rem[:dq]
    if not exact:
        while rem and abs(rem[-1]) <= zero_tol:
            rem.pop()
    return Polynomial._raw(quot, exact), Polynomial._raw(rem, exact)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor by the Euclidean algorithm (exact mode).

    Used to decide whether two polynomials share a root; rational functions
    are never reduced with it.
    """
    p._check_domain(q)
    if not p.exact:
        raise TypeError("poly_gcd needs exact polynomials")
    a, b = p, q
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero():
        return a
    return a * (1 / a.leading)


def have_common_roots(p: Polynomial, q: Polynomial) -> bool:
    """Exact test: True iff gcd(p, q) is non-constant (or both are zero)."""
    g = poly_gcd(p, q)
    return g.is_zero() or g.degree >= 1


def even_part(p: Polynomial) -> Polynomial:
    """Keep the even-index coefficients, zero the odd ones."""
    zero = Fraction(0) if p.exact else 0j
    return Polynomial._raw(
        [c if i % 2 == 0 else zero for i, c in enumerate(p.coeffs)], p.exact
    )


def odd_part(p: Polynomial) -> Polynomial:
    zero = Fraction(0) if p.exact else 0j
    return Polynomial._raw(
        [c if i % 2 == 1 else zero for i, c in enumerate(p.coeffs)], p.exact
    )


def is_even(p: Polynomial) -> bool:
    return all(c == 0 for c in p.coeffs[1::2])


def is_odd(p: Polynomial) -> bool:
    return all(c == 0 for c in p.coeffs[0::2])


def is_real(p: Polynomial, zero_tol: float = ZERO_TOL) -> bool:
    if p.exact:
        return all(c.imag == 0 for c in p.coeffs)
    return all(abs(c.imag) <= zero_tol for c in p.coeffs)


def has_positive_coefficients(p: Polynomial, zero_tol: float = ZERO_TOL) -> bool:
    """True iff ``p`` is real, nonzero and every coefficient up to the degree is > 0.

    Interior zeros fail the test, so ``1 + x**2`` is rejected.
    """
    if p.is_zero() or not is_real(p, zero_tol):
        return False
    return all(c.real > 0 for c in p.coeffs)


def from_roots(roots: Sequence, leading=1, exact: bool = True) -> Polynomial:
    """Build ``leading * prod(x - r)`` from a root list."""
    p = Polynomial([leading], exact=exact)
    for r in roots:
        p = p * Polynomial([-r if exact else -complex(r), 1], exact=exact)
    return p


def x_power(n: int, exact: bool = True) -> Polynomial:
    return Polynomial([0] * n + [1], exact=exact)
