import cmath
import math

import numpy as np
import pytest

from gen import random_real_poly, seeded, stable_factor_product
from hurwitz.polynomials import Polynomial as P, from_roots
from hurwitz.root_oracle import (
    IndeterminateError,
    OracleVerdict,
    classify_hurwitz,
    find_roots,
    is_hurwitz_oracle,
    is_schur_oracle,
    max_real_part,
)


def _close_multiset(a, b, tol):
    b = list(b)
    for r in a:
        j = min(range(len(b)), key=lambda k: abs(b[k] - r))
        if abs(b[j] - r) > tol:
            return False
        b.pop(j)
    return not b


def test_find_roots_examples():
    assert _close_multiset(find_roots(P([2, 3, 1])).roots, [-1, -2], 1e-12)
    fifth = [cmath.exp(2j * math.pi * k / 5) for k in (1, 2, 3, 4)]
    assert _close_multiset(find_roots(P([1, 1, 1, 1, 1])).roots, fifth, 1e-12)
    assert find_roots(P([0, 1])).roots == (0j,)


def test_find_roots_zero_polynomial():
    with pytest.raises(ValueError):
        find_roots(P([]))


def test_max_real_part():
    assert max_real_part(P([2, 3, 1])) == pytest.approx(-1, abs=1e-12)
    assert max_real_part(P([1, 1, 1, 1, 1])) == pytest.approx((math.sqrt(5) - 1) / 4, abs=1e-12)
    assert max_real_part(P([1, 0, 1])) == pytest.approx(0, abs=1e-12)


def test_oracle_verdicts():
    assert is_hurwitz_oracle(P([2, 3, 1])) is OracleVerdict.YES
    assert is_hurwitz_oracle(P([1, 0, 1])) is OracleVerdict.MARGINAL
    assert is_hurwitz_oracle(P([1, 1, 1, 1, 1])) is OracleVerdict.NO
    assert is_schur_oracle(P(["-1/2", 1])) is OracleVerdict.YES
    assert is_schur_oracle(P([1, 1])) is OracleVerdict.MARGINAL
    assert is_schur_oracle(P([-2, 1])) is OracleVerdict.NO


def test_non_convergence_is_an_error():
    with pytest.raises(IndeterminateError):
        classify_hurwitz(find_roots(P([1, 2, 3, 4, 5]), max_sweeps=1))


def test_repeated_roots_converge():
    rs = find_roots(from_roots([-1, -1, -2, -2, -2]))
    assert rs.converged
    assert max(r.real for r in rs.roots) < -0.99


def _polys(seed, count):
    rng = seeded(seed)
    out = []
    while len(out) < count:
        p = random_real_poly(rng, 12, zero_prob=0.1)
        if p.degree >= 1:
            out.append(p)
    return out


def test_reconstruction():
    for p in _polys(21, 150):
        rs = find_roots(p)
        assert rs.converged
        back = from_roots(rs.roots, complex(p.leading), exact=False)
        scale = max(abs(complex(c)) for c in p.coeffs)
        for i in range(p.degree + 1):
            assert abs(back[i] - complex(p[i])) <= 1e-8 * scale


def test_residual_bound():
    for p in _polys(22, 150):
        rs = find_roots(p)
        cmax = max(abs(complex(c)) for c in p.coeffs)
        pa = p.to_approx()
        for r in rs.roots:
            assert abs(pa(r)) <= 1e-9 * (1 + abs(r)) ** p.degree * cmax


def test_conjugate_symmetry():
    for p in _polys(23, 150):
        roots = find_roots(p).roots
        conj = [r.conjugate() for r in roots]
        assert _close_multiset(roots, conj, 1e-8 * (1 + max(abs(r) for r in roots)))


def test_agrees_with_numpy_roots():
    # independent cross-check against companion-matrix eigenvalues
    rng = seeded(24)
    for _ in range(100):
        p = stable_factor_product(rng, rng.randint(1, 12))
        ours = find_roots(p).roots
        ref = np.roots([float(c) for c in reversed(p.coeffs)])
        assert max(r.real for r in ours) == pytest.approx(max(ref.real), abs=1e-6)
