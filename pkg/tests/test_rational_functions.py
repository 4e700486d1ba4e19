import random
from fractions import Fraction

import pytest

from gen import random_reactance, seeded
from hurwitz.polynomials import ExactComplex, Polynomial as P, even_part, odd_part
from hurwitz.rational_functions import (
    PoleError,
    RationalFunction,
    SampleConfig,
    is_odd,
    is_positive_sampled,
    make,
    reciprocal,
    w_transform,
)

I = ExactComplex(0, 1)


def test_make_keeps_the_pair():
    z = make(P([1, 0, 1]), P([0, 1]))
    assert z.num == P([1, 0, 1]) and z.denom == P([0, 1])
    zero = make(P([]), P([1]))
    assert zero.num.is_zero()
    with pytest.raises(ZeroDivisionError):
        make(P([1]), P([]))


def test_no_gcd_reduction():
    # (s+1)^2 / (s+1) stays as given
    z = make(P([1, 2, 1]), P([1, 1]))
    assert z.num == P([1, 2, 1]) and z.denom == P([1, 1])


def test_eval():
    z = make(P([0, 1]), P([1, 0, 1]))
    assert z(1) == Fraction(1, 2)
    with pytest.raises(PoleError) as err:
        z(I)
    assert err.value.x == I
    assert make(P([1, 0, 1]), P([0, 1]))(I) == 0


def test_degree():
    assert make(P([1, 0, 1]), P([0, 1])).degree == 2
    assert make(P([1]), P([0, 1])).degree == 1
    p = P([1, 3, 2, 1])
    assert make(even_part(p), odd_part(p)).degree == 3
    assert make(even_part(p), odd_part(p)) == make(P([1, 0, 2]), P([0, 3, 0, 1]))


def test_reciprocal():
    z = make(P([1, 0, 1]), P([0, 1]))
    assert reciprocal(z) == make(P([0, 1]), P([1, 0, 1]))
    assert reciprocal(reciprocal(z)) == z
    with pytest.raises(ZeroDivisionError):
        reciprocal(make(P([]), P([1])))


@pytest.mark.parametrize(
    "num, den, expected",
    [
        ([1, 0, 1], [0, 1], True),
        ([0, 1], [1, 0, 1], True),
        ([1, 1], [0, 1], False),
        ([], [0, 1], True),
        ([0, 1], [1, 1], False),
    ],
)
def test_is_odd(num, den, expected):
    assert is_odd(make(P(num), P(den))) is expected


def test_positive_sampled():
    assert not is_positive_sampled(make(P([0, 1]), P([1]))).falsified
    res = is_positive_sampled(make(P([0, -1]), P([1])))
    assert res.falsified and res.witness.real > 0 and res.value.real <= 0
    assert not is_positive_sampled(make(P([1, 0, 1]), P([0, 1]))).falsified


def test_positive_sampled_needs_real():
    with pytest.raises(ValueError):
        is_positive_sampled(make(P([I]), P([1])))


def test_sample_config_points():
    pts = list(SampleConfig(n=50, seed=3).points())
    assert len(pts) == 50
    assert all(1e-3 <= x.real <= 1e3 and 1e-3 <= abs(x.imag) <= 1e3 for x in pts)
    assert pts == list(SampleConfig(n=50, seed=3).points())


def test_w_transform():
    assert w_transform(make(P([0, 1]), P([1]))) == make(P([-1, 1]), P([1, 1]))
    assert w_transform(make(P([1]), P([1]))) == make(P([]), P([2]))
    z = make(P([1, 0, 2]), P([0, 3, 0, 1]))
    assert w_transform(z).denom == P([1, 3, 2, 1])
    with pytest.raises(ZeroDivisionError):
        w_transform(make(P([-1]), P([1])))


def _random_nonpole_points(z, rng, k):
    pts = []
    while len(pts) < k:
        x = ExactComplex(Fraction(rng.randint(-40, 40), 7), Fraction(rng.randint(-40, 40), 5))
        if z.denom(x) != 0 and z.num(x) != 0:
            pts.append(x)
    return pts


def test_odd_symmetry_exact():
    rng = seeded(11)
    for _ in range(20):
        z = random_reactance(rng, 6)
        assert is_odd(z)
        for x in _random_nonpole_points(z, rng, 10):
            assert z(-x) == -z(x)


def test_odd_symmetry_approx():
    rng = seeded(12)
    z = random_reactance(rng, 8).to_approx()
    for _ in range(200):
        x = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        a, b = z(-x), -z(x)
        assert abs(a - b) <= 1e-9 * max(abs(a), 1e-300)


def test_reciprocal_product_is_one():
    rng = seeded(13)
    for _ in range(20):
        z = random_reactance(rng, 6)
        for x in _random_nonpole_points(z, rng, 5):
            assert z.reciprocal()(x) * z(x) == 1


def test_w_bound_for_reactance_functions():
    rng = seeded(14)
    for _ in range(20):
        w = w_transform(random_reactance(rng)).to_approx()
        assert max(abs(w(x)) for x in SampleConfig().points()) <= 1 + 1e-10
