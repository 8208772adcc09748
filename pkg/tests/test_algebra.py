import math
import random
from fractions import Fraction as F

import pytest

from core.algebra import (
    RationalPolynomial,
    evaluate,
    exact_sqrt,
    fmt,
    real_roots,
    same_multiset,
    snap_rational,
    to_rational,
)
from core.errors import UnsupportedDegree

P = RationalPolynomial


def test_to_rational_accepts_common_spellings():
    assert to_rational("7/2") == F(7, 2)
    assert to_rational(" -3 ") == F(-3)
    assert to_rational("0.25") == F(1, 4)
    assert to_rational(5) == F(5)


def test_to_rational_rejects_bad_input():
    with pytest.raises(ValueError):
        to_rational("1/0")
    with pytest.raises(ValueError):
        to_rational("seven")
    with pytest.raises(TypeError):
        to_rational(True)


def test_fmt():
    assert fmt(F(7, 2)) == "7/2"
    assert fmt(F(-4)) == "-4"
    assert fmt(0.5) == "0.5"


def test_polynomial_normalises_trailing_zeros():
    p = P.of(1, 2, 0, 0)
    assert p.degree == 1
    assert P.of(0, 0).is_zero()


def test_polynomial_arithmetic():
    lam = P.of(0, 1)
    assert (lam + 1) ** 2 == P.of(1, 2, 1)
    assert P.from_roots([1, 2]) == P.of(2, -3, 1)
    assert (lam * lam - 1) - (lam - 1) * (lam + 1) == P.of(0)
    assert P.of(1, 2, 3).derivative() == P.of(2, 6)
    assert P.of(1, 1) * F(1, 2) == P.of(F(1, 2), F(1, 2))


def test_polynomial_evaluation_is_exact():
    p = P.from_roots([F(1, 3), -2])
    assert p(F(1, 3)) == 0
    assert p(0) == F(-2, 3)
    assert evaluate(p, F(-2)) == 0
    assert isinstance(evaluate(p, 0.5), float)
    assert p(0.5) == pytest.approx((0.5 - 1 / 3) * 2.5)


def test_polynomial_str():
    assert str(P.of(-2, 0, 1)) == "λ² - 2"
    assert str(P.of(0, -1)) == "-λ"
    assert str(P.of(F(1, 2), 3)) == "3λ + 1/2"


def test_real_roots_exact_quartic():
    T = P.from_roots([4, 3, -1, -2], leading=-1)
    roots = real_roots(T)
    assert not roots.approximate
    assert roots.values() == [-2, -1, 3, 4]
    assert roots.count == 4


def test_real_roots_with_multiplicity():
    roots = real_roots(P.from_roots([2, 2, -1]))
    assert roots.values() == [-1, 2, 2]
    assert roots.distinct() == [-1, 2]


def test_real_roots_irrational_are_residual():
    roots = real_roots(P.of(-2, 0, 1))
    assert roots.approximate
    assert roots.values() == pytest.approx([-math.sqrt(2), math.sqrt(2)])
    assert all(r.error < 1e-12 for r in roots.residual_roots)


def test_real_roots_skips_complex_pairs():
    roots = real_roots(P.of(1, 0, 1) * P.of(-3, 1))
    assert roots.values() == [3]


@pytest.mark.parametrize("p", [P.of(5), P.from_roots([1, 2, 3, 4, 5])])
def test_real_roots_degree_limits(p):
    with pytest.raises(UnsupportedDegree):
        real_roots(p)


def test_snap_rational():
    assert snap_rational(2.9999999999) == 3
    assert snap_rational(0.5000000000001) == F(1, 2)
    assert isinstance(snap_rational(math.sqrt(2)), float)


def test_exact_sqrt():
    assert exact_sqrt(F(9, 4)) == F(3, 2)
    assert exact_sqrt(F(2)) is None
    assert exact_sqrt(F(-1)) is None


def test_same_multiset():
    assert same_multiset([F(1), 2.0000000000001], [2, 1])
    assert not same_multiset([F(1), F(2)], [F(1), F(3)])
    assert not same_multiset([1], [1, 1])


def _rational(rng: random.Random) -> F:
    return F(rng.randint(-9, 9), rng.randint(1, 5))


def _poly(rng: random.Random, degree: int) -> P:
    return P(tuple(_rational(rng) for _ in range(degree + 1)))


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_evaluate_is_a_ring_homomorphism(seed):
    rng = random.Random(seed)
    for _ in range(100):
        p, q = _poly(rng, rng.randint(0, 4)), _poly(rng, rng.randint(0, 4))
        x = _rational(rng)
        assert evaluate(p + q, x) == evaluate(p, x) + evaluate(q, x)
        assert evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x)
        assert evaluate(p - q, x) == evaluate(p, x) - evaluate(q, x)


@pytest.mark.parametrize("seed", [0, 1])
def test_real_roots_recovers_rational_roots(seed):
    rng = random.Random(seed)
    for _ in range(100):
        rs = [_rational(rng) for _ in range(rng.randint(1, 4))]
        p = P.of(_rational(rng) or 1)
        for r in rs:
            p = p * P((-r, 1))
        found = real_roots(p)
        assert found.values() == sorted(rs)
        assert not found.residual_roots
