import random
from fractions import Fraction
from math import gcd

import mpmath
import pytest
from hypothesis import given, strategies as st

from rotorder.algnum import (
    AlgebraicReal,
    Matrix,
    alg_add,
    alg_mul,
    alg_poly,
    charpoly,
    companion,
    cos_of,
    kron_prod,
    kron_sum,
    psi_index,
    scale_by_rational,
    scale_via_companion,
    shift_by_rational,
    shift_via_companion,
    sin_of,
)
from rotorder.angle import RationalAngle
from rotorder.poly import Interval, Poly, count_roots_closed, parse_poly, primitive, sign_at
from rotorder.trigpoly import eta, psi

x = Poly.x()


def faddeev_leverrier(m: Matrix) -> Poly:
    n = m.n
    ident = Matrix.identity(n)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = Matrix.identity(n) * 0
    c = Fraction(1)
    for k in range(1, n + 1):
        mk = m * mk + ident * c
        am = m * mk
        c = -sum(am[i, i] for i in range(n)) / k
        coeffs[n - k] = c
    return Poly(coeffs)


def random_monic(rng, deg):
    return Poly([Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(deg)] + [1])


def root(p, lo, hi):
    return AlgebraicReal.from_enclosure(primitive(p), Fraction(lo), Fraction(hi))


def mp(a):
    return a.approx(120)


# -- matrices ------------------------------------------------------------------

def test_companion_examples():
    assert companion(x - 2) == Matrix([[2]])
    assert companion(x * x + 1) == Matrix([[0, -1], [1, 0]])
    assert companion(psi(10)) == Matrix([[0, Fraction(1, 4)], [1, Fraction(1, 2)]])


@pytest.mark.parametrize("bad", [Poly((1,)), Poly((1, 2))])
def test_companion_rejects(bad):
    with pytest.raises(ValueError):
        companion(bad)


def test_charpoly_examples():
    assert charpoly(Matrix.identity(3)) == (x - 1) ** 3
    assert charpoly(Matrix([[0, Fraction(1, 4)], [1, Fraction(1, 2)]])) == psi(10)


def test_companion_roundtrip_random():
    rng = random.Random(7)
    for _ in range(50):
        p = random_monic(rng, rng.randint(1, 8))
        assert charpoly(companion(p)) == p


@given(st.lists(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5), min_size=5, max_size=5), min_size=5, max_size=5))
def test_charpoly_matches_faddeev_leverrier(rows):
    for n in (1, 3, 5):
        m = Matrix([r[:n] for r in rows[:n]])
        assert charpoly(m) == faddeev_leverrier(m)


def test_charpoly_with_zero_pivots():
    m = Matrix([[1, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, 4], [5, 0, 0, 0]])
    assert charpoly(m) == faddeev_leverrier(m)


def test_kron_examples():
    s = kron_sum(companion(x - 1), companion(x - 2))
    assert charpoly(s) == x - 3
    p = charpoly(kron_prod(companion(x * x - 2), companion(x * x - 3)))
    with mpmath.workprec(100):
        v = mpmath.sqrt(6)
        assert abs(sum(Fraction(c) * v ** i for i, c in enumerate(p.coeffs))) < 1e-10
    q = charpoly(kron_sum(companion(x * x - 2), companion(x * x - 2)))
    assert q(0) == 0
    with mpmath.workprec(100):
        v = 2 * mpmath.sqrt(2)
        assert abs(sum(Fraction(c) * v ** i for i, c in enumerate(q.coeffs))) < 1e-10


def test_kron_annihilation_random_quadratics():
    rng = random.Random(11)
    done = 0
    while done < 50:
        b1, c1, b2, c2 = (rng.randint(-6, 6) for _ in range(4))
        p1, p2 = Poly((c1, b1, 1)), Poly((c2, b2, 1))
        if b1 * b1 - 4 * c1 <= 0 or b2 * b2 - 4 * c2 <= 0:
            continue
        with mpmath.workprec(120):
            r1 = (-b1 + mpmath.sqrt(b1 * b1 - 4 * c1)) / 2
            r2 = (-b2 - mpmath.sqrt(b2 * b2 - 4 * c2)) / 2
            for mat, v in ((kron_sum, r1 + r2), (kron_prod, r1 * r2)):
                p = charpoly(mat(companion(p1), companion(p2)))
                res = sum(mpmath.mpf(Fraction(c).numerator) / Fraction(c).denominator * v ** i for i, c in enumerate(p.coeffs))
                assert abs(res) <= 1e-10
        done += 1


# -- algebraic reals -------------------------------------------------------------

def test_invariant_checked_on_construction():
    with pytest.raises(AssertionError):
        AlgebraicReal(Poly((-2, 0, 1)), Interval(-2, 2))
    with pytest.raises(ValueError):
        AlgebraicReal(Poly((-4, 0, 2)), Interval(1, 2))
    with pytest.raises(ValueError):
        AlgebraicReal(Poly((3,)), Interval(1, 2))


def test_shift_and_scale_examples():
    zero = AlgebraicReal.from_rational(0)
    one = shift_by_rational(1, zero)
    assert one.annihilator == x - 1 and one == 1
    golden = scale_by_rational(2, cos_of(RationalAngle(1, 5)))
    assert golden.annihilator == eta(5)
    assert float(golden) == pytest.approx((1 + 5 ** 0.5) / 2)
    a = cos_of(RationalAngle(2, 7))
    assert shift_by_rational(0, a) is a
    with pytest.raises(ValueError):
        scale_by_rational(0, a)


@given(st.fractions(min_value=-5, max_value=5, max_denominator=7), st.integers(1, 40), st.integers(1, 40))
def test_shift_scale_match_companion_route(q, p, r):
    a = cos_of(RationalAngle(p, r))
    if a.is_rational:
        return
    s = shift_by_rational(q, a)
    assert s.annihilator == shift_via_companion(q, a)
    assert s.degree == a.degree
    if q:
        assert scale_by_rational(q, a).annihilator == scale_via_companion(q, a)


def test_add_mul_examples():
    r2 = root(x * x - 2, 1, 2)
    z = alg_add(r2, -r2)
    assert z.annihilator == x and z == 0
    c = cos_of(RationalAngle(2, 5))
    assert alg_mul(c, AlgebraicReal.from_rational(1)).annihilator == c.annihilator
    half = alg_add(cos_of(RationalAngle(1, 5)), cos_of(RationalAngle(3, 5)))
    assert half.annihilator == Poly((-1, 2)) and half == Fraction(1, 2)


def test_add_mul_numeric_and_degree_bound():
    rng = random.Random(3)
    for _ in range(25):
        a = cos_of(RationalAngle(rng.randint(1, 20), rng.randint(3, 9)))
        b = sin_of(RationalAngle(rng.randint(1, 20), rng.randint(3, 9)))
        for op, f in ((alg_add, lambda u, v: u + v), (alg_mul, lambda u, v: u * v)):
            r = op(a, b)
            assert r.degree <= a.degree * b.degree
            with mpmath.workprec(120):
                assert abs(mp(r) - f(mp(a), mp(b))) < 1e-30


def test_alg_poly_double_angle():
    c = cos_of(RationalAngle(1, 7))
    d = alg_poly(Poly((-1, 0, 2)), c)
    assert d == cos_of(RationalAngle(2, 7))
    assert d.annihilator == primitive(psi(7))
    assert d.minimal


@pytest.mark.parametrize(
    "angle,ann",
    [(RationalAngle(1, 2), x), (RationalAngle(1), x + 1), (RationalAngle(0), x - 1)],
)
def test_cos_of_exact_cases(angle, ann):
    assert cos_of(angle).annihilator == ann


def test_cos_of_pi_over_5():
    c = cos_of(RationalAngle(1, 5))
    assert c.annihilator == primitive(psi(10))
    assert float(c) == pytest.approx(0.8090169943749475, abs=1e-15)


def test_reduction_rule_against_numeric_cosines():
    with mpmath.workprec(120):
        for q in range(1, 25):
            for p in range(-3 * q, 3 * q + 1):
                a = RationalAngle(p, q)
                m = psi_index(a)
                r = a.num % (2 * a.den)
                assert m == (1 if r == 0 else 2 * a.den // gcd(r, 2 * a.den))
                c = cos_of(a)
                assert abs(c.approx(120) - mpmath.cospi(mpmath.mpf(p) / q)) < 1e-30
                assert sign_at(psi(m), c.interval.lo) * sign_at(psi(m), c.interval.hi) <= 0


def test_sin_of():
    s = sin_of(RationalAngle(1, 3))
    assert s.annihilator == Poly((-3, 0, 4))
    assert float(s) == pytest.approx(3 ** 0.5 / 2)


def test_equality_and_hash():
    a = cos_of(RationalAngle(1, 5))
    b = AlgebraicReal.from_enclosure(Poly((-1, -2, 4)), Fraction(1, 2), 1)
    assert a == b
    assert a != cos_of(RationalAngle(3, 5))
    assert a != Fraction(1, 2)
    with pytest.raises(TypeError):
        hash(a)


def test_rational_root_detection():
    # (x - 1/3)(x^2 - 2) has the rational root 1/3
    p = primitive((x - Fraction(1, 3)) * (x * x - 2))
    a = AlgebraicReal.from_enclosure(p, 0, 1)
    assert a.is_rational and a.as_fraction() == Fraction(1, 3)


@given(st.integers(1, 30), st.integers(2, 30))
def test_every_value_satisfies_invariant(p, q):
    a = cos_of(RationalAngle(p, q))
    b = shift_by_rational(Fraction(1, 3), a)
    for v in (a, b):
        assert count_roots_closed(v.annihilator, v.interval) == 1
        assert not v.interval.is_point or sign_at(v.annihilator, v.interval.lo) == 0
