from fractions import Fraction
import mpmath
import pytest

from rotorder.cyclo import CyclotomicField, sqrt_conductor
from rotorder.errors import DegreeOverflow
from rotorder.poly import Poly


@pytest.fixture(scope="module")
def field():
    # holds sqrt(2), sqrt(3), sqrt(5) and cos/sin of multiples of pi/60
    return CyclotomicField(120)


def test_conductor():
    assert sqrt_conductor(1) == 4
    assert sqrt_conductor(2) == 8
    assert sqrt_conductor(3) == 12
    assert sqrt_conductor(18) == 8
    assert sqrt_conductor(15) == 60


def test_rejects_bad_conductor():
    with pytest.raises(ValueError):
        CyclotomicField(6)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 6, 7, 8, 11, 12, 15, 35, 77])
def test_sqrt_is_positive_root(n):
    k = CyclotomicField(sqrt_conductor(n))
    v = k.numeric(k.sqrt(n), 100)
    with mpmath.workprec(100):
        assert abs(v - mpmath.sqrt(n)) < 1e-25


def test_sqrt_outside_field(field):
    with pytest.raises(ValueError):
        field.sqrt(7)


@pytest.mark.parametrize("r", [Fraction(1, 5), Fraction(3, 4), Fraction(-7, 10), Fraction(1, 2)])
def test_cos_sin(field, r):
    with mpmath.workprec(100):
        assert abs(field.numeric(field.cos_pi(r), 100) - mpmath.cospi(r.numerator / mpmath.mpf(r.denominator))) < 1e-25
        assert abs(field.numeric(field.sin_pi(r), 100) - mpmath.sinpi(r.numerator / mpmath.mpf(r.denominator))) < 1e-25


def test_minpoly_and_real_value(field):
    e = field.cos_pi(Fraction(1, 5)) + field.sqrt(2)
    a = field.to_real(e)
    with mpmath.workprec(100):
        assert abs(a.approx(100) - (mpmath.cospi(mpmath.mpf(1) / 5) + mpmath.sqrt(2))) < 1e-25
    assert a.degree == 4
    assert a.minimal


def test_rational_elements(field):
    assert field.to_real(Poly((Fraction(3, 7),))) == Fraction(3, 7)
    e = field.mul(field.sqrt(3), field.sqrt(3))
    assert field.to_real(e) == 3


def test_degree_cap(field):
    e = field.cos_pi(Fraction(1, 15))
    with pytest.raises(DegreeOverflow):
        field.to_real(e, max_degree=2)


def test_galois_minpoly_matches_charpoly(field):
    cases = [
        field.cos_pi(Fraction(1, 5)) + field.sqrt(2),
        field.mul(field.sin_pi(Fraction(1, 12)), field.sqrt(3)),
        field.cos_pi(Fraction(7, 60)) * 3 - field.sqrt(5) / 2,
        field.mul(field.cos_pi(Fraction(1, 10)), field.cos_pi(Fraction(1, 10))),
    ]
    for e in cases:
        assert field.minpoly(e) == field.minpoly_via_charpoly(e)
        assert field.conjugate_count(e) == field.minpoly(e).degree
