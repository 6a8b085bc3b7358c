from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from rotorder.algnum import AlgebraicReal, Matrix, charpoly, companion, cos_of, scale_by_rational
from rotorder.angle import RationalAngle
from rotorder.angledec import (
    IrrationalMultiple,
    RationalMultiple,
    eta_membership,
    gamma_double_cos_perpendicular,
    omega_coefficients,
    probe_agrees,
    probe_perpendicular,
    theorem1_decide,
)
from rotorder.poly import Poly, primitive
from rotorder.trigpoly import eta, psi

x = Poly.x()


def reduced_angles(qmax):
    for q in range(1, qmax + 1):
        for p in range(-2 * q, 2 * q + 1):
            if gcd(p, q) == 1:
                yield RationalAngle(p, q)


# -- 2cos(gamma/2) -----------------------------------------------------------------

@pytest.mark.parametrize(
    "phi,ann",
    [(RationalAngle(1, 2), x - 1), (RationalAngle(1), x), (RationalAngle(2), x - 2)],
)
def test_exceptional_cases(phi, ann):
    b = gamma_double_cos_perpendicular(phi)
    assert b.annihilator == ann


def test_exceptional_cases_are_eta():
    assert gamma_double_cos_perpendicular(RationalAngle(1, 2)).annihilator == eta(3)
    assert gamma_double_cos_perpendicular(RationalAngle(1)).annihilator == eta(2)


def test_pi_over_5():
    b = gamma_double_cos_perpendicular(RationalAngle(1, 5))
    m = b.annihilator.monic()
    assert m == Poly((Fraction(5, 4), Fraction(-5, 2), 1))


# -- omega expansion -------------------------------------------------------------

def test_omega_matches_charpoly_for_psi():
    for n in range(1, 101):
        p = psi(n)
        if p.degree < 3:
            continue
        d = p.degree
        m = companion(p)
        direct = charpoly(m + Matrix.identity(d))
        omega = omega_coefficients(p)
        assert [c * (-1) ** d for c in omega] == list(direct.coeffs)
        assert omega[d] == (-1) ** d


def test_omega_cubic_examples():
    om = omega_coefficients(psi(7))
    assert om[3] == -1
    assert Poly(om) * -1 == charpoly(companion(psi(7)) + Matrix.identity(3))
    # x^3: det(M + I - xI) = (1 - x)^3
    assert omega_coefficients(x ** 3) == [1, -3, 3, -1]


@given(st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=9), min_size=3, max_size=9))
def test_omega_random(cs):
    p = Poly(cs + [1])
    d = p.degree
    assert Poly(omega_coefficients(p)) * (-1) ** d == p.shift(-1)


@pytest.mark.parametrize("p", [x, x * x + 1])
def test_omega_rejects_low_degree(p):
    with pytest.raises(ValueError):
        omega_coefficients(p)


# -- perpendicular equal-angle decision -------------------------------------------

def test_perpendicular_decision_examples():
    v = theorem1_decide(RationalAngle(1, 2))
    assert isinstance(v, RationalMultiple)
    assert v.angle == RationalAngle(2, 3) and v.half_angle == RationalAngle(1, 3)
    v = theorem1_decide(RationalAngle(1, 3))
    assert isinstance(v, IrrationalMultiple) and v.coefficient_index == 0
    v = theorem1_decide(RationalAngle(1, 5))
    assert isinstance(v, IrrationalMultiple) and v.reason == "non-integer coefficient at x^1"
    v = theorem1_decide(RationalAngle(2))
    assert v.angle == RationalAngle(2)
    assert theorem1_decide(RationalAngle(1)).angle == RationalAngle(1)


def test_perpendicular_decision_sweep():
    for phi in reduced_angles(50):
        assert theorem1_decide(phi).is_rational == phi.is_multiple_of_half_pi(), phi


def test_oracle_agrees_on_sweep():
    for phi in reduced_angles(50):
        v = theorem1_decide(phi)
        pr = probe_perpendicular(phi)
        assert probe_agrees(v, pr), phi
        if not v.is_rational:
            assert pr.fraction is None or pr.fraction.denominator > 1000


def test_probe_detects_a_wrong_verdict():
    phi = RationalAngle(1, 2)
    wrong = RationalMultiple(RationalAngle(1, 3))
    assert not probe_agrees(wrong, probe_perpendicular(phi))
    assert not probe_agrees(IrrationalMultiple("forced"), probe_perpendicular(phi))


# -- eta membership ----------------------------------------------------------------

def test_membership_examples():
    v = eta_membership(AlgebraicReal.from_rational(1))
    assert v.angle == RationalAngle(1, 3)
    golden = AlgebraicReal.from_enclosure(x * x - x - 1, 1, 2)
    assert eta_membership(golden).angle == RationalAngle(1, 5)
    v = eta_membership(AlgebraicReal.from_rational(Fraction(3, 2)))
    assert isinstance(v, IrrationalMultiple)


def test_membership_endpoints():
    assert eta_membership(AlgebraicReal.from_rational(2)).angle == RationalAngle(0)
    assert eta_membership(AlgebraicReal.from_rational(-2)).angle == RationalAngle(1)
    assert eta_membership(AlgebraicReal.from_rational(-1)).angle == RationalAngle(2, 3)


def test_membership_rejects_outside():
    with pytest.raises(ValueError):
        eta_membership(AlgebraicReal.from_rational(3))
    with pytest.raises(ValueError):
        eta_membership(AlgebraicReal.from_enclosure(x * x - 5, 2, 3))


@given(st.integers(0, 60), st.integers(1, 30))
def test_membership_recovers_angle(p, q):
    theta = RationalAngle(p, q).folded()
    two_cos = scale_by_rational(2, cos_of(theta))
    v = eta_membership(two_cos)
    assert v.is_rational and v.angle == theta


@given(st.integers(1, 40), st.integers(1, 12))
def test_membership_non_minimal_annihilator(p, q):
    # multiply the annihilator by an unrelated factor; result must not change
    theta = RationalAngle(p, q).folded()
    a = scale_by_rational(2, cos_of(theta))
    junk = primitive(a.annihilator * (x * x - 7))
    b = AlgebraicReal.from_enclosure(junk, a.interval.lo, a.interval.hi)
    assert eta_membership(b).angle == theta


@given(st.integers(1, 50), st.integers(1, 50))
def test_membership_non_monic_minimal_is_irrational(num, den):
    r = Fraction(num, den)
    if r.denominator == 1 or abs(r) > 2:
        return
    assert isinstance(eta_membership(AlgebraicReal.from_rational(r)), IrrationalMultiple)


def test_membership_integral_but_not_eta():
    # x^2 - 2x - 1 has root 1 - sqrt(2) in [-2, 2] but is no eta polynomial
    a = AlgebraicReal.from_enclosure(x * x - 2 * x - 1, -1, 0)
    a = AlgebraicReal(a.annihilator, a.interval, True)
    assert isinstance(eta_membership(a), IrrationalMultiple)
