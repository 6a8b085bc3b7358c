"""Deciding whether an angle given by an algebraic cosine is a rational multiple of pi.

Two routes meet here.  For perpendicular axes and equal angles ``phi`` the
composed rotation satisfies ``2*cos(gamma/2) = 1 + cos(phi)``; shifting a
companion matrix by the identity keeps it minimal, so integrality of that one
polynomial settles the question.  In general, ``2*cos(theta)`` is a root of some
``double_cos_minpoly(m)`` exactly when ``theta`` is a rational multiple of pi,
which :func:`eta_membership` tests against a finite candidate list.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Union

import mpmath

from .algnum import AlgebraicReal, cos_of, shift_by_rational
from .angle import RationalAngle
from .numeric import continued_fraction_probe, precision_bits
from .poly import Poly, count_roots, gcd_poly, sign_at, sturm_sequence
from .trigpoly import double_cos_minpoly, psi_degree


@dataclass(frozen=True)
class RationalMultiple:
    """``angle`` is the recovered rotation angle; ``half_angle`` is set by
    :func:`theorem1_decide`, where the tested value is ``2*cos(angle/2)``."""

    angle: RationalAngle
    half_angle: RationalAngle | None = None
    is_rational = True

    def describe(self) -> str:
        return f"rational: {self.angle.describe()}"


@dataclass(frozen=True)
class IrrationalMultiple:
    reason: str
    coefficient_index: int | None = None
    is_rational = False

    def describe(self) -> str:
        return f"irrational: {self.reason}"


AngleVerdict = Union[RationalMultiple, IrrationalMultiple]


def gamma_double_cos_perpendicular(phi: RationalAngle) -> AlgebraicReal:
    """``2*cos(gamma/2) = 1 + cos(phi)``; the annihilator is minimal."""
    return shift_by_rational(1, cos_of(phi))


def omega_coefficients(c: Poly) -> list[Fraction]:
    """Coefficients of ``det(M_c + I - x*I)`` by binomial expansion.

    Expands ``sum_{i<d-2} c_i (-1)**(d+i) (1-x)**i
    + (1-x)**(d-2) * (x**2 + (c_{d-1}-2) x + c_{d-2} - c_{d-1} + 1)``,
    which equals ``(-1)**d * c(x - 1)``.
    """
    d = c.degree
    if d < 3:
        raise ValueError("expansion needs degree >= 3; use charpoly directly")
    if not c.is_monic():
        raise ValueError("expansion needs a monic polynomial")
    b1 = c[d - 1] - 2
    b0 = c[d - 2] - c[d - 1] + 1

    def binom(n, k):
        return comb(n, k) if 0 <= k <= n else 0

    def sign(e):
        # (-1)**e without the float that a negative exponent produces
        return -1 if e % 2 else 1

    out = []
    for k in range(d + 1):
        w = sum(c[i] * sign(d + i + k) * binom(i, k) for i in range(k, d - 2))
        w += sign(k) * binom(d - 2, k) * b0
        w += sign(k - 1) * binom(d - 2, k - 1) * b1
        w += sign(k) * binom(d - 2, k - 2)
        out.append(Fraction(w))
    return out


def _nonint_indices(p: Poly) -> list[int]:
    return [i for i, v in enumerate(p.coeffs) if Fraction(v).denominator != 1]


def theorem1_decide(phi: RationalAngle) -> AngleVerdict:
    """Is the product of two rotations by ``phi`` about perpendicular axes of finite order?

    Returns ``RationalMultiple(gamma, gamma/2)`` with ``gamma`` in ``(0, 2*pi]``,
    or ``IrrationalMultiple`` naming the highest non-integer coefficient of the
    monic minimal polynomial of ``2*cos(gamma/2)``.
    """
    b = gamma_double_cos_perpendicular(phi)
    monic = b.annihilator.monic()
    bad = _nonint_indices(monic)
    if bad:
        k = max(bad)
        return IrrationalMultiple(f"non-integer coefficient at x^{k}", k)
    v = eta_membership(b)
    if not v.is_rational:
        # an integral minimal polynomial of a value in [0, 2] must be some eta
        return v
    half = v.angle
    gamma = (half * 2).mod_2pi()
    if gamma.num == 0:
        gamma = RationalAngle(2)
    return RationalMultiple(gamma, half)


def _candidates(degree: int):
    # deg(double_cos_minpoly(m)) = totient(m)/2 <= D and totient(m) >= sqrt(m/2)
    for m in range(1, 8 * degree * degree + 1):
        if psi_degree(m) <= degree:
            yield m


def _cos_indices(m: int) -> list[int]:
    """``j`` in ``[0, m/2]`` coprime to ``m``: roots ``2*cos(2*pi*j/m)`` in decreasing order."""
    return [j for j in range(m // 2 + 1) if gcd(j, m) == 1]


def _inside_pm2(a: AlgebraicReal) -> AlgebraicReal:
    two = Fraction(2)
    for edge in (two, -two):
        if edge in a.interval and sign_at(a.annihilator, edge) == 0:
            return AlgebraicReal.from_rational(edge)
    while a.interval.lo < -two or a.interval.hi > two:
        if a.interval.hi < -two or a.interval.lo > two:
            raise ValueError(f"{a} lies outside [-2, 2]")
        a = a.refine(a.interval.width / 2)
    return a


def eta_membership(a: AlgebraicReal) -> AngleVerdict:
    """Decide whether ``a = 2*cos(theta)`` with ``theta`` a rational multiple of pi.

    On success the verdict carries ``theta`` in ``[0, pi]``.  Inputs outside
    ``[-2, 2]`` are rejected.
    """
    a = _inside_pm2(a)
    ann = a.annihilator
    if a.minimal and not ann.is_monic():
        return IrrationalMultiple(f"leading coefficient {ann.lc}: not an algebraic integer")
    tried = 0
    for m in _candidates(ann.degree):
        rho = double_cos_minpoly(m)
        if a.minimal and rho.degree != ann.degree:
            continue
        tried += 1
        if gcd_poly(ann, rho) != rho:
            continue
        chain = sturm_sequence(rho)
        iv = a.interval
        if iv.is_point:
            hit = sign_at(rho, iv.lo) == 0
        else:
            hit = count_roots(chain, iv.lo, iv.hi) > 0
        if not hit:
            continue
        # roots of rho strictly above the interval, counted on (hi, 2]
        above = count_roots(chain, iv.hi, 2)
        j = _cos_indices(m)[above]
        return RationalMultiple(RationalAngle(2 * j, m))
    return IrrationalMultiple(f"no 2cos(2*pi*j/m) matches among {tried} candidates")


# ---------------------------------------------------------------------------
# numeric oracle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProbeResult:
    gamma_over_pi: object
    fraction: Fraction | None


def probe_perpendicular(phi: RationalAngle, bits: int | None = None, max_den: int = 10 ** 6) -> ProbeResult:
    """Continued-fraction probe on ``gamma/pi`` from the numeric trace identity.

    ``cos(gamma) = (cos(phi)**2 + 2*cos(phi) - 1) / 2``, evaluated in floating
    point only, so it shares no code with the exact decision path.
    """
    bits = max(bits or precision_bits(), 160)
    with mpmath.workprec(bits):
        c = mpmath.cospi(mpmath.mpf(phi.num) / phi.den)
        cg = (c * c + 2 * c - 1) / 2
        cg = min(max(cg, mpmath.mpf(-1)), mpmath.mpf(1))
        g = mpmath.acos(cg) / mpmath.pi
        # acos loses half the bits near +-1
        tol = mpmath.mpf(2) ** (-(bits // 2 - 16))
        return ProbeResult(g, continued_fraction_probe(g, max_den, tol))


def probe_agrees(verdict: AngleVerdict, probe: ProbeResult, irrational_den_cap: int = 10 ** 3) -> bool:
    """Exact verdict versus probe: rationals must match ``gamma`` folded to
    ``[0, pi]``; irrationals must show no convergent with small denominator."""
    if verdict.is_rational:
        return probe.fraction is not None and probe.fraction == verdict.angle.folded().fraction
    return probe.fraction is None or probe.fraction.denominator > irrational_den_cap

