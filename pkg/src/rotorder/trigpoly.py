"""Chebyshev, cosine-minimal, doubled-cosine-minimal and cyclotomic polynomials.

Naming used throughout the package:

* ``psi(n)``   monic minimal polynomial of ``cos(2*pi/n)``;
* ``eta(n)``   monic integer minimal polynomial of ``2*cos(pi/n)``;
* ``double_cos_minpoly(m)``   monic integer minimal polynomial of
  ``2*cos(2*pi/m)``, so that ``eta(n) == double_cos_minpoly(2*n)``.

``psi`` is built by dividing down the Chebyshev identities

    2**k * prod(psi(d) for d | n) == T(k+1) - T(k)      (n = 2k + 1)
    2**k * prod(psi(d) for d | n) == T(k+1) - T(k-1)    (n = 2k)

The division runs on the integer rescaling ``2**deg(psi(d)) * psi(d)`` so the
whole recursion stays in exact integer arithmetic; the Moebius-product route
is kept separately as an independent check.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import LemmaViolation
from .numtheory import divisors, moebius, totient
from .poly import Poly, content_primitive, div_exact


@lru_cache(maxsize=1024)
def chebyshev_T(k: int) -> Poly:
    """Chebyshev polynomial of the first kind, ``T_k(cos t) = cos(k t)``.

    Uses the explicit coefficient formula, which costs O(k) big-integer
    operations rather than the O(k**2) of running the three-term recurrence.
    """
    if k < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    if k == 0:
        return Poly((1,))
    out = [0] * (k + 1)
    for m in range(k // 2 + 1):
        num = k * comb(k - m, m)
        e = k - 2 * m - 1
        c = (num << e) // (k - m) if e >= 0 else num // (2 * (k - m))
        out[k - 2 * m] = -c if m % 2 else c
    return Poly(out)


def _chebyshev_rhs(n: int) -> Poly:
    k = n // 2
    if n % 2:
        return chebyshev_T(k + 1) - chebyshev_T(k)
    return chebyshev_T(k + 1) - chebyshev_T(k - 1)


def psi_degree(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return 1 if n <= 2 else totient(n) // 2


@lru_cache(maxsize=None)
def _psi_scaled(n: int) -> Poly:
    # 2**deg(psi_n) * psi_n(x); integral with leading coefficient 2**deg
    rhs = 2 * _chebyshev_rhs(n)
    for d in divisors(n)[:-1]:
        rhs = div_exact(rhs, _psi_scaled(d))
    return rhs


@lru_cache(maxsize=None)
def psi(n: int) -> Poly:
    """Minimal polynomial of ``cos(2*pi/n)`` over Q (monic).

    >>> psi(5).to_text()
    '-1/4 1/2 1'
    """
    if n < 1:
        raise ValueError("n must be positive")
    p = _psi_scaled(n)
    return p / p.lc


def psi_via_moebius(n: int) -> Poly:
    """Rebuild ``psi(n)`` from the Moebius-inverted Chebyshev products.

    Independent of :func:`psi`: no divisor polynomial is ever reused, the
    answer is one exact division of two products of Chebyshev differences.
    """
    if n < 3:
        raise ValueError("Moebius construction needs n >= 3")

    def odd_factor(d):
        h = d // 2
        return (chebyshev_T(h + 1) - chebyshev_T(h)) * Fraction(1, 2 ** h)

    def even_factor(j):
        return (chebyshev_T(j + 1) - chebyshev_T(j - 1)) * Fraction(1, 2 ** j)

    m, odd = 0, n
    while odd % 2 == 0:
        odd //= 2
        m += 1

    num, den = Poly((1,)), Poly((1,))
    for d in divisors(odd):
        mu = moebius(odd // d)
        if mu == 0:
            continue
        if m == 0:
            top, bottom = odd_factor(d), Poly((1,))
        elif m == 1:
            top, bottom = even_factor(d), odd_factor(d)
        else:
            top, bottom = even_factor(2 ** (m - 1) * d), even_factor(2 ** (m - 2) * d)
        if mu == 1:
            num, den = num * top, den * bottom
        else:
            num, den = num * bottom, den * top
    return div_exact(num, den)


def free_term(n: int) -> Fraction:
    """Absolute value of the constant coefficient of ``psi(n)``, from divisor data.

    Writing ``n = 2**e * k`` with ``k`` odd:

    * ``e == 0``:  prod over d | k of ``2**(-(d//2) * mu(k/d))``
    * ``e == 1``:  same product as for the odd part ``k``
    * ``e == 2``:  prod over d | k of ``(2*d / 2**d) ** mu(k/d)``
    * ``e >= 3``:  prod over d | k of ``(2 / 2**(2**(e-2) * d)) ** mu(k/d)``

    For ``e >= 1`` both Chebyshev differences in each factor vanish at 0, so
    the constant term of the quotient is the ratio of their linear
    coefficients; for ``e == 2`` that ratio keeps a factor ``d``.
    """
    if n in (1, 2, 4) or n < 1:
        raise ValueError(f"free-term formula does not apply to n={n}")
    e, k = 0, n
    while k % 2 == 0:
        k //= 2
        e += 1
    out = Fraction(1)
    for d in divisors(k):
        mu = moebius(k // d)
        if mu == 0:
            continue
        if e <= 1:
            f = Fraction(1, 2 ** (d // 2))
        elif e == 2:
            f = Fraction(2 * d, 2 ** d)
        else:
            f = Fraction(2, 2 ** (2 ** (e - 2) * d))
        out *= f if mu == 1 else 1 / f
    return out


def has_nonint_coefficient(n: int) -> bool:
    return not psi(n).is_integral()


@lru_cache(maxsize=None)
def double_cos_minpoly(m: int) -> Poly:
    """Monic integer minimal polynomial of ``2*cos(2*pi/m)``.

    Roots are ``2*cos(2*pi*j/m)`` for ``0 <= j <= m/2`` with ``gcd(j, m) == 1``.
    """
    p = psi(m)
    d = p.degree
    q = p.scale_arg(Fraction(1, 2)) * 2 ** d
    if not (q.is_integral() and q.is_monic()):
        raise LemmaViolation(f"2**{d} psi({m})(x/2) = {q} is not monic over Z")
    content, _ = content_primitive(q)
    if content != 1:
        raise LemmaViolation(f"content {content} != 1 for m={m}")
    return q


def eta(n: int) -> Poly:
    """Minimal polynomial of ``2*cos(pi/n)``: ``2**deg * psi(2n)(x/2)``.

    >>> eta(5).to_text()
    '-1 -1 1'
    """
    if n < 1:
        raise ValueError("n must be positive")
    return double_cos_minpoly(2 * n)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """``Phi_n`` from ``x**n - 1 == prod(Phi_d for d | n)`` (monic convention)."""
    if n < 1:
        raise ValueError("n must be positive")
    p = Poly.monomial(n) - 1
    for d in divisors(n)[:-1]:
        p = div_exact(p, cyclotomic(d))
    return p


# older name; the value is not always a power of two (n = 4k, k > 1 odd)
free_term_exponent = free_term
