"""High-precision numerics used for pinning roots and for the rationality probe.

Nothing here decides anything on its own: enclosures only pick which exact
root is meant, and the continued-fraction probe is an independent oracle the
exact verdicts are compared against.
"""

from __future__ import annotations

import os
from fractions import Fraction

import mpmath

DEFAULT_BITS = 128
ENV_VAR = "ROTORDER_PRECISION_BITS"


def precision_bits() -> int:
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return DEFAULT_BITS
    try:
        bits = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if bits < 64:
        raise ValueError(f"{ENV_VAR} must be at least 64")
    return bits


def mpf_to_fraction(x) -> Fraction:
    # no mpf() round trip: that would round to the ambient precision;
    # and .man_exp drops the sign under the gmpy backend
    if not isinstance(x, mpmath.mpf):
        x = mpmath.mpf(x)
    if not mpmath.isfinite(x):
        raise ValueError(f"cannot convert {x} to a fraction")
    p, q = mpmath.libmp.to_rational(x._mpf_)
    return Fraction(int(p), int(q))


def cos_pi(r: Fraction, bits: int):
    """``cos(r*pi)`` evaluated with ``bits`` of working precision."""
    with mpmath.workprec(bits):
        return mpmath.cospi(mpmath.mpf(r.numerator) / r.denominator)


def enclosure(value, radius: Fraction) -> tuple[Fraction, Fraction]:
    c = mpf_to_fraction(value)
    return c - radius, c + radius


def continued_fraction_probe(x, max_den: int, tol) -> Fraction | None:
    """Return the first convergent ``p/q`` of ``x`` with ``q <= max_den`` and
    ``|x - p/q| < tol``, or ``None``.

    ``x`` is an ``mpf``; convergents are generated with the usual
    ``h_n = a_n h_{n-1} + h_{n-2}`` recurrence on exact integers, while the
    partial quotients come from ``x`` at its own precision.
    """
    tol = mpmath.mpf(tol)
    h0, h1 = 0, 1
    k0, k1 = 1, 0
    y = mpmath.mpf(x)
    while True:
        a = int(mpmath.floor(y))
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        if k1 > max_den:
            return None
        if abs(x - mpmath.mpf(h1) / k1) < tol:
            return Fraction(h1, k1)
        frac = y - a
        if frac == 0:
            return None
        y = 1 / frac
