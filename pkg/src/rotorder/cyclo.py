"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Every quantity a gate product needs lives in one such field:
``cos(r*pi)`` and ``sin(r*pi)`` for rational ``r``, ``i``, and square roots
of integers (Gauss sums).  Elements are polynomials in ``zeta`` reduced modulo
``Phi_N``.

Minimal polynomials come from the Galois action, which is exact and cheap
here: ``sigma_k`` sends ``zeta`` to ``zeta**k``.  The number of distinct
conjugates is the degree ``D``; the power sums of the conjugates are field
traces (``Tr(zeta**m)`` is a Ramanujan sum), and Newton's identities turn them
into coefficients.  The characteristic polynomial of the multiplication matrix
gives the same answer and is kept as a cross-check.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import mpmath

from .algnum import AlgebraicReal, Matrix, charpoly
from .errors import DegreeOverflow
from .numeric import mpf_to_fraction, precision_bits
from .numtheory import factorize, moebius, squarefree_decomposition, totient
from .poly import Interval, Poly, primitive, squarefree_part, sturm_isolate
from .trigpoly import cyclotomic


def _legendre(a: int, p: int) -> int:
    t = pow(a, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def sqrt_conductor(n: int) -> int:
    """Least ``N`` (a multiple of 4) with ``sqrt(n)`` in ``Q(zeta_N)``."""
    if n < 1:
        raise ValueError("square root of a nonpositive integer")
    _, s = squarefree_decomposition(n)
    out = 4
    for p, _ in factorize(s):
        out = lcm(out, 8 if p == 2 else 4 * p)
    return out


def angle_conductor(r: Fraction) -> int:
    """Least ``N`` (a multiple of 4) holding ``cos(r*pi)`` and ``sin(r*pi)``."""
    return lcm(4, 2 * Fraction(r).denominator)


class CyclotomicField:
    """``Q(zeta_N)`` with ``zeta_N = exp(2*pi*i/N)``; ``N`` must be divisible by 4."""

    def __init__(self, n: int):
        if n < 4 or n % 4:
            raise ValueError("conductor must be a positive multiple of 4")
        self.n = n
        self.modulus = cyclotomic(n)
        self.degree = totient(n)
        self._cache: dict = {}
        # integer coefficient vectors of zeta**m reduced mod Phi_N, 0 <= m < N
        d, phi = self.degree, self.modulus.coeffs
        row = [1] + [0] * (d - 1)
        table = []
        for _ in range(n):
            table.append(row)
            top = row[-1]
            row = [0] + row[:-1]
            if top:
                row = [c - top * int(phi[i]) for i, c in enumerate(row)]
        self._powers = table
        self._traces = [
            moebius(n // gcd(m, n)) * d // totient(n // gcd(m, n)) for m in range(d)
        ]
        self._units = [k for k in range(1, n) if gcd(k, n) == 1]

    def __repr__(self):
        return f"CyclotomicField({self.n})"

    # -- elements ---------------------------------------------------------

    def reduce(self, p: Poly) -> Poly:
        return p % self.modulus if p.degree >= self.degree else p

    def const(self, c) -> Poly:
        return Poly((c,))

    def zeta(self, k: int) -> Poly:
        return self.reduce(Poly.monomial(k % self.n))

    def mul(self, a: Poly, b: Poly) -> Poly:
        return self.reduce(a * b)

    @property
    def i(self) -> Poly:
        return self.zeta(self.n // 4)

    def cos_pi(self, r) -> Poly:
        r = Fraction(r)
        k = r * self.n / 2
        if k.denominator != 1:
            raise ValueError(f"cos({r}*pi) is not in Q(zeta_{self.n})")
        k = int(k)
        return (self.zeta(k) + self.zeta(-k)) / 2

    def sin_pi(self, r) -> Poly:
        r = Fraction(r)
        k = r * self.n / 2
        if k.denominator != 1:
            raise ValueError(f"sin({r}*pi) is not in Q(zeta_{self.n})")
        k = int(k)
        # (z - 1/z) / (2i) = -i (z - 1/z) / 2
        return self.mul(self.zeta(3 * self.n // 4), self.zeta(k) - self.zeta(-k)) / 2

    def sqrt(self, n: int) -> Poly:
        """Positive square root of the integer ``n``."""
        if self.n % sqrt_conductor(n):
            raise ValueError(f"sqrt({n}) is not in Q(zeta_{self.n})")
        f, s = squarefree_decomposition(n)
        out = self.const(f)
        for p, _ in factorize(s):
            out = self.mul(out, self._sqrt_prime(p))
        return out

    def _sqrt_prime(self, p: int) -> Poly:
        if p == 2:
            k = self.n // 8
            return self.zeta(k) + self.zeta(-k)
        step = self.n // p
        g = Poly(())
        for a in range(1, p):
            g = g + self.zeta(a * step) * _legendre(a, p)
        if p % 4 == 1:
            return g
        return self.mul(self.zeta(3 * self.n // 4), g)

    # -- evaluation -------------------------------------------------------

    def numeric(self, e: Poly, bits: int):
        """Complex value of ``e`` at ``bits`` of working precision."""
        with mpmath.workprec(bits + 16):
            z = mpmath.expjpi(mpmath.mpf(2) / self.n)
            acc = mpmath.mpc(0)
            for c in reversed(e.coeffs):
                c = Fraction(c)
                acc = acc * z + mpmath.mpf(c.numerator) / c.denominator
            return acc

    def mult_matrix(self, e: Poly) -> Matrix:
        """Matrix of ``y -> e*y`` on the power basis ``1, zeta, ...``."""
        d = self.degree
        phi = self.modulus.coeffs
        col = [Fraction(e[i]) for i in range(d)]
        cols = [col]
        for _ in range(d - 1):
            top = col[-1]
            col = [Fraction(0)] + col[:-1]
            if top:
                col = [c - top * phi[i] for i, c in enumerate(col)]
            cols.append(col)
        return Matrix([[cols[j][i] for j in range(d)] for i in range(d)])

    def _int_vector(self, e: Poly) -> tuple[list[int], int]:
        cs = [Fraction(e[i]) for i in range(self.degree)]
        den = lcm(*(c.denominator for c in cs))
        return [int(c * den) for c in cs], den

    def _reduce_vec(self, v: list[int]) -> list[int]:
        d = self.degree
        out = v[:d] + [0] * (d - len(v[:d]))
        for m in range(d, len(v)):
            c = v[m]
            if c:
                for i, r in enumerate(self._powers[m]):
                    if r:
                        out[i] += c * r
        return out

    def _conjugate_vec(self, v: list[int], k: int) -> tuple:
        out = [0] * self.degree
        n = self.n
        for j, c in enumerate(v):
            if c:
                for i, r in enumerate(self._powers[j * k % n]):
                    if r:
                        out[i] += c * r
        return tuple(out)

    def conjugate_count(self, e: Poly) -> int:
        """``[Q(e):Q]``, the number of distinct images of ``e`` under the Galois group."""
        v, _ = self._int_vector(e)
        return len({self._conjugate_vec(v, k) for k in self._units})

    def minpoly(self, e: Poly, max_degree: int | None = None) -> Poly:
        """Primitive integer minimal polynomial of ``e``."""
        key = e.coeffs
        hit = self._cache.get(key)
        if hit is None:
            hit = self._minpoly(e)
            self._cache[key] = hit
        if max_degree is not None and hit.degree > max_degree:
            raise DegreeOverflow(hit.degree, max_degree)
        return hit

    def _minpoly(self, e: Poly) -> Poly:
        if e.degree <= 0:
            c = Fraction(e[0])
            return Poly((-c.numerator, c.denominator))
        v, den = self._int_vector(e)
        deg = len({self._conjugate_vec(v, k) for k in self._units})
        # power sums over the distinct conjugates: Tr(e**j) * D / phi(N)
        sums = []
        acc, scale = v, den
        for j in range(1, deg + 1):
            if j > 1:
                prod = [0] * (2 * self.degree - 1)
                for a, x in enumerate(acc):
                    if x:
                        for b, y in enumerate(v):
                            if y:
                                prod[a + b] += x * y
                acc = self._reduce_vec(prod)
                scale *= den
            tr = sum(x * t for x, t in zip(acc, self._traces))
            sums.append(Fraction(tr * deg, scale * self.degree))
        # Newton: k e_k = sum_{i=1..k} (-1)**(i-1) e_{k-i} p_i
        el = [Fraction(1)]
        for k in range(1, deg + 1):
            t = Fraction(0)
            for i in range(1, k + 1):
                t += el[k - i] * sums[i - 1] if i % 2 else -el[k - i] * sums[i - 1]
            el.append(t / k)
        coeffs = [el[deg - i] * (-1 if (deg - i) % 2 else 1) for i in range(deg + 1)]
        return primitive(Poly(coeffs))

    def minpoly_via_charpoly(self, e: Poly) -> Poly:
        """Same polynomial from the squarefree part of ``charpoly(mult_matrix(e))``."""
        if e.degree <= 0:
            c = Fraction(e[0])
            return Poly((-c.numerator, c.denominator))
        return squarefree_part(charpoly(self.mult_matrix(e)))

    def to_real(self, e: Poly, max_degree: int | None = None) -> AlgebraicReal:
        """``e`` (which must be real) as an AlgebraicReal with minimal annihilator."""
        if e.degree <= 0:
            return AlgebraicReal.from_rational(e[0])
        ann = self.minpoly(e, max_degree)
        if ann.degree == 1:
            return AlgebraicReal.from_rational(Fraction(-ann[0], ann[1]))
        scale = 1 + sum(abs(Fraction(c)) for c in e.coeffs)
        bits = precision_bits()
        while True:
            v = self.numeric(e, bits)
            if abs(v.imag) > scale * mpmath.mpf(2) ** (16 - bits):
                raise ValueError("element is not real")
            mid = mpf_to_fraction(v.real)
            rad = Fraction(scale) / 2 ** (bits - 16)
            ivs = sturm_isolate(ann, Interval(mid - rad, mid + rad))
            if len(ivs) == 1:
                return AlgebraicReal(ann, ivs[0], True, check=False)
            bits *= 2
