"""Companion-matrix calculus for real algebraic numbers.

An algebraic real is carried as a primitive squarefree integer annihilator
together with a rational interval holding exactly one of its real roots.
Sums and products come from characteristic polynomials of Kronecker sums and
products of companion matrices; a rational shift or scaling acts on a single
companion matrix and therefore preserves minimality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

from .angle import RationalAngle
from .errors import IsolationFailure
from .numeric import cos_pi, mpf_to_fraction, precision_bits
from .poly import (
    Interval,
    Poly,
    content_primitive,
    count_roots,
    count_roots_closed,
    gcd_poly,
    primitive,
    refine,
    sign_at,
    squarefree_part,
    sturm_isolate,
    sturm_sequence,
)
from .trigpoly import psi


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Matrix:
    """Square matrix over Q stored as a list of rows."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = [[Fraction(v) for v in row] for row in rows]
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: Matrix) -> Matrix:
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            cols = list(zip(*other.rows))
            return Matrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])
        k = Fraction(other)
        return Matrix([[k * a for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __repr__(self):
        return f"Matrix({[[str(v) for v in r] for r in self.rows]})"


def companion(m: Poly) -> Matrix:
    """Companion matrix: ones on the subdiagonal, ``-c_k`` down the last column."""
    if m.degree < 1:
        raise ValueError("companion matrix needs a nonconstant polynomial")
    if not m.is_monic():
        raise ValueError(f"companion matrix needs a monic polynomial, got {m}")
    d = m.degree
    rows = [[0] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i in range(d):
        rows[i][d - 1] = -m[i]
    return Matrix(rows)


def kron_prod(a: Matrix, b: Matrix) -> Matrix:
    n, m = a.n, b.n
    rows = [[0] * (n * m) for _ in range(n * m)]
    for i in range(n):
        for j in range(n):
            aij = a.rows[i][j]
            if not aij:
                continue
            for k in range(m):
                for l in range(m):
                    rows[i * m + k][j * m + l] = aij * b.rows[k][l]
    return Matrix(rows)


def kron_sum(a: Matrix, b: Matrix) -> Matrix:
    """``A (x) I + I (x) B``; its eigenvalues are all pairwise sums."""
    return kron_prod(a, Matrix.identity(b.n)) + kron_prod(Matrix.identity(a.n), b)


def charpoly(mat: Matrix) -> Poly:
    """``det(x*I - M)`` via similarity reduction to upper Hessenberg form."""
    n = mat.n
    h = [row[:] for row in mat.rows]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        p = h[j + 1][j]
        for i in range(j + 2, n):
            if not h[i][j]:
                continue
            f = h[i][j] / p
            ri, rp = h[i], h[j + 1]
            for k in range(j, n):
                if rp[k]:
                    ri[k] -= f * rp[k]
            for row in h:
                if row[i]:
                    row[j + 1] += f * row[i]

    x = Poly.x()
    polys = [Poly((1,))]
    for m in range(1, n + 1):
        t = (x - h[m - 1][m - 1]) * polys[m - 1]
        sub = 1
        for i in range(m - 1, 0, -1):
            sub *= h[i][i - 1]
            if not sub:
                break
            c = h[i - 1][m - 1]
            if c:
                t = t - polys[i - 1] * (c * sub)
        polys.append(t)
    return polys[n]


# ---------------------------------------------------------------------------
# algebraic reals
# ---------------------------------------------------------------------------

class AlgebraicReal:
    """A real root of an integer polynomial, pinned by an isolating interval.

    ``minimal`` records whether the annihilator is known to be irreducible;
    it is a promise made by the constructor that produced the value, never
    inferred.
    """

    __slots__ = ("annihilator", "interval", "minimal")

    def __init__(self, annihilator: Poly, interval: Interval, minimal: bool = False, *, check=True):
        if annihilator.degree < 1:
            raise ValueError("annihilator must be nonconstant")
        if check:
            if not annihilator.is_integral() or annihilator.lc < 0:
                raise ValueError("annihilator must be an integer polynomial with positive lead")
            if content_primitive(annihilator)[0] != 1:
                raise ValueError("annihilator must be primitive")
            if __debug__:
                n = count_roots_closed(annihilator, interval)
                assert n == 1, f"{interval} holds {n} roots of {annihilator}"
                if not interval.is_point:
                    assert sign_at(annihilator, interval.lo) != 0
                    assert sign_at(annihilator, interval.hi) != 0
        self.annihilator = annihilator
        self.interval = interval
        self.minimal = minimal

    @classmethod
    def from_rational(cls, q) -> AlgebraicReal:
        q = Fraction(q)
        ann = Poly((-q.numerator, q.denominator))
        return cls(ann, Interval(q, q), True, check=False)

    @classmethod
    def from_enclosure(cls, ann: Poly, lo, hi, minimal=False) -> AlgebraicReal:
        """Root of ``ann`` known to lie in ``[lo, hi]``; raises if not unique there."""
        ann = squarefree_part(ann)
        ivs = sturm_isolate(ann, Interval(lo, hi))
        if len(ivs) != 1:
            raise IsolationFailure(f"[{lo}, {hi}] holds {len(ivs)} roots of {ann}")
        return _maybe_rational(cls(ann, ivs[0], minimal, check=False))

    @property
    def degree(self) -> int:
        return self.annihilator.degree

    @property
    def is_rational(self) -> bool:
        return self.interval.is_point or self.degree == 1

    def as_fraction(self) -> Fraction:
        if self.interval.is_point:
            return self.interval.lo
        if self.degree == 1:
            return Fraction(-self.annihilator[0], self.annihilator[1])
        raise ValueError(f"{self!r} is not known to be rational")

    def refine(self, width) -> AlgebraicReal:
        if self.interval.width <= width:
            return self
        iv = refine(self.annihilator, self.interval, width)
        return AlgebraicReal(self.annihilator, iv, self.minimal, check=False)

    def approx(self, bits: int | None = None):
        bits = bits or precision_bits()
        a = self.refine(Fraction(1, 2 ** (bits + 2)))
        with mpmath.workprec(bits):
            m = a.interval.mid
            return mpmath.mpf(m.numerator) / m.denominator

    def __float__(self):
        return float(self.refine(Fraction(1, 2 ** 60)).interval.mid)

    def sign(self) -> int:
        iv = self.interval
        if iv.is_point:
            return (iv.lo > 0) - (iv.lo < 0)
        if sign_at(self.annihilator, 0) == 0 and 0 in iv:
            return 0
        a = self
        while a.interval.lo < 0 < a.interval.hi:
            a = a.refine(a.interval.width / 2)
        if a.interval.is_point:
            return (a.interval.lo > 0) - (a.interval.lo < 0)
        return 1 if a.interval.lo >= 0 else -1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgebraicReal.from_rational(other)
        if not isinstance(other, AlgebraicReal):
            return NotImplemented
        lo = max(self.interval.lo, other.interval.lo)
        hi = min(self.interval.hi, other.interval.hi)
        if lo > hi:
            return False
        g = gcd_poly(self.annihilator, other.annihilator)
        if g.degree < 1:
            return False
        return count_roots_closed(g, Interval(lo, hi)) > 0

    __hash__ = None

    def __neg__(self):
        return scale_by_rational(-1, self)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return shift_by_rational(other, self)
        return alg_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale_by_rational(other, self)
        return alg_mul(self, other)

    __rmul__ = __mul__

    def __repr__(self):
        return f"AlgebraicReal({self.annihilator.to_text()!r}, {self.interval})"

    def __str__(self):
        if self.is_rational:
            return str(self.as_fraction())
        return f"root of {self.annihilator} in {self.interval} (~{float(self):.12g})"


def _maybe_rational(a: AlgebraicReal) -> AlgebraicReal:
    """Collapse ``a`` onto a linear annihilator when its root is rational.

    A rational root ``r/s`` of a primitive integer polynomial has ``s | lc``;
    once the interval is narrower than ``1/(2*lc**2)`` the best approximation
    with denominator ``<= lc`` is the only candidate.
    """
    if a.degree == 1:
        return a
    if a.interval.is_point:
        return AlgebraicReal.from_rational(a.interval.lo)
    lead = a.annihilator.lc
    b = a.refine(Fraction(1, 4 * lead * lead))
    if b.interval.is_point:
        return AlgebraicReal.from_rational(b.interval.lo)
    cand = b.interval.mid.limit_denominator(lead)
    if cand in b.interval and sign_at(a.annihilator, cand) == 0:
        return AlgebraicReal.from_rational(cand)
    return a


def _monic_companion(a: AlgebraicReal) -> Matrix:
    return companion(a.annihilator.monic())


def shift_by_rational(q, a: AlgebraicReal) -> AlgebraicReal:
    """``a + q``; keeps degree and minimality.

    The annihilator is ``p(x - q)``, which equals ``charpoly(q*I + M_a)`` up
    to the primitive normalization (see :func:`shift_via_companion`).
    """
    q = Fraction(q)
    if not q:
        return a
    ann = primitive(a.annihilator.shift(-q))
    iv = Interval(a.interval.lo + q, a.interval.hi + q)
    return AlgebraicReal(ann, iv, a.minimal, check=False)


def scale_by_rational(q, a: AlgebraicReal) -> AlgebraicReal:
    """``q * a`` for nonzero ``q``; annihilator ``p(x/q)``, i.e. ``charpoly(q*M_a)``."""
    q = Fraction(q)
    if not q:
        raise ValueError("scale factor must be nonzero")
    if q == 1:
        return a
    ann = primitive(a.annihilator.scale_arg(1 / q))
    lo, hi = a.interval.lo * q, a.interval.hi * q
    if q < 0:
        lo, hi = hi, lo
    return AlgebraicReal(ann, Interval(lo, hi), a.minimal, check=False)


def shift_via_companion(q, a: AlgebraicReal) -> Poly:
    """Annihilator of ``a + q`` as ``charpoly(M_a + q*I)``, made primitive."""
    m = _monic_companion(a)
    return primitive(charpoly(m + Matrix.identity(m.n) * Fraction(q)))


def scale_via_companion(q, a: AlgebraicReal) -> Poly:
    """Annihilator of ``q * a`` as ``charpoly(q*M_a)``, made primitive."""
    return primitive(charpoly(_monic_companion(a) * Fraction(q)))


def _isolate_image(ann: Poly, enclose) -> Interval:
    # bisect operands to 2**-64 first, then double the bit target per retry
    bits = 64
    while bits <= 1024:
        box = enclose(Fraction(1, 2 ** bits))
        ivs = sturm_isolate(ann, box)
        if len(ivs) == 1:
            return ivs[0]
        if not ivs:
            raise IsolationFailure(f"enclosure {box} misses every root of {ann}")
        bits *= 2
    raise IsolationFailure(f"could not separate roots of {ann} at 2**-1024")


def _iv_add(x: Interval, y: Interval) -> Interval:
    return Interval(x.lo + y.lo, x.hi + y.hi)


def _iv_mul(x: Interval, y: Interval) -> Interval:
    ps = (x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi)
    return Interval(min(ps), max(ps))


def _combine(a, b, matrix_op, iv_op) -> AlgebraicReal:
    ann = squarefree_part(charpoly(matrix_op(_monic_companion(a), _monic_companion(b))))

    def enclose(w):
        return iv_op(a.refine(w).interval, b.refine(w).interval)

    iv = _isolate_image(ann, enclose)
    return _maybe_rational(AlgebraicReal(ann, iv, False, check=False))


def alg_add(a: AlgebraicReal, b: AlgebraicReal) -> AlgebraicReal:
    """``a + b``; annihilator from the Kronecker sum, not necessarily minimal."""
    if b.is_rational:
        return shift_by_rational(b.as_fraction(), a)
    if a.is_rational:
        return shift_by_rational(a.as_fraction(), b)
    return _combine(a, b, kron_sum, _iv_add)


def alg_mul(a: AlgebraicReal, b: AlgebraicReal) -> AlgebraicReal:
    """``a * b``; annihilator from the Kronecker product, not necessarily minimal."""
    for x, y in ((a, b), (b, a)):
        if y.is_rational:
            q = y.as_fraction()
            return scale_by_rational(q, x) if q else AlgebraicReal.from_rational(0)
    return _combine(a, b, kron_prod, _iv_mul)


def _matrix_poly(f: Poly, m: Matrix) -> Matrix:
    out = Matrix.identity(m.n) * 0
    ident = Matrix.identity(m.n)
    for c in reversed(f.coeffs):
        out = out * m + ident * c
    return out


def _iv_poly(f: Poly, x: Interval) -> Interval:
    acc = Interval(f.lc, f.lc)
    for c in reversed(f.coeffs[:-1]):
        acc = _iv_mul(acc, x)
        acc = Interval(acc.lo + c, acc.hi + c)
    return acc


def alg_poly(f: Poly, a: AlgebraicReal) -> AlgebraicReal:
    """``f(a)`` for a rational polynomial ``f`` via ``charpoly(f(M_a))``.

    ``f(M_a)`` acts on ``Q(a)``; its characteristic polynomial is a power of
    the minimal polynomial of ``f(a)`` when ``a``'s annihilator is minimal, so
    the squarefree part is then minimal too.
    """
    if a.is_rational or f.degree < 1:
        return AlgebraicReal.from_rational(f(a.as_fraction()) if a.is_rational else f[0])
    ann = squarefree_part(charpoly(_matrix_poly(f, _monic_companion(a))))

    def enclose(w):
        return _iv_poly(f, a.refine(w).interval)

    iv = _isolate_image(ann, enclose)
    return _maybe_rational(AlgebraicReal(ann, iv, a.minimal, check=False))


# ---------------------------------------------------------------------------
# cosines and sines of rational angles
# ---------------------------------------------------------------------------

def psi_index(angle: RationalAngle) -> int:
    """``m`` with ``cos(angle) = cos(2*pi*j/m)``, ``gcd(j, m) = 1``."""
    r = angle.num % (2 * angle.den)
    return 2 * angle.den // gcd(r, 2 * angle.den)


@lru_cache(maxsize=4096)
def _psi_chain(m: int):
    ann = primitive(psi(m))
    return ann, sturm_sequence(ann)


def cos_of(angle: RationalAngle) -> AlgebraicReal:
    """``cos(angle)`` as a root of ``psi(m)``, pinned by a numeric enclosure."""
    ann, chain = _psi_chain(psi_index(angle))
    if ann.degree == 1:
        return AlgebraicReal.from_rational(Fraction(-ann[0], ann[1]))
    bits = precision_bits()
    while True:
        v = mpf_to_fraction(cos_pi(angle.fraction, bits + 8))
        rad = Fraction(1, 2 ** (bits - 16))
        lo, hi = v - rad, v + rad
        if sign_at(ann, lo) and sign_at(ann, hi) and count_roots(chain, lo, hi) == 1:
            return AlgebraicReal(ann, Interval(lo, hi), True, check=False)
        bits *= 2


def sin_of(angle: RationalAngle) -> AlgebraicReal:
    return cos_of(RationalAngle(1, 2) - angle)
