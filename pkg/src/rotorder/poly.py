"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored ascending (``c0, c1, ..., cd``).  Integral values are
kept as plain ``int`` and everything else as a reduced ``Fraction``, so
integer-only work (Chebyshev, cyclotomic and eta families, Sturm chains)
never pays for fraction normalisation.

The module also carries the real-root machinery built on top of the
arithmetic: Sturm sequences, isolation on a rational box and bisection
refinement with exact sign evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational

from .errors import LostRoot, NonExactDivision, NotSquarefree


def _norm(c):
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, bool):
        raise TypeError("booleans are not polynomial coefficients")
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"inexact coefficient {c!r}")


def _div(c, d):
    if type(c) is int and type(d) is int and c % d == 0:
        return c // d
    return _norm(Fraction(c) / d)


class Poly:
    """Immutable polynomial over Q; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        return cls((0,) * k + (c,))

    @classmethod
    def from_roots(cls, roots) -> Poly:
        p = cls((1,))
        for r in roots:
            p = p * cls((-_norm(r), 1))
        return p

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self.coeffs)

    def is_monic(self) -> bool:
        return self.lc == 1

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _norm(other)
            return Poly(c * a for a in self.coeffs) if c else Poly()
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = Poly((1,)), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, c):
        c = _norm(c)
        return Poly(_div(a, c) for a in self.coeffs)

    def __divmod__(self, other: Poly):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        if len(r) <= db:
            return Poly(), self
        bc, lead = other.coeffs, other.lc
        q = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if not c:
                continue
            if lead != 1:
                c = _div(c, lead)
            q[i - db] = c
            base = i - db
            for j in range(db):
                if bc[j]:
                    r[base + j] -= c * bc[j]
            r[i] = 0
        return Poly(q), Poly(r[:db])

    def __mod__(self, other: Poly):
        return divmod(self, other)[1]

    def __floordiv__(self, other: Poly):
        return divmod(self, other)[0]

    # -- evaluation and transforms ---------------------------------------

    def __call__(self, v):
        acc = 0 * v
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> Poly:
        if not self:
            raise ValueError("zero polynomial has no monic form")
        return self / self.lc

    def shift(self, q) -> Poly:
        """Return ``p(x + q)`` (Taylor shift via Horner)."""
        q = _norm(q)
        out = Poly()
        lin = Poly((q, 1))
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def scale_arg(self, q) -> Poly:
        """Return ``p(q*x)``."""
        q = _norm(q)
        out, f = [], 1
        for c in self.coeffs:
            out.append(c * f)
            f *= q
        return Poly(out)

    def reverse_parity(self) -> Poly:
        """Return ``p(-x)``."""
        return Poly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    # -- printing ----------------------------------------------------------

    def to_text(self) -> str:
        """Ascending whitespace-separated coefficient list, e.g. ``-1/4 -1/2 1``."""
        if not self.coeffs:
            return "0"
        return " ".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"Poly({self.to_text()!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if a == 1 and mono:
                body = mono
            elif mono:
                body = f"{a}*{mono}"
            else:
                body = str(a)
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def parse_poly(text: str) -> Poly:
    """Inverse of :meth:`Poly.to_text`."""
    parts = text.split()
    if not parts:
        raise ValueError("empty polynomial text")
    try:
        return Poly(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad polynomial text {text!r}: {exc}") from None


# ---------------------------------------------------------------------------
# exact division, content and gcd
# ---------------------------------------------------------------------------

def div_exact(a: Poly, b: Poly) -> Poly:
    q, r = divmod(a, b)
    if r:
        raise NonExactDivision(f"{a} is not divisible by {b}")
    return q


def content_primitive(a: Poly) -> tuple[Fraction, Poly]:
    """Split ``a = alpha * f`` with ``f`` primitive over Z and ``lc(f) > 0``."""
    if not a:
        raise ValueError("zero polynomial has no primitive part")
    den = lcm(*(Fraction(c).denominator for c in a.coeffs))
    ints = [int(c * den) for c in a.coeffs]
    g = gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, den), Poly(c // g for c in ints)


def primitive(a: Poly) -> Poly:
    return content_primitive(a)[1]


def _positive_primitive(a: Poly) -> Poly:
    # like primitive() but never flips sign; Sturm chains depend on it
    den = lcm(*(Fraction(c).denominator for c in a.coeffs))
    ints = [int(c * den) for c in a.coeffs]
    g = gcd(*ints)
    return Poly(c // g for c in ints)


def gcd_poly(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (Euclid on primitive remainders)."""
    if not a and not b:
        raise ValueError("gcd of two zero polynomials")
    if not b:
        return a.monic()
    if not a:
        return b.monic()
    a, b = _positive_primitive(a), _positive_primitive(b)
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = a % b
        a, b = b, (_positive_primitive(r) if r else r)
    return a.monic()


def squarefree_part(a: Poly) -> Poly:
    """``a / gcd(a, a')``, returned primitive with positive leading coefficient."""
    if a.degree <= 0:
        return primitive(a) if a else a
    g = gcd_poly(a, a.derivative())
    return primitive(div_exact(a, g))


def cauchy_bound(a: Poly) -> Fraction:
    """All complex roots of ``a`` satisfy ``|z| <= bound``."""
    m = a.monic()
    return 1 + max((abs(Fraction(c)) for c in m.coeffs[:-1]), default=Fraction(0))


# ---------------------------------------------------------------------------
# real root isolation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    """Closed rational interval ``[lo, hi]``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, v) -> bool:
        return self.lo <= v <= self.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


def _sign_int(cs, num: int, den: int) -> int:
    """Sign of the integer polynomial ``cs`` at ``num/den`` (``den > 0``)."""
    if not cs:
        return 0
    acc = cs[-1]
    qp = 1
    for c in reversed(cs[:-1]):
        qp *= den
        acc = acc * num + c * qp
    return (acc > 0) - (acc < 0)


def sign_at(p: Poly, v) -> int:
    v = Fraction(v)
    if not p:
        return 0
    if not p.is_integral():
        p = _positive_primitive(p)
    return _sign_int(p.coeffs, v.numerator, v.denominator)


def sturm_sequence(p: Poly) -> list[Poly]:
    """Sturm chain of ``p`` with every member scaled by a positive constant."""
    chain = [_positive_primitive(p)]
    d = p.derivative()
    if not d:
        return chain
    chain.append(_positive_primitive(d))
    while chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if not r:
            break
        chain.append(-_positive_primitive(r))
    return chain


def _variations(chain, v: Fraction) -> int:
    n, d = v.numerator, v.denominator
    last = 0
    count = 0
    for f in chain:
        s = _sign_int(f.coeffs, n, d)
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def count_roots(chain, lo, hi) -> int:
    """Distinct real roots in the half-open interval ``(lo, hi]``."""
    return _variations(chain, Fraction(lo)) - _variations(chain, Fraction(hi))


def count_roots_closed(p: Poly, iv: Interval, chain=None) -> int:
    chain = chain or sturm_sequence(p)
    n = count_roots(chain, iv.lo, iv.hi) if not iv.is_point else 0
    return n + (sign_at(chain[0], iv.lo) == 0)


def _require_squarefree(p: Poly) -> None:
    if p.degree > 0 and gcd_poly(p, p.derivative()).degree > 0:
        raise NotSquarefree(f"{p} has repeated roots")


def sturm_isolate(p: Poly, box: Interval) -> list[Interval]:
    """Disjoint intervals in ``box``, each holding exactly one real root of ``p``.

    Intervals of positive width have endpoints that are not roots; a rational
    root hit exactly by the search comes back as a degenerate interval.
    """
    if not p:
        raise ValueError("zero polynomial has no isolated roots")
    if p.degree == 0:
        return []
    _require_squarefree(p)
    chain = sturm_sequence(p)
    f = chain[0]
    lo, hi = box.lo, box.hi
    if lo == hi:
        return [box] if sign_at(f, lo) == 0 else []

    out: list[Interval] = []
    lo_root = sign_at(f, lo) == 0
    hi_root = sign_at(f, hi) == 0
    if lo_root:
        out.append(Interval(lo, lo))
    if hi_root:
        out.append(Interval(hi, hi))
    inner = count_roots(chain, lo, hi) - hi_root
    if inner == 0:
        return sorted(out, key=lambda iv: iv.lo)

    if lo_root:
        a = (lo + hi) / 2
        while sign_at(f, a) == 0 or count_roots(chain, lo, a) != 0:
            a = (lo + a) / 2
        lo = a
    if hi_root:
        b = (lo + hi) / 2
        while sign_at(f, b) == 0 or count_roots(chain, b, hi) != 1:
            b = (b + hi) / 2
        hi = b

    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = count_roots(chain, a, b)
        if n == 0:
            continue
        if n == 1:
            out.append(Interval(a, b))
            continue
        m = (a + b) / 2
        while sign_at(f, m) == 0:
            m = (a + m) / 2
        stack.append((a, m))
        stack.append((m, b))
    out.sort(key=lambda iv: iv.lo)
    return _separate(f, out)


def _bisect_once(p: Poly, iv: Interval) -> Interval:
    m = iv.mid
    s = sign_at(p, m)
    if s == 0:
        return Interval(m, m)
    return Interval(iv.lo, m) if s != sign_at(p, iv.lo) else Interval(m, iv.hi)


def _separate(p: Poly, ivs: list[Interval]) -> list[Interval]:
    # neighbours from one bisection share a (non-root) endpoint; shrink apart
    ivs = list(ivs)
    for k in range(len(ivs) - 1):
        while ivs[k].hi >= ivs[k + 1].lo:
            ivs[k] = _bisect_once(p, ivs[k])
            ivs[k + 1] = _bisect_once(p, ivs[k + 1])
    return ivs


def refine(p: Poly, iv: Interval, width) -> Interval:
    """Bisect ``iv`` (which isolates one simple root of ``p``) below ``width``."""
    width = Fraction(width)
    if iv.is_point:
        if sign_at(p, iv.lo) != 0:
            raise LostRoot(f"{iv.lo} is not a root of {p}")
        return iv
    lo, hi = iv.lo, iv.hi
    s_lo, s_hi = sign_at(p, lo), sign_at(p, hi)
    if s_lo == 0 or s_hi == 0 or s_lo == s_hi:
        raise LostRoot(f"no sign change of {p} on {iv}")
    while hi - lo > width:
        m = (lo + hi) / 2
        s = sign_at(p, m)
        if s == 0:
            return Interval(m, m)
        if s == s_lo:
            lo = m
        else:
            hi = m
    return Interval(lo, hi)
