from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from rotorder.errors import LostRoot, NonExactDivision, NotSquarefree
from rotorder.poly import (
    Interval,
    Poly,
    content_primitive,
    count_roots_closed,
    div_exact,
    gcd_poly,
    parse_poly,
    refine,
    sign_at,
    squarefree_part,
    sturm_isolate,
    sturm_sequence,
)
from rotorder.trigpoly import chebyshev_T, psi

x = Poly.x()

small_ints = st.integers(-100, 100)
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def polys(coeff=rationals, max_deg=6):
    return st.lists(coeff, min_size=1, max_size=max_deg + 1).map(Poly)


def test_ring_examples():
    assert (x - 1) * (x + 1) == x * x - 1
    p = Poly((3, 0, 2))
    assert p + Poly() == p
    assert (x + 1) * 2 == Poly((2, 2))


def test_zero_and_degree():
    assert Poly().degree == -1
    assert Poly((0, 0)).coeffs == ()
    assert Poly((Fraction(2, 4),)).coeffs == (Fraction(1, 2),)


def test_div_exact_examples():
    assert div_exact(x * x - 1, x - 1) == x + 1
    with pytest.raises(NonExactDivision):
        div_exact(x * x + 1, x - 1)
    # T2 - T1 = 2x^2 - x - 1 = 2 (x - 1)(x + 1/2)
    t = chebyshev_T(2) - chebyshev_T(1)
    assert t == Poly((-1, -1, 2))
    assert div_exact(t, (x - 1) * 2) == x + Fraction(1, 2)


def test_content_primitive_examples():
    assert content_primitive(Poly((3, Fraction(3, 2)))) == (Fraction(3, 2), x + 2)
    assert content_primitive(Poly((Fraction(-1, 4), Fraction(-1, 2), 1))) == (
        Fraction(1, 4),
        Poly((-1, -2, 4)),
    )
    assert content_primitive(Poly((7,))) == (7, Poly((1,)))
    with pytest.raises(ValueError):
        content_primitive(Poly())


def test_gcd_examples():
    assert gcd_poly(x * x - 1, x - 1) == x - 1
    assert gcd_poly(x * x + 1, x * x - 1) == Poly((1,))
    assert gcd_poly((psi(5) * psi(3)), psi(5)) == psi(5)


def test_text_format_roundtrip():
    p = Poly((Fraction(-1, 4), Fraction(-1, 2), 1))
    assert p.to_text() == "-1/4 -1/2 1"
    assert parse_poly("-1/4 -1/2 1") == p
    assert parse_poly("0") == Poly()
    with pytest.raises(ValueError):
        parse_poly("1 x")


@given(polys(), polys())
def test_ring_axioms(a, b):
    assert a + b == b + a
    assert a * b == b * a
    if a and b:
        assert (a * b).degree == a.degree + b.degree


@given(polys(), polys())
def test_div_exact_roundtrip(a, b):
    if b:
        assert div_exact(a * b, b) == a


@given(polys(), polys())
def test_divmod_identity(a, b):
    if b:
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


@given(
    st.lists(small_ints, min_size=2, max_size=13),
    st.lists(small_ints, min_size=2, max_size=13),
)
def test_product_of_primitives_is_primitive(fa, fb):
    fa, fb = Poly(fa), Poly(fb)
    if fa.degree < 1 or fb.degree < 1:
        return
    _, f = content_primitive(fa)
    _, g = content_primitive(fb)
    c, _ = content_primitive(f * g)
    assert c == 1


@given(polys(max_deg=5), polys(max_deg=5))
def test_gauss_lemma_factors(a, b):
    # factors over Q rewritten as content * primitive multiply back over Z
    if a.degree < 1 or b.degree < 1:
        return
    ca, fa = content_primitive(a)
    cb, fb = content_primitive(b)
    cp, fp = content_primitive(a * b)
    assert fa * fb == fp
    assert ca * cb == cp


def test_sturm_isolate_examples():
    ivs = sturm_isolate(x * x - 2, Interval(-2, 2))
    assert len(ivs) == 2
    assert ivs[0].hi < ivs[1].lo
    assert all(sign_at(x * x - 2, iv.lo) * sign_at(x * x - 2, iv.hi) < 0 for iv in ivs)
    assert sturm_isolate(x * x + 1, Interval(-10, 10)) == []
    p = Poly((-1, 2, 4))
    ivs = sturm_isolate(p, Interval(-1, 1))
    with mpmath.workprec(100):
        targets = [mpmath.cos(4 * mpmath.pi / 5), mpmath.cos(2 * mpmath.pi / 5)]
    for iv, t in zip(ivs, targets):
        r = refine(p, iv, Fraction(1, 10 ** 13))
        assert abs(float(r.mid) - float(t)) < 1e-12


def test_sturm_isolate_rejects_repeated_roots():
    with pytest.raises(NotSquarefree):
        sturm_isolate((x - 1) ** 2, Interval(0, 2))


def test_endpoint_roots_come_back_as_points():
    p = (x - 1) * (x + 1) * (x * x - 2)
    ivs = sturm_isolate(p, Interval(-1, 1))
    assert ivs == [Interval(-1, -1), Interval(1, 1)]
    ivs = sturm_isolate(p, Interval(-2, 2))
    assert len(ivs) == 4
    assert any(iv.lo <= 1 <= iv.hi for iv in ivs) and any(iv.lo <= -1 <= iv.hi for iv in ivs)


def test_refine_examples():
    r = refine(x * x - 2, Interval(1, 2), Fraction(1, 2 ** 20))
    assert r.width <= Fraction(1, 2 ** 20)
    assert r.lo * r.lo < 2 < r.hi * r.hi
    r = refine(x - 1, Interval(0, 2), Fraction(1, 1000))
    assert 1 in r
    p = Poly((-1, 2, 4))
    (iv,) = [i for i in sturm_isolate(p, Interval(0, 1))]
    r = refine(p, iv, Fraction(1, 2 ** 64))
    with mpmath.workprec(128):
        c = mpmath.cos(2 * mpmath.pi / 5)
        assert r.lo <= mpmath_fraction(c) <= r.hi


def mpmath_fraction(v):
    from rotorder.numeric import mpf_to_fraction

    return mpf_to_fraction(v)


def test_refine_lost_root():
    with pytest.raises(LostRoot):
        refine(x * x - 2, Interval(2, 3), Fraction(1, 8))


@given(st.lists(st.fractions(min_value=-8, max_value=8, max_denominator=6), min_size=1, max_size=6, unique=True))
def test_isolation_soundness(roots):
    p = Poly.from_roots(roots) * (x * x + 1)
    box = Interval(-10, 10)
    ivs = sturm_isolate(p, box)
    assert len(ivs) == len(roots)
    chain = sturm_sequence(p)
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi < b.lo
    for iv in ivs:
        assert count_roots_closed(p, iv, chain) == 1
        if not iv.is_point:
            assert sign_at(p, iv.lo) * sign_at(p, iv.hi) < 0
    assert sum(count_roots_closed(p, iv, chain) for iv in ivs) == count_roots_closed(p, box, chain)


@given(polys(max_deg=4), st.integers(1, 3))
def test_squarefree_part(a, k):
    if a.degree < 1:
        return
    s = squarefree_part(a ** k)
    assert s == squarefree_part(a)
    assert gcd_poly(s, s.derivative()).degree == 0
