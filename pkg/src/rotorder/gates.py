"""Gates as rotations: exact products, the H*T(phi) classifier, closures and word search.

A gate is an SO(3) rotation by a rational multiple of pi about an integer
axis.  Products are composed as unit quaternions (the SU(2) lift) inside a
cyclotomic field large enough to hold every half-angle cosine and sine and
every axis norm's square root, so the scalar part of any word is an exact
field element.  The rotation angle ``gamma`` of a product satisfies
``cos(gamma/2) = w`` and ``cos(gamma) = 2*w**2 - 1``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, lcm

from .algnum import (
    AlgebraicReal,
    alg_add,
    alg_mul,
    alg_poly,
    cos_of,
    scale_by_rational,
    shift_by_rational,
    sin_of,
)
from .angle import RationalAngle
from .angledec import AngleVerdict, RationalMultiple, eta_membership, theorem1_decide
from .cyclo import CyclotomicField, angle_conductor, sqrt_conductor
from .errors import CapExceeded, DegreeOverflow
from .poly import Interval, Poly, primitive, sturm_isolate


@dataclass(frozen=True)
class Gate:
    """Rotation by ``angle`` (SO(3), units of pi) about the integer ``axis``.

    The SU(2) lift is ``cos(angle/2) I - i sin(angle/2) (k . sigma)``.
    """

    name: str
    axis: tuple
    angle: RationalAngle

    def __post_init__(self):
        axis = tuple(self.axis)
        if len(axis) != 3 or any(isinstance(c, bool) or not isinstance(c, int) for c in axis):
            raise ValueError(f"gate {self.name!r}: axis must be three integers")
        if not any(axis):
            raise ValueError(f"gate {self.name!r}: axis must be nonzero")
        angle = self.angle
        if not isinstance(angle, RationalAngle):
            angle = RationalAngle.of(angle)
        object.__setattr__(self, "axis", axis)
        object.__setattr__(self, "angle", angle)

    @property
    def norm2(self) -> int:
        return sum(c * c for c in self.axis)

    def inverse(self) -> Gate:
        return Gate(self.name + "^-1", self.axis, -self.angle)


@dataclass(frozen=True)
class ProductVerdict:
    """``order`` is the exact SO(3) order, or ``None`` for infinite order."""

    cos_gamma: AlgebraicReal
    verdict: AngleVerdict
    order: int | None

    def __post_init__(self):
        if self.verdict.is_rational != (self.order is not None):
            raise ValueError("finite order must coincide with a rational angle")

    @property
    def finite(self) -> bool:
        return self.order is not None


# ---------------------------------------------------------------------------
# exact quaternions
# ---------------------------------------------------------------------------

def field_for(gates) -> CyclotomicField:
    """Smallest cyclotomic field holding every half-angle and axis norm root."""
    n = 4
    for g in gates:
        n = lcm(n, angle_conductor(g.angle.fraction / 2), sqrt_conductor(g.norm2))
    return CyclotomicField(n)


def quaternion(gate: Gate, field: CyclotomicField) -> tuple:
    h = gate.angle.fraction / 2
    w = field.cos_pi(h)
    s = field.sin_pi(h)
    # unit axis k/|k| = k*sqrt(n)/n
    unit = field.mul(s, field.sqrt(gate.norm2)) / gate.norm2
    return (w,) + tuple(unit * c for c in gate.axis)


def hamilton(field: CyclotomicField, p: tuple, q: tuple) -> tuple:
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    m = field.mul
    return (
        m(a1, a2) - m(b1, b2) - m(c1, c2) - m(d1, d2),
        m(a1, b2) + m(b1, a2) + m(c1, d2) - m(d1, c2),
        m(a1, c2) - m(b1, d2) + m(c1, a2) + m(d1, b2),
        m(a1, d2) + m(b1, c2) - m(c1, b2) + m(d1, a2),
    )


def _cos_gamma_element(field: CyclotomicField, w: Poly) -> Poly:
    return field.mul(w, w) * 2 - 1


# ---------------------------------------------------------------------------
# two-gate products
# ---------------------------------------------------------------------------

def axis_cosine(a: Gate, b: Gate) -> AlgebraicReal:
    """``k_a . k_b`` for the unit axes, as a root of ``s*x**2 - r**2``."""
    r = sum(x * y for x, y in zip(a.axis, b.axis))
    s = a.norm2 * b.norm2
    root = isqrt(s)
    if r == 0 or root * root == s:
        return AlgebraicReal.from_rational(Fraction(r, root))
    ann = primitive(Poly((-r * r, 0, s)))
    lo, hi = sturm_isolate(ann, Interval(-1, 1))
    return AlgebraicReal(ann, hi if r > 0 else lo, True, check=False)


def product_cos_gamma(a: Gate, b: Gate) -> AlgebraicReal:
    """``cos(gamma)`` for the rotation ``a*b`` (apply ``b`` first), minimal annihilator."""
    field = field_for((a, b))
    q = hamilton(field, quaternion(a, field), quaternion(b, field))
    return field.to_real(_cos_gamma_element(field, q[0]))


def product_cos_gamma_kron(a: Gate, b: Gate) -> AlgebraicReal:
    """Same value as :func:`product_cos_gamma` through the companion-matrix calculus.

    ``cos(gamma/2) = c_a c_b - s_a s_b (k_a . k_b)`` on half angles, then
    ``cos(gamma) = 2 w**2 - 1``.  The annihilator need not be minimal.
    """
    ha, hb = a.angle / 2, b.angle / 2
    cc = alg_mul(cos_of(ha), cos_of(hb))
    ss = alg_mul(alg_mul(sin_of(ha), sin_of(hb)), axis_cosine(a, b))
    w = alg_add(cc, scale_by_rational(-1, ss))
    return alg_poly(Poly((-1, 0, 2)), w)


def _verdict_from_cos(cos_gamma: AlgebraicReal) -> ProductVerdict:
    v = eta_membership(scale_by_rational(2, cos_gamma))
    order = v.angle.rotation_order() if v.is_rational else None
    return ProductVerdict(cos_gamma, v, order)


def product_order(a: Gate, b: Gate) -> ProductVerdict:
    """Decide whether the rotation ``a*b`` has finite order, and which."""
    return _verdict_from_cos(product_cos_gamma(a, b))


def hadamard() -> Gate:
    return Gate("H", (0, 1, 1), RationalAngle(1))


def phase_gate(phi: RationalAngle) -> Gate:
    """``T(phi) = diag(e^{-i phi}, e^{i phi})``: rotation by ``2*phi`` about z."""
    return Gate(f"T({phi})", (0, 0, 1), phi * 2)


def ht_classify(phi: RationalAngle) -> ProductVerdict:
    """Order of ``H*T(phi)``.

    ``cos(gamma) = -cos(phi)**2``, so ``gamma' = gamma + pi`` satisfies
    ``2*cos(gamma') = 1 + cos(2*phi)``, which is the perpendicular-axes
    quantity decided by :func:`theorem1_decide` at angle ``2*phi``.
    """
    v = theorem1_decide(phi * 2)
    cos_gamma = scale_by_rational(Fraction(-1, 2), shift_by_rational(1, cos_of(phi * 2)))
    if not v.is_rational:
        return ProductVerdict(cos_gamma, v, None)
    gamma = (v.half_angle - RationalAngle(1)).folded()
    return ProductVerdict(cos_gamma, RationalMultiple(gamma), gamma.rotation_order())


# ---------------------------------------------------------------------------
# finite closure
# ---------------------------------------------------------------------------

def rotation_matrix(gate: Gate) -> tuple:
    """Exact SO(3) matrix; needs the angle in ``{k*pi/2}`` and rational entries."""
    if not gate.angle.is_multiple_of_half_pi():
        raise ValueError(f"gate {gate.name!r}: closure needs angles in k*pi/2")
    t = gate.angle.mod_2pi().fraction
    c, s = {0: (1, 0), Fraction(1, 2): (0, 1), 1: (-1, 0), Fraction(3, 2): (0, -1)}[t]
    n = gate.norm2
    x, y, z = gate.axis
    root = isqrt(n)
    if s and root * root != n:
        raise ValueError(f"gate {gate.name!r}: axis norm must be a perfect square for pi/2 turns")
    k = Fraction(s, root) if s else Fraction(0)
    cross = ((0, -z, y), (z, 0, -x), (-y, x, 0))
    axis = (x, y, z)
    return tuple(
        tuple(c * (i == j) + k * cross[i][j] + Fraction(1 - c, n) * axis[i] * axis[j] for j in range(3))
        for i in range(3)
    )


def _matmul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3))


def group_closure(gates, cap: int = 1000) -> int:
    """Order of the group generated by the gates' rotation matrices."""
    gens = [rotation_matrix(g) for g in gates]
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = _matmul(m, g)
                if p not in seen:
                    seen.add(p)
                    if len(seen) > cap:
                        raise CapExceeded(cap)
                    nxt.append(p)
        frontier = nxt
    return len(seen)


# ---------------------------------------------------------------------------
# word search
# ---------------------------------------------------------------------------

@dataclass
class SearchResult:
    """``word`` is a list of ``(gate index, +1 or -1)`` or ``None`` when nothing was found.

    A ``None`` result certifies nothing: longer words may still have infinite order.
    """

    word: list | None
    verdict: ProductVerdict | None
    checked: int = 0
    overflows: list = field(default_factory=list)

    def spell(self, gates) -> str:
        if self.word is None:
            return ""
        return " ".join(gates[i].name + ("" if e > 0 else "^-1") for i, e in self.word)


def word_search(gates, max_len: int, max_degree: int = 64) -> SearchResult:
    """First word (shortest, then lexicographic) whose rotation has infinite order.

    Letters are the generators followed by their inverses; words containing a
    letter next to its own inverse are skipped.  Words whose trace has a
    minimal polynomial above ``max_degree`` are recorded in ``overflows``.
    """
    if max_len < 1:
        raise ValueError("max_len must be positive")
    gates = list(gates)
    g = len(gates)
    if not g:
        raise ValueError("need at least one gate")
    letters = [(i, 1) for i in range(g)] + [(i, -1) for i in range(g)]
    fld = field_for(gates)
    quats = [quaternion(gt if e > 0 else gt.inverse(), fld) for gt, e in ((gates[i], e) for i, e in letters)]
    out = SearchResult(None, None)
    for length in range(1, max_len + 1):
        for word in itertools.product(range(2 * g), repeat=length):
            if any(letters[u][0] == letters[v][0] and u != v for u, v in zip(word, word[1:])):
                continue
            q = quats[word[0]]
            for k in word[1:]:
                q = hamilton(fld, q, quats[k])
            out.checked += 1
            try:
                cg = fld.to_real(_cos_gamma_element(fld, q[0]), max_degree)
            except DegreeOverflow as exc:
                out.overflows.append(([letters[k] for k in word], exc.degree))
                continue
            pv = _verdict_from_cos(cg)
            if not pv.finite:
                out.word = [letters[k] for k in word]
                out.verdict = pv
                return out
    return out


# ---------------------------------------------------------------------------
# gate-set files
# ---------------------------------------------------------------------------

class GateSetError(ValueError):
    pass


def _int(v, where):
    if isinstance(v, bool) or not isinstance(v, int):
        raise GateSetError(f"{where}: expected an integer, got {v!r}")
    return v


def parse_gate_set(text: str) -> list[Gate]:
    """Parse ``{"gates": [{"name", "axis", "angle": {"num", "den"}}, ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GateSetError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise GateSetError("top level: expected an object")
    extra = set(doc) - {"gates"}
    if extra:
        raise GateSetError(f"top level: unknown field(s) {sorted(extra)}")
    raw = doc.get("gates")
    if not isinstance(raw, list) or not raw:
        raise GateSetError("gates: expected a nonempty list")
    out = []
    for i, item in enumerate(raw):
        where = f"gates[{i}]"
        if not isinstance(item, dict):
            raise GateSetError(f"{where}: expected an object")
        extra = set(item) - {"name", "axis", "angle"}
        if extra:
            raise GateSetError(f"{where}: unknown field(s) {sorted(extra)}")
        missing = {"name", "axis", "angle"} - set(item)
        if missing:
            raise GateSetError(f"{where}: missing field(s) {sorted(missing)}")
        name = item["name"]
        if not isinstance(name, str):
            raise GateSetError(f"{where}.name: expected a string")
        axis = item["axis"]
        if not isinstance(axis, list) or len(axis) != 3:
            raise GateSetError(f"{where}.axis: expected a list of three integers")
        axis = tuple(_int(c, f"{where}.axis[{j}]") for j, c in enumerate(axis))
        if not any(axis):
            raise GateSetError(f"{where}.axis: must be nonzero")
        ang = item["angle"]
        if not isinstance(ang, dict):
            raise GateSetError(f"{where}.angle: expected an object with num and den")
        extra = set(ang) - {"num", "den"}
        if extra:
            raise GateSetError(f"{where}.angle: unknown field(s) {sorted(extra)}")
        if "num" not in ang:
            raise GateSetError(f"{where}.angle.num: missing")
        num = _int(ang["num"], f"{where}.angle.num")
        den = _int(ang.get("den", 1), f"{where}.angle.den")
        if den <= 0:
            raise GateSetError(f"{where}.angle.den: must be positive")
        out.append(Gate(name, axis, RationalAngle(num, den)))
    return out


def load_gate_set(path) -> list[Gate]:
    with open(path, encoding="utf-8") as fh:
        return parse_gate_set(fh.read())
