"""Angles that are rational multiples of pi."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True, order=True)
class RationalAngle:
    """The angle ``(num/den) * pi``, always stored in lowest terms with ``den >= 1``."""

    num: int
    den: int = 1

    def __post_init__(self):
        num, den = self.num, self.den
        if isinstance(num, bool) or isinstance(den, bool):
            raise TypeError("angle parts must be integers")
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError("angle parts must be integers")
        if den == 0:
            raise ValueError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(num, den)
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", den // g)

    @classmethod
    def of(cls, r) -> RationalAngle:
        r = Fraction(r)
        return cls(r.numerator, r.denominator)

    @classmethod
    def parse(cls, text: str) -> RationalAngle:
        """Parse ``"p/q"`` or ``"p"`` (units of pi)."""
        s = text.strip()
        if s.endswith("pi"):
            s = s[:-2].rstrip("*").strip() or "1"
        try:
            if "/" in s:
                p, q = s.split("/")
                return cls(int(p), int(q))
            return cls(int(s))
        except ValueError:
            raise ValueError(f"malformed angle literal {text!r}; expected p/q") from None

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __neg__(self):
        return RationalAngle(-self.num, self.den)

    def __add__(self, other):
        if not isinstance(other, RationalAngle):
            return NotImplemented
        return RationalAngle.of(self.fraction + other.fraction)

    def __sub__(self, other):
        if not isinstance(other, RationalAngle):
            return NotImplemented
        return RationalAngle.of(self.fraction - other.fraction)

    def __mul__(self, k):
        return RationalAngle.of(self.fraction * Fraction(k))

    __rmul__ = __mul__

    def __truediv__(self, k):
        return RationalAngle.of(self.fraction / Fraction(k))

    def mod_2pi(self) -> RationalAngle:
        """Representative in ``[0, 2*pi)``."""
        return RationalAngle(self.num % (2 * self.den), self.den)

    def folded(self) -> RationalAngle:
        """Rotation angle in ``[0, pi]`` giving the same rotation up to axis flip."""
        r = self.mod_2pi().fraction
        return RationalAngle.of(2 - r if r > 1 else r)

    def is_multiple_of_half_pi(self) -> bool:
        return self.den in (1, 2)

    def rotation_order(self) -> int:
        """Order of a rotation by this angle: least ``t > 0`` with ``t*angle`` in ``2*pi*Z``."""
        return (2 * self.den) // gcd(self.num, 2 * self.den)

    def __str__(self):
        return f"{self.num}/{self.den}"

    def describe(self) -> str:
        if self.num == 0:
            return "0"
        head = {1: "", -1: "-"}.get(self.num, str(self.num))
        tail = "" if self.den == 1 else f"/{self.den}"
        return f"{head}pi{tail}"
