"""Exact arithmetic in the real field Q(sqrt2, sqrt3).

Coxeter cosine matrices with labels 4 and 6 have entries -sqrt2/2 and
-sqrt3/2, so deciding their signature exactly needs this field.  Elements
are stored as four rationals over the basis 1, sqrt2, sqrt3, sqrt6.
"""

from __future__ import annotations

from fractions import Fraction


def _sign_q2(u: Fraction, v: Fraction) -> int:
    """Sign of u + v*sqrt2."""
    su = (u > 0) - (u < 0)
    sv = (v > 0) - (v < 0)
    if sv == 0:
        return su
    if su == 0 or su == sv:
        return sv
    n = u * u - 2 * v * v
    return su * ((n > 0) - (n < 0))


class Surd:
    """a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational a, b, c, d."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)

    @staticmethod
    def _coerce(x) -> "Surd":
        if isinstance(x, Surd):
            return x
        return Surd(x)

    def __add__(self, other):
        o = Surd._coerce(other)
        return Surd(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        return self + (-Surd._coerce(other))

    def __rsub__(self, other):
        return Surd._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Surd):
            f = Fraction(other)
            return Surd(self.a * f, self.b * f, self.c * f, self.d * f)
        a, b, c, d = self.a, self.b, self.c, self.d
        p, q, r, s = other.a, other.b, other.c, other.d
        return Surd(
            a * p + 2 * b * q + 3 * c * r + 6 * d * s,
            a * q + b * p + 3 * c * s + 3 * d * r,
            a * r + c * p + 2 * b * s + 2 * d * q,
            a * s + d * p + b * r + c * q,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Surd":
        # x = P + Q*sqrt3 with P, Q in Q(sqrt2); 1/x = (P - Q*sqrt3) / (P^2 - 3Q^2)
        pa, pb = self.a, self.b
        qa, qb = self.c, self.d
        u = pa * pa + 2 * pb * pb - 3 * (qa * qa + 2 * qb * qb)
        v = 2 * pa * pb - 6 * qa * qb
        den = u * u - 2 * v * v
        if den == 0:
            raise ZeroDivisionError("Surd division by zero")
        iu, iv = u / den, -v / den
        # (pa + pb r2 - (qa + qb r2) r3) * (iu + iv r2)
        return Surd(
            pa * iu + 2 * pb * iv,
            pa * iv + pb * iu,
            -(qa * iu + 2 * qb * iv),
            -(qa * iv + qb * iu),
        )

    def __truediv__(self, other):
        if not isinstance(other, Surd):
            f = Fraction(other)
            return Surd(self.a / f, self.b / f, self.c / f, self.d / f)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Surd._coerce(other) * self.inverse()

    def sign(self) -> int:
        sp = _sign_q2(self.a, self.b)
        sq = _sign_q2(self.c, self.d)
        if sq == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq
        # sign(P + Q sqrt3) = sign(P) * sign(P^2 - 3 Q^2)
        u = self.a * self.a + 2 * self.b * self.b - 3 * (self.c * self.c + 2 * self.d * self.d)
        v = 2 * self.a * self.b - 6 * self.c * self.d
        return sp * _sign_q2(u, v)

    def __eq__(self, other):
        try:
            o = Surd._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (o.a, o.b, o.c, o.d)

    def __hash__(self):
        if self.b == self.c == self.d == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.c, self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def __float__(self):
        return float(self.a) + float(self.b) * 2 ** 0.5 + float(self.c) * 3 ** 0.5 + float(self.d) * 6 ** 0.5

    def __repr__(self):
        return f"Surd({self.a}, {self.b}, {self.c}, {self.d})"


SQRT2 = Surd(0, 1)
SQRT3 = Surd(0, 0, 1)
