"""Exact scalar backends.

Three exact scalar types are used by the rank-1 (sl2) machinery:

* ``fractions.Fraction`` -- plain rationals, used wherever no square root
  of the deformation parameter occurs.
* ``SqrtExt`` -- elements a + b*s of the quadratic extension Q(s), s**2 = q.
  The Cartan factor q**(h (x) h / 2) of the universal R-matrix acts by
  half-integer powers of q on odd weight pairs, so exactness at rational q
  requires adjoining s = sqrt(q).
* ``RatFunc`` -- univariate rational functions over any of the above, used
  to carry difference-operator coefficients as exact functions of
  x = q**(-2*lambda) and to re-expand them as power series.

All types interoperate through the usual arithmetic operators; ints and
Fractions coerce into SqrtExt/RatFunc on demand.
"""

from __future__ import annotations

from fractions import Fraction


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to Fraction")


class SqrtExt:
    """a + b*s with s**2 = base, base a fixed positive rational."""

    __slots__ = ("a", "b", "base")

    def __init__(self, a, b=0, base=None):
        if base is None:
            raise ValueError("SqrtExt needs an explicit base")
        self.a = _as_fraction(a)
        self.b = _as_fraction(b)
        self.base = _as_fraction(base)

    def _coerce(self, other):
        if isinstance(other, SqrtExt):
            if other.base != self.base:
                raise ValueError("mixed SqrtExt bases")
            return other
        if isinstance(other, (int, Fraction)):
            return SqrtExt(other, 0, base=self.base)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return SqrtExt(self.a + o.a, self.b + o.b, base=self.base)

    __radd__ = __add__

    def __neg__(self):
        return SqrtExt(-self.a, -self.b, base=self.base)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return SqrtExt(
            self.a * o.a + self.b * o.b * self.base,
            self.a * o.b + self.b * o.a,
            base=self.base,
        )

    __rmul__ = __mul__

    def inverse(self):
        # (a + bs)^-1 = (a - bs) / (a^2 - b^2 q)
        d = self.a * self.a - self.b * self.b * self.base
        if d == 0:
            raise ZeroDivisionError("SqrtExt division by zero")
        return SqrtExt(self.a / d, -self.b / d, base=self.base)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = SqrtExt(1, 0, base=self.base)
        p = self
        while n:
            if n & 1:
                out = out * p
            p = p * p
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, SqrtExt):
            return self.base == other.base and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.base))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return float(self.a) + float(self.b) * float(self.base) ** 0.5

    def __abs__(self):
        return abs(float(self))

    def __repr__(self):
        if self.b == 0:
            return f"{self.a}"
        return f"({self.a}+{self.b}*sqrt({self.base}))"


def sqrt_of(q):
    """The element s = sqrt(q) of Q(sqrt(q))."""
    return SqrtExt(0, 1, base=_as_fraction(q))


def qpow_half(q, n2):
    """q**(n2/2) for integer n2, exact in Q(sqrt(q))."""
    return sqrt_of(q) ** n2


class Poly:
    """Dense univariate polynomial over an exact scalar type."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while len(c) > 1 and _is_zero(c[-1]):
            c.pop()
        if not c:
            c = [0]
        self.c = c

    @staticmethod
    def const(v):
        return Poly([v])

    @staticmethod
    def x(one=1):
        return Poly([0 * one, one])

    @property
    def deg(self):
        return len(self.c) - 1

    def is_zero(self):
        return len(self.c) == 1 and _is_zero(self.c[0])

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        n = max(len(self.c), len(other.c))
        a = self.c + [0] * (n - len(self.c))
        b = other.c + [0] * (n - len(other.c))
        return Poly([a[i] + b[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-v for v in self.c])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.c):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        q = [0] * max(1, len(r) - len(other.c) + 1)
        d = other.c[-1]
        while len(r) >= len(other.c) and not all(_is_zero(v) for v in r):
            while len(r) > 1 and _is_zero(r[-1]):
                r.pop()
            if len(r) < len(other.c):
                break
            k = len(r) - len(other.c)
            f = r[-1] / d
            q[k] = f
            for i, b in enumerate(other.c):
                r[k + i] = r[k + i] - f * b
            r.pop()
        return Poly(q), Poly(r)

    def valuation(self):
        for i, v in enumerate(self.c):
            if not _is_zero(v):
                return i
        return None

    def shift_scale(self, factor):
        """p(x) -> p(factor * x)."""
        out, f = [], 1
        for v in self.c:
            out.append(v * f)
            f = f * factor
        return Poly(out)

    def eval(self, x):
        acc = 0
        for v in reversed(self.c):
            acc = acc * x + v
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return (self - other).is_zero()

    def __hash__(self):
        return hash(tuple(self.c))

    def __repr__(self):
        return f"Poly({self.c})"


def _is_zero(v):
    if isinstance(v, (int, Fraction)):
        return v == 0
    if isinstance(v, SqrtExt):
        return not bool(v)
    if isinstance(v, RatFunc):
        return v.num.is_zero()
    if isinstance(v, Poly):
        return v.is_zero()
    return v == 0


def _poly_gcd(a, b):
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    if not a.is_zero():
        lead = a.c[-1]
        a = Poly([v / lead for v in a.c])
    return a


class RatFunc:
    """Ratio of two Polys, reduced by monic gcd on construction."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = Poly.const(_one_like(num.c[0]))
        if not isinstance(den, Poly):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = _poly_gcd(num, den)
        if not g.is_zero() and g.deg > 0:
            num, _ = num.divmod(g)
            den, _ = den.divmod(g)
        lead = den.c[-1]
        num = Poly([v / lead for v in num.c])
        den = Poly([v / lead for v in den.c])
        self.num = num
        self.den = den

    @staticmethod
    def x(one=1):
        return RatFunc(Poly.x(one))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, SqrtExt, Poly)):
            return RatFunc(other if isinstance(other, Poly) else Poly.const(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __pow__(self, n):
        if n < 0:
            return (RatFunc(self.den, self.num)) ** (-n)
        out = RatFunc(Poly.const(_one_like(self.num.c[0])))
        p = self
        while n:
            if n & 1:
                out = out * p
            p = p * p
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self):
        return hash((tuple(self.num.c), tuple(self.den.c)))

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self):
        return self.num.is_zero()

    def shift_scale(self, factor):
        """f(x) -> f(factor * x)."""
        return RatFunc(self.num.shift_scale(factor), self.den.shift_scale(factor))

    def series(self, order):
        """Power-series coefficients [x^0 .. x^order] around x = 0.

        Raises ZeroDivisionError if the function has a pole at 0.
        """
        nv = self.num.valuation()
        if nv is None:
            return [0] * (order + 1)
        dv = self.den.valuation()
        if dv > 0 and (nv is None or nv < dv):
            raise ZeroDivisionError("pole at expansion point x=0")
        num = self.num.c[dv:] if dv else list(self.num.c)
        den = self.den.c[dv:] if dv else list(self.den.c)
        num = num + [0] * (order + 1)
        out = []
        inv0 = 1 / den[0]
        for k in range(order + 1):
            v = num[k]
            for j in range(1, min(k, len(den) - 1) + 1):
                v = v - den[j] * out[k - j]
            out.append(v * inv0)
        return out

    def eval(self, x):
        return self.num.eval(x) / self.den.eval(x)

    def __repr__(self):
        return f"RatFunc({self.num.c}/{self.den.c})"


def _one_like(v):
    if isinstance(v, SqrtExt):
        return SqrtExt(1, 0, base=v.base)
    return Fraction(1)
