"""Number fields Q(a) = Q[x]/(m(x)) and their elements.

``QQ`` is the degree-one field; its elements are plain ``Fraction``
objects, so code written against a :class:`NumberField` works unchanged
over Q.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import DegreeTooLarge, Reducible
from .poly import UniPoly, poly_gcdex

MAX_BASE_DEGREE = 4


class NumberField:
    """Q[x]/(m) for a monic irreducible ``m`` with rational coefficients.

    ``root_index`` selects the distinguished complex embedding (an index into
    the exact isolating rectangles of the roots of ``m``); it only matters for
    serialization and for matching algebraic points to factors.
    """

    def __init__(self, minpoly: UniPoly, name: str = "a", root_index: int = 0,
                 check: bool = True, label: str | None = None):
        m = UniPoly([Fraction(c) for c in minpoly.coeffs], "x").monic()
        self.minpoly = m
        self.degree = m.degree()
        self.name = name
        self.root_index = root_index
        self.label = label
        if check and self.degree > 1:
            from .factor import factor_q

            _, facs = factor_q(m)
            if len(facs) != 1 or facs[0][1] != 1:
                raise Reducible(f"defining polynomial {m} is reducible")
        # x^(d+i) expressed in the power basis, for i = 0..d-2
        d = self.degree
        self._red = []
        if d > 1:
            cur = [-c for c in m.coeffs[:d]]
            for _ in range(d - 1):
                self._red.append(cur)
                top = cur[-1]
                cur = [Fraction(0)] + cur[:-1]
                cur = [cur[j] - top * m.coeffs[j] for j in range(d)]

    # fields compare by identity of their defining data
    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly and \
            self.root_index == other.root_index

    def __hash__(self):
        return hash((self.minpoly.coeffs, self.root_index))

    @property
    def is_q(self) -> bool:
        return self.degree == 1

    def __call__(self, value):
        if isinstance(value, NFElem):
            if value.K is self or value.K == self:
                return value
            if value.is_rational():
                return self(value.rational())
            raise ValueError("element of a different field")
        if self.is_q:
            return Fraction(value)
        if isinstance(value, (list, tuple)):
            return NFElem(self, value)
        return NFElem(self, [Fraction(value)])

    @property
    def gen(self):
        if self.is_q:
            return -self.minpoly[0]
        return NFElem(self, [0, 1])

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def _reduce(self, c: list) -> tuple:
        d = self.degree
        if len(c) <= d:
            return tuple(c) + (Fraction(0),) * (d - len(c))
        out = list(c[:d])
        for i, v in enumerate(c[d:]):
            if v == 0:
                continue
            row = self._red[i]
            for j in range(d):
                out[j] += v * row[j]
        return tuple(out)

    def _mul(self, a: tuple, b: tuple) -> tuple:
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
        return self._reduce(prod)

    def _inv(self, a: tuple) -> tuple:
        g, s, _ = poly_gcdex(UniPoly(a, "x"), self.minpoly)
        if g.degree() != 0:
            raise ZeroDivisionError("element is not invertible")
        return self._reduce(list(s.coeffs))

    def __repr__(self):
        if self.label:
            return self.label
        return f"Q[{self.name}]/({self.minpoly})"

    def describe(self) -> str:
        if self.is_q:
            return "Q"
        return self.label or f"Q[x]/({self.minpoly})"


class NFElem:
    __slots__ = ("K", "c")

    def __init__(self, K: NumberField, coeffs: Sequence):
        self.K = K
        c = [Fraction(x) for x in coeffs]
        self.c = K._reduce(c)

    @classmethod
    def _raw(cls, K, c):
        obj = cls.__new__(cls)
        obj.K = K
        obj.c = c
        return obj

    def _other(self, other):
        if isinstance(other, NFElem):
            if other.K is not self.K and other.K != self.K:
                raise ValueError("elements of different number fields")
            return other.c
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) + (Fraction(0),) * (self.K.degree - 1)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return NFElem._raw(self.K, tuple(x + y for x, y in zip(self.c, o)))

    __radd__ = __add__

    def __neg__(self):
        return NFElem._raw(self.K, tuple(-x for x in self.c))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return NFElem._raw(self.K, tuple(x - y for x, y in zip(self.c, o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElem._raw(self.K, tuple(x * other for x in self.c))
        o = self._other(other)
        if o is None:
            return NotImplemented
        return NFElem._raw(self.K, self.K._mul(self.c, o))

    __rmul__ = __mul__

    def inverse(self):
        return NFElem._raw(self.K, self.K._inv(self.c))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElem._raw(self.K, tuple(x / other for x in self.c))
        if isinstance(other, NFElem):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.K.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._other(other) if isinstance(other, (NFElem, int, Fraction)) else None
        if o is None:
            return NotImplemented
        return self.c == o

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash(self.c)

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.c[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.c[0]

    def as_poly(self) -> UniPoly:
        return UniPoly(self.c, "x")

    def __repr__(self):
        from .render import render_uni

        return render_uni(UniPoly(self.c, self.K.name))


class _Rationals(NumberField):
    def __init__(self):
        super().__init__(UniPoly([0, 1], "x"), check=False, label="Q")


QQ = _Rationals()


def base_field(minpoly: UniPoly, root_index: int = 0, label: str | None = None) -> NumberField:
    """A user-facing ground field; degree is capped at four."""
    if minpoly.degree() > MAX_BASE_DEGREE:
        raise DegreeTooLarge(f"number fields of degree > {MAX_BASE_DEGREE} are not supported")
    if minpoly.degree() == 1:
        return QQ
    return NumberField(minpoly, root_index=root_index, label=label)


def lift(c) -> UniPoly:
    """Representative polynomial of a field element (constant for rationals)."""
    if isinstance(c, NFElem):
        return UniPoly(c.c, "x")
    return UniPoly([Fraction(c)], "x")


def coerce(K: NumberField, c):
    """Bring a rational or an element of ``K`` into ``K``'s element type."""
    if K.is_q:
        if isinstance(c, NFElem):
            return c.rational()
        return Fraction(c)
    return K(c)
