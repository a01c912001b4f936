"""Dense univariate polynomials over an exact coefficient domain.

Coefficients are stored lowest degree first.  The coefficient domain is
whatever the entries support: ``Fraction`` for Q, :class:`NFElem` for a
number field, or another :class:`UniPoly` (which is how polynomials in
``Y`` over ``K[T]`` are represented).  Division-type operations assume the
coefficients form a field unless the divisor is monic.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from ..errors import ZeroPolynomial


def _is_zero(c) -> bool:
    return c == 0


class UniPoly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "T"):
        c = [Fraction(x) if isinstance(x, int) else x for x in coeffs]
        while c and _is_zero(c[-1]):
            c.pop()
        self.coeffs = tuple(c)
        self.var = var

    # construction helpers
    @classmethod
    def const(cls, c, var: str = "T") -> "UniPoly":
        return cls([c], var)

    @classmethod
    def x(cls, var: str = "T") -> "UniPoly":
        return cls([0, 1], var)

    @classmethod
    def monomial(cls, c, n: int, var: str = "T") -> "UniPoly":
        return cls([0] * n + [c], var)

    @classmethod
    def from_ints(cls, ints: Sequence, var: str = "T") -> "UniPoly":
        return cls([Fraction(i) for i in ints], var)

    def _like(self, coeffs) -> "UniPoly":
        return UniPoly(coeffs, self.var)

    # basic properties
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    # arithmetic
    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly) and other.var == self.var:
            return other
        return UniPoly([other], self.var)

    def __add__(self, other):
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not (isinstance(other, UniPoly) and other.var == self.var):
            if _is_zero(other):
                return self._like([])
            return self._like([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._like([])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if _is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return self._like(out)

    def __rmul__(self, other):
        return self._like([other * c for c in self.coeffs])

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self._like([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if _is_zero(other):
            return not self.coeffs
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def scale(self, c) -> "UniPoly":
        return self._like([x * c for x in self.coeffs])

    def divmod(self, other: "UniPoly"):
        """Euclidean division; needs field coefficients or a monic divisor."""
        if other.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        rem = list(self.coeffs)
        dl = other.degree()
        lead = other.lc()
        monic = lead == 1
        inv = None if monic else 1 / lead
        if len(rem) - 1 < dl:
            return self._like([]), self
        quot = [0] * (len(rem) - dl)
        for i in range(len(rem) - 1, dl - 1, -1):
            c = rem[i]
            if _is_zero(c):
                continue
            if not monic:
                c = c * inv
            quot[i - dl] = c
            for j, y in enumerate(other.coeffs):
                rem[i - dl + j] = rem[i - dl + j] - c * y
        return self._like(quot), self._like(rem[:dl])

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero():
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lead = self.lc()
        if lead == 1:
            return self
        inv = 1 / lead
        return self._like([c * inv for c in self.coeffs])

    def derivative(self) -> "UniPoly":
        return self._like([c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = self._like([])
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def taylor_shift(self, c) -> "UniPoly":
        """Return p(x + c)."""
        return self.compose(self._like([c, 1]))

    def map_coeffs(self, f: Callable, var: str | None = None) -> "UniPoly":
        return UniPoly([f(c) for c in self.coeffs], var or self.var)

    def truncate(self, n: int) -> "UniPoly":
        return self._like(self.coeffs[:n])

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return i
        raise ZeroPolynomial("valuation of zero")

    def reverse(self, n: int | None = None) -> "UniPoly":
        n = self.degree() if n is None else n
        c = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return self._like(c[::-1])

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, var)

    def __repr__(self):
        from .render import render_uni

        return f"UniPoly({render_uni(self)})"

    def __str__(self):
        from .render import render_uni

        return render_uni(self)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over a field (zero if both inputs vanish)."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def poly_gcdex(a: UniPoly, b: UniPoly):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    one = a._like([1])
    zero = a._like([])
    s0, s1, t0, t1 = one, zero, zero, one
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = 1 / r0.lc()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def yun(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Squarefree decomposition over a characteristic-0 field.

    Returns monic squarefree, pairwise coprime ``(a_i, i)`` with
    ``f = lc(f) * prod a_i**i``; trivial factors are dropped.
    """
    if f.is_zero():
        raise ZeroPolynomial("squarefree decomposition of zero")
    f = f.monic()
    if f.degree() == 0:
        return []
    out = []
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a) if not a.is_zero() else df
    d = c - b.derivative()
    i = 1
    while b.degree() > 0:
        a = poly_gcd(b, d)
        if a.degree() > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def is_squarefree(f: UniPoly) -> bool:
    if f.degree() <= 0:
        return True
    return poly_gcd(f, f.derivative()).degree() == 0
