"""Sparse polynomials P(T, Y) with rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

import sympy
from sympy.polys.domains import QQ as SQQ

from ..errors import Unsupported, ZeroPolynomial
from .poly import UniPoly
from .render import render_bi

_T, _Y = sympy.symbols("_T _Y")


def _rat(c) -> Fraction:
    from .field import NFElem

    if isinstance(c, NFElem):
        if not c.is_rational():
            raise Unsupported("only rational coefficients are supported in P(T,Y)")
        return c.rational()
    return Fraction(c)


class BiPoly:
    """P(T, Y) stored as ``{(deg_T, deg_Y): coefficient}``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], object] | None = None):
        out = {}
        for k, v in (coeffs or {}).items():
            v = _rat(v)
            if v:
                out[(int(k[0]), int(k[1]))] = v
        self.coeffs = out

    # constructors
    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def T(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def Y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def from_y_coeffs(cls, cs) -> "BiPoly":
        """Build from a list of polynomials in T, the j-th being the Y^j coefficient."""
        out = {}
        for j, c in enumerate(cs):
            if not isinstance(c, UniPoly):
                c = UniPoly([c])
            for i, v in enumerate(c.coeffs):
                if v:
                    out[(i, j)] = v
        return cls(out)

    @classmethod
    def from_uni(cls, f: UniPoly) -> "BiPoly":
        """Embed a univariate polynomial; its variable decides T or Y."""
        if f.var == "Y":
            return cls({(0, j): c for j, c in enumerate(f.coeffs)})
        return cls({(i, 0): c for i, c in enumerate(f.coeffs)})

    # properties
    def is_zero(self) -> bool:
        return not self.coeffs

    def deg_y(self) -> int:
        if not self.coeffs:
            return -1
        return max(j for _, j in self.coeffs)

    def deg_t(self) -> int:
        if not self.coeffs:
            return -1
        return max(i for i, _ in self.coeffs)

    def y_coeff(self, j: int) -> UniPoly:
        """Coefficient of Y^j as a polynomial in T."""
        d = {i: v for (i, jj), v in self.coeffs.items() if jj == j}
        if not d:
            return UniPoly([], "T")
        return UniPoly([d.get(i, 0) for i in range(max(d) + 1)], "T")

    def y_coeffs(self) -> list[UniPoly]:
        return [self.y_coeff(j) for j in range(self.deg_y() + 1)]

    def t_coeff(self, i: int) -> UniPoly:
        d = {j: v for (ii, j), v in self.coeffs.items() if ii == i}
        if not d:
            return UniPoly([], "Y")
        return UniPoly([d.get(j, 0) for j in range(max(d) + 1)], "Y")

    def is_monic_in_y(self) -> bool:
        n = self.deg_y()
        return n >= 1 and self.y_coeff(n) == 1

    def is_constant_in_t(self) -> bool:
        return self.deg_t() <= 0

    def subs_t(self, t0) -> UniPoly:
        """P(t0, Y) as a polynomial in Y."""
        return UniPoly([c(t0) for c in self.y_coeffs()], "Y")

    def total_degree(self) -> int:
        return max((i + j for i, j in self.coeffs), default=-1)

    # arithmetic
    def _coerce(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, UniPoly):
            return BiPoly.from_uni(other)
        return BiPoly.const(other)

    def __add__(self, other):
        o = self._coerce(other)
        out = dict(self.coeffs)
        for k, v in o.coeffs.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        out: dict = {}
        for (i1, j1), v1 in self.coeffs.items():
            for (i2, j2), v2 in o.coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + v1 * v2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "BiPoly":
        return BiPoly({k: v * c for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == self._coerce(other).coeffs
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # conversions
    def to_sympy(self) -> sympy.Poly:
        if not self.coeffs:
            return sympy.Poly(0, _T, _Y, domain=SQQ)
        return sympy.Poly.from_dict({k: SQQ(v.numerator, v.denominator) for k, v in self.coeffs.items()},
                                    _T, _Y, domain=SQQ)

    @classmethod
    def from_sympy(cls, p: sympy.Poly) -> "BiPoly":
        out = {}
        for (i, j), v in p.as_dict().items():
            v = sympy.Rational(v)
            out[(i, j)] = Fraction(int(v.p), int(v.q))
        return cls(out)

    def __repr__(self):
        return f"BiPoly({render_bi(self)})"

    def __str__(self):
        return render_bi(self)


def disc_y(p: BiPoly) -> UniPoly:
    """Discriminant of ``p`` with respect to Y, a polynomial in T."""
    if p.deg_y() < 1:
        raise ZeroPolynomial("discriminant needs positive degree in Y")
    sp = p.to_sympy()
    if p.deg_y() == 1:
        return UniPoly([1], "T")
    d = sympy.Poly(sympy.discriminant(sp, _Y), _T, domain=SQQ) if p.deg_t() > 0 else \
        sympy.Poly(sympy.discriminant(sympy.Poly(sp.as_expr(), _Y, domain=SQQ), _Y), _T, domain=SQQ)
    return UniPoly([Fraction(int(c.numerator), int(c.denominator)) for c in reversed(d.rep.to_list())], "T")


def resultant_y(p: BiPoly, q: BiPoly) -> UniPoly:
    r = sympy.resultant(p.to_sympy().as_expr(), q.to_sympy().as_expr(), _Y)
    r = sympy.Poly(r, _T, domain=SQQ)
    return UniPoly([Fraction(int(c.numerator), int(c.denominator)) for c in reversed(r.rep.to_list())], "T")


def factor_count_over(p: BiPoly, K) -> int:
    """Number of irreducible factors over K(T), counted with multiplicity.

    Over Q this is sympy's bivariate factorization.  Over a number field
    K = Q(a) it is Trager's criterion: for a shift s making the norm
    Res_x(m(x), P(T, Y - s x)) squarefree, the norm has as many irreducible
    factors over Q as P has over K.
    """
    if K.is_q:
        _, facs = p.to_sympy().factor_list()
        return sum(m for f, m in facs if f.degree(_Y) > 0)
    x = sympy.Symbol("_a")
    m = sum(sympy.Rational(int(v.numerator), int(v.denominator)) * x ** i
            for i, v in enumerate(K.minpoly.coeffs))
    expr = p.to_sympy().as_expr()
    _, sq = sympy.Poly(expr, _Y, _T, domain=SQQ).sqf_list()
    total = 0
    for part, mult in sq:
        e = part.as_expr()
        for s in range(1, 40):
            shifted = e.subs(_Y, _Y - s * x)
            N = sympy.Poly(sympy.resultant(sympy.Poly(m, x), sympy.Poly(shifted, x), x), _Y, _T, domain=SQQ)
            g = sympy.gcd(N, N.diff(_Y))
            if g.degree(_Y) == 0:
                break
        else:
            raise ArithmeticError("no squarefree norm found")
        _, facs = N.factor_list()
        total += mult * sum(mm for f, mm in facs if f.degree(_Y) > 0)
    return total
