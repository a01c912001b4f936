"""Exact isolation of complex roots and algebraic points of P^1.

Roots of a rational polynomial are isolated by sympy's exact rectangle
subdivision; every root is pinned down by its minimal polynomial over Q
together with a rectangle with rational corners that contains no other
root.  ``INFINITY`` stands for the point at infinity of the parameter line.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath
import sympy

from .poly import UniPoly
from .render import render_rat

_t = sympy.Symbol("_t")

Rect = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]


def _frac(v) -> Fraction:
    v = sympy.nsimplify(v) if not isinstance(v, (sympy.Rational, sympy.Integer)) else v
    return Fraction(int(v.p), int(v.q))


def _sympy_poly(f: UniPoly) -> sympy.Poly:
    from .factor import _to_sympy_q

    return _to_sympy_q(f, _t)


@lru_cache(maxsize=2048)
def _isolate(coeffs: tuple, eps: Fraction | None) -> tuple:
    f = UniPoly(coeffs, "T")
    if f.degree() == 1:
        r = -f[0] / f[1]
        return (((r, Fraction(0)), (r, Fraction(0))),)
    kw = {"all": True}
    if eps is not None:
        kw["eps"] = sympy.Rational(eps.numerator, eps.denominator)
    real, cplx = _sympy_poly(f).intervals(**kw)
    rects = []
    for (a, b), _ in real:
        a, b = _frac(a), _frac(b)
        rects.append(((a, Fraction(0)), (b, Fraction(0))))
    for (z1, z2), _ in cplx:
        lo_re, lo_im = sympy.re(z1), sympy.im(z1)
        hi_re, hi_im = sympy.re(z2), sympy.im(z2)
        rects.append(((_frac(lo_re), _frac(lo_im)), (_frac(hi_re), _frac(hi_im))))
    rects.sort(key=_rect_key)
    return tuple(rects)


def _rect_key(r: Rect):
    (a, b), (c, d) = r
    real = b == 0 and d == 0
    # real roots first, then by the rectangle centre
    return (0 if real else 1, (a + c) / 2, (b + d) / 2)


def isolate_roots(f: UniPoly, eps: Fraction | None = None) -> list[Rect]:
    """Isolating rectangles of the roots of a squarefree rational ``f``.

    The order is canonical: real roots from left to right, then the
    non-real roots by the real and imaginary parts of their centres.
    """
    c = tuple(Fraction(x) for x in f.monic().coeffs)
    return list(_isolate(c, eps))


@lru_cache(maxsize=2048)
def _numeric_roots(coeffs: tuple, dps: int) -> tuple:
    f = UniPoly(coeffs, "T")
    with mpmath.workdps(dps):
        roots = mpmath.polyroots([mpmath.mpf(c.numerator) / c.denominator
                                  for c in reversed(f.coeffs)],
                                 maxsteps=400, extraprec=4 * dps)
        return tuple(roots)


def _mp(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def numeric_root(f: UniPoly, index: int, dps: int = 50):
    """High-precision value of the ``index``-th root in canonical order."""
    f = f.monic()
    if f.degree() == 1:
        with mpmath.workdps(dps):
            return _mp(-f[0])
    (a, b), (c, d) = isolate_roots(f)[index]
    coeffs = tuple(Fraction(x) for x in f.coeffs)
    with mpmath.workdps(dps):
        centre = mpmath.mpc(_mp((a + c) / 2), _mp((b + d) / 2))
        best = min(_numeric_roots(coeffs, dps), key=lambda r: abs(r - centre))
        re, im = mpmath.re(best), mpmath.im(best)
        tol = mpmath.mpf(10) ** (-dps // 2)
        if not (_mp(a) - tol <= re <= _mp(c) + tol and _mp(b) - tol <= im <= _mp(d) + tol):
            raise ArithmeticError("numeric root outside its isolating rectangle")
        if b == d == 0:
            return re
        return best


@dataclass(frozen=True)
class AlgPoint:
    """A point of P^1 over Q-bar: a root of ``min_poly`` or infinity."""

    min_poly: UniPoly | None
    rect: Rect | None = None
    index: int = 0

    @property
    def is_infinity(self) -> bool:
        return self.min_poly is None

    @property
    def degree(self) -> int:
        return 1 if self.min_poly is None else self.min_poly.degree()

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def value(self) -> Fraction | None:
        """The rational value for a finite rational point."""
        if self.min_poly is None or self.min_poly.degree() != 1:
            return None
        return -self.min_poly[0]

    def approx(self, dps: int = 15):
        if self.min_poly is None:
            return None
        return numeric_root(self.min_poly, self.index, dps)

    def sort_key(self):
        if self.min_poly is None:
            return (1,)
        return (0, self.min_poly.degree(), tuple(self.min_poly.coeffs), _rect_key(self.rect))

    def describe(self) -> str:
        if self.min_poly is None:
            return "infinity"
        v = self.value()
        if v is not None:
            return render_rat(v)
        return f"root #{self.index} of {self.min_poly}"

    def __repr__(self):
        return f"AlgPoint({self.describe()})"


INFINITY = AlgPoint(None)


def rational_point(v) -> AlgPoint:
    v = Fraction(v)
    return AlgPoint(UniPoly([-v, 1], "T"), ((v, Fraction(0)), (v, Fraction(0))), 0)


def points_of(f: UniPoly) -> list[AlgPoint]:
    """All roots of a squarefree-over-Q polynomial, grouped by Q-factor."""
    from .factor import factor_q

    out = []
    for g, _ in factor_q(f)[1]:
        g = g.with_var("T")
        for i, r in enumerate(isolate_roots(g)):
            out.append(AlgPoint(g, r, i))
    out.sort(key=AlgPoint.sort_key)
    return out


def rect_json(r: Rect) -> list:
    (a, b), (c, d) = r
    return [[render_rat(a), render_rat(b)], [render_rat(c), render_rat(d)]]
