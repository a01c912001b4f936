"""Factorization over Q and over number fields.

Over Q the work is delegated to sympy.  Over a number field ``K = Q(a)``
we use Trager's norm method: shift ``f(z) -> f(z - s*a)`` until the norm
down to Q is squarefree, factor the norm over Q and pull the factors back
with gcds in ``K[z]``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import sympy
from sympy.polys.domains import QQ as SQQ

from ..errors import DegreeTooLarge, ZeroPolynomial
from .field import NFElem, NumberField, coerce, lift
from .poly import UniPoly, is_squarefree, poly_gcd, yun

MAX_FACTOR_DEGREE = 12

_z, _x = sympy.symbols("_z _x")


def _to_sympy_q(f: UniPoly, sym=_z) -> sympy.Poly:
    rep = [SQQ(c.numerator, c.denominator) for c in reversed([Fraction(c) for c in f.coeffs])]
    return sympy.Poly.from_list(rep or [0], sym, domain=SQQ)


def _from_sympy_q(p: sympy.Poly, var: str) -> UniPoly:
    return UniPoly([Fraction(int(c.numerator), int(c.denominator))
                    for c in reversed(p.rep.to_list())], var)


@lru_cache(maxsize=4096)
def _factor_q_cached(coeffs: tuple, var: str):
    f = UniPoly(coeffs, var)
    lead, facs = _to_sympy_q(f).factor_list()
    out = []
    for g, m in facs:
        gp = _from_sympy_q(g, var)
        c = gp.lc()
        lead = lead * SQQ(c.numerator, c.denominator) ** m
        out.append((gp.monic(), m))
    out.sort(key=lambda t: (t[0].degree(), [Fraction(c) for c in t[0].coeffs], t[1]))
    return Fraction(int(lead.numerator), int(lead.denominator)), tuple(out)


def factor_q(f: UniPoly) -> tuple[Fraction, list[tuple[UniPoly, int]]]:
    """Factor over Q without a degree cap (internal use)."""
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    c = tuple(Fraction(x) if not isinstance(x, NFElem) else x.rational() for x in f.coeffs)
    lead, facs = _factor_q_cached(c, f.var)
    return lead, list(facs)


def factor_over_Q(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic irreducible factors of ``f`` over Q with multiplicities.

    >>> factor_over_Q(UniPoly.from_ints([-1, 0, 1]))
    [(UniPoly(T - 1), 1), (UniPoly(T + 1), 1)]
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if f.degree() > MAX_FACTOR_DEGREE:
        raise DegreeTooLarge(f"degree {f.degree()} exceeds the factorization cap {MAX_FACTOR_DEGREE}")
    return factor_q(f)[1]


def squarefree_part(f: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors of ``f``."""
    if f.is_zero():
        raise ZeroPolynomial("squarefree part of zero")
    out = UniPoly([1], f.var)
    for g, _ in yun(f):
        out = out * g
    return out


# ---------------------------------------------------------------------------
# number fields


def _norm(K: NumberField, f: UniPoly) -> UniPoly:
    """Norm from K[z] down to Q[z]: Res_x(m(x), F(z, x))."""
    terms = {}
    for j, c in enumerate(f.coeffs):
        for i, v in enumerate(lift(c).coeffs):
            if v:
                terms[(i, j)] = SQQ(v.numerator, v.denominator)
    F = sympy.Poly.from_dict(terms, _x, _z, domain=SQQ)
    m = sympy.Poly.from_dict({(i, 0): SQQ(v.numerator, v.denominator)
                              for i, v in enumerate(K.minpoly.coeffs) if v},
                             _x, _z, domain=SQQ)
    res = sympy.Poly(m.resultant(F), _z, domain=SQQ)
    return _from_sympy_q(res, f.var)


def _shifted(K: NumberField, f: UniPoly, s: int) -> UniPoly:
    if s == 0:
        return f
    return f.taylor_shift(K.gen * (-s))


def _shift_sequence():
    yield 0
    s = 1
    while True:
        yield s
        yield -s
        s += 1


def _trager_squarefree(f: UniPoly, K: NumberField) -> list[UniPoly]:
    """Irreducible monic factors over K of a squarefree monic ``f``."""
    if f.degree() <= 1:
        return [f]
    for s in _shift_sequence():
        g = _shifted(K, f, s)
        N = _norm(K, g)
        if is_squarefree(N):
            break
        if s > 50:
            raise ArithmeticError("no squarefree norm found")
    _, facs = factor_q(N)
    if len(facs) == 1:
        return [f]
    out = []
    for h, _ in facs:
        hK = h.map_coeffs(lambda c: coerce(K, c))
        gi = poly_gcd(g, hK)
        out.append(_shifted(K, gi, -s) if s else gi)
    return out


def _sort_key(g: UniPoly):
    key = []
    for c in g.coeffs:
        if isinstance(c, NFElem):
            key.append(tuple(c.c))
        else:
            key.append((Fraction(c),))
    return (g.degree(), key)


def factor_over(f: UniPoly, K: NumberField) -> tuple[object, list[tuple[UniPoly, int]]]:
    """Factor ``f`` (coefficients in K) into monic irreducibles over K."""
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    f = f.map_coeffs(lambda c: coerce(K, c))
    lead = f.lc()
    if K.is_q:
        c, facs = factor_q(f)
        return c, facs
    out = []
    for g, m in yun(f):
        for h in _trager_squarefree(g.monic(), K):
            out.append((h.monic(), m))
    out.sort(key=lambda t: (_sort_key(t[0]), t[1]))
    return lead, out


def roots_in_field(f: UniPoly, K: NumberField) -> list:
    """Distinct roots of ``f`` lying in ``K``."""
    _, facs = factor_over(f, K)
    return [-g[0] for g, _ in facs if g.degree() == 1]


def root_in_field(f: UniPoly, k: NumberField):
    """Some root of ``f`` in ``k``, or None."""
    if f.degree() > MAX_FACTOR_DEGREE:
        raise DegreeTooLarge(f"degree {f.degree()} exceeds the factorization cap")
    roots = roots_in_field(f, k)
    return roots[0] if roots else None


def is_square_in(c, K: NumberField) -> bool:
    if c == 0:
        return True
    if K.is_q or (isinstance(c, NFElem) and c.is_rational()) or not isinstance(c, NFElem):
        q = Fraction(c) if not isinstance(c, NFElem) else c.rational()
        if q > 0 and _is_rational_square(q):
            return True
        if K.is_q:
            return False
    return bool(roots_in_field(UniPoly([-coerce(K, c), 0, 1], "x"), K))


def _is_rational_square(q: Fraction) -> bool:
    from math import isqrt

    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def rational_sqrt(q: Fraction) -> Fraction | None:
    from math import isqrt

    if q < 0 or not _is_rational_square(q):
        return None
    return Fraction(isqrt(q.numerator), isqrt(q.denominator))


# ---------------------------------------------------------------------------
# extensions


class Extension:
    """A simple extension K(xi) realized as an absolute field ``L``.

    ``embed`` maps elements of K into L and ``xi`` is the adjoined root.
    """

    def __init__(self, L: NumberField, embed, xi):
        self.L = L
        self.embed = embed
        self.xi = xi


def extend(K: NumberField, psi: UniPoly, name: str = "b") -> Extension:
    """Adjoin a root of the monic irreducible ``psi`` over K."""
    psi = psi.map_coeffs(lambda c: coerce(K, c)).monic()
    if psi.degree() == 1:
        return Extension(K, lambda e: e, -psi[0])
    if K.is_q:
        L = NumberField(psi, name=name, check=False)
        return Extension(L, lambda e: L(e), L.gen)
    for s in _shift_sequence():
        if s == 0:
            continue
        g = _shifted(K, psi, s)
        N = _norm(K, g)
        if is_squarefree(N):
            break
    L = NumberField(N, name=name, check=False)
    theta2 = L.gen
    # psi(theta2 - s*x) with coefficients lifted to polynomials in x, over L
    X = UniPoly([0, 1], "x")
    acc = UniPoly([], "x")
    lin = UniPoly([theta2, L(-s)], "x")
    power = UniPoly([L(1)], "x")
    for c in psi.coeffs:
        cx = lift(c).map_coeffs(lambda v: L(v))
        acc = acc + cx * power
        power = power * lin
    mL = K.minpoly.map_coeffs(lambda v: L(v))
    g = poly_gcd(mL, acc)
    if g.degree() != 1:
        raise ArithmeticError("primitive element recovery failed")
    A = -g[0]
    del X

    def embed(e, A=A, L=L):
        if not isinstance(e, NFElem):
            return L(e)
        acc = L(0)
        pw = L(1)
        for v in e.c:
            if v:
                acc = acc + pw * v
            pw = pw * A
        return acc

    xi = theta2 - A * s
    return Extension(L, embed, xi)
