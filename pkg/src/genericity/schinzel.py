"""Elliptic curves over Q: integral models, Tate's algorithm, root numbers, twists.

Used to test the root-number hypotheses behind the non-parametricity of
Y^2 - Q(T) with Q a cubic, and to search for rational points on twists.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import sympy
from sympy.functions.combinatorial.numbers import jacobi_symbol, kronecker_symbol
from sympy.ntheory import factorint

from .errors import NotSquarefree, Singular, UnsupportedM, WrongDegree
from .exact.field import QQ, NumberField, coerce
from .exact.poly import UniPoly

CM_DISCRIMINANTS = (11, 19, 43, 67, 163)

# ---------------------------------------------------------------------------
# curves


@dataclass(frozen=True)
class EllipticCurve:
    """Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    def __post_init__(self):
        if self.disc == 0:
            raise Singular("discriminant vanishes")

    @property
    def ainvs(self) -> tuple[int, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b2(self):
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self):
        a1, a2, a3, a4, a6 = self.ainvs
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def c4(self):
        return self.b2 ** 2 - 24 * self.b4

    @property
    def c6(self):
        return -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def disc(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def j(self) -> Fraction:
        return Fraction(self.c4 ** 3, self.disc)

    def short_coeffs(self) -> tuple[Fraction, Fraction]:
        """(A, B) with the curve isomorphic to y^2 = x^3 + A x + B."""
        return Fraction(-self.c4, 48), Fraction(-self.c6, 864)

    def transform(self, r=0, s=0, t=0, u=1) -> "EllipticCurve":
        """Model in coordinates x = u^2 x' + r, y = u^3 y' + s u^2 x' + t."""
        a1, a2, a3, a4, a6 = self.ainvs
        n1 = a1 + 2 * s
        n2 = a2 - s * a1 + 3 * r - s * s
        n3 = a3 + r * a1 + 2 * t
        n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t
        n6 = a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1
        out = []
        for c, i in ((n1, 1), (n2, 2), (n3, 3), (n4, 4), (n6, 6)):
            q = Fraction(c, u ** i)
            if q.denominator != 1:
                raise ValueError("transformation leaves the integral model")
            out.append(q.numerator)
        return EllipticCurve(*out)

    def is_on(self, x, y) -> bool:
        a1, a2, a3, a4, a6 = self.ainvs
        return y * y + a1 * x * y + a3 * y == x ** 3 + a2 * x * x + a4 * x + a6

    def __str__(self):
        from .exact.render import render_uni

        lhs = "y^2"
        if self.a1:
            lhs += f" + {self.a1}*x*y" if self.a1 != 1 else " + x*y"
        if self.a3:
            lhs += f" + {self.a3}*y" if self.a3 != 1 else " + y"
        rhs = render_uni(UniPoly([self.a6, self.a4, self.a2, 1], "x"))
        return (lhs + " = " + rhs).replace("+ -", "- ")


def integral_short_model(q: UniPoly) -> EllipticCurve:
    """Integral model of y^2 = q(x) reached by (x, y) -> (x/l^2, y/l^3), l minimal."""
    if q.degree() != 3:
        raise WrongDegree("the cubic must have degree 3")
    cs = [Fraction(c) for c in q.coeffs]
    lead = cs[3]
    # y^2 = c x^3 + ...: x = X/c, y = Y/c gives a monic cubic
    a2, a4, a6 = cs[2], cs[1] * lead, cs[0] * lead * lead
    if a2 * a2 * a4 * a4 - 4 * a4 ** 3 - 4 * a2 ** 3 * a6 - 27 * a6 * a6 + 18 * a2 * a4 * a6 == 0:
        raise Singular("the cubic has a repeated root")
    lam = 1
    while True:
        vals = (a2 * lam ** 2, a4 * lam ** 4, a6 * lam ** 6)
        if all(v.denominator == 1 for v in vals):
            return EllipticCurve(0, vals[0].numerator, 0, vals[1].numerator, vals[2].numerator)
        lam += 1


def curve_from_short(A, B) -> EllipticCurve:
    return integral_short_model(UniPoly([B, A, 0, 1], "x"))


# ---------------------------------------------------------------------------
# Tate's algorithm


def _val(n: int, p: int) -> int:
    if n == 0:
        return 10 ** 9
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return int(jacobi_symbol(a, p))


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n)."""
    return int(kronecker_symbol(a, n))


def _roots_mod(coeffs_high_first, p: int) -> list[int]:
    x = sympy.Symbol("_x")
    f = sympy.Poly(coeffs_high_first, x, modulus=p)
    if f.is_zero:
        return list(range(p))
    return sorted(int(r) % p for r in f.ground_roots())


def _has_root_mod(coeffs_high_first, p: int) -> bool:
    return bool(_roots_mod(coeffs_high_first, p))


@dataclass(frozen=True)
class LocalData:
    p: int
    kodaira: str
    f_p: int
    reduction: str
    w_p: int | None           # None when unknown (additive at 2 or 3)
    min_disc_valuation: int


def _singular_to_origin(E: EllipticCurve, p: int) -> EllipticCurve:
    """Move the singular point of the reduction to (0, 0)."""
    if p <= 3:
        for r in range(p):
            for t in range(p):
                F = E.transform(r, 0, t)
                if F.a3 % p == 0 and F.a4 % p == 0 and F.a6 % p == 0:
                    return F
        raise AssertionError("no singular point found")
    b2, b4, b6 = E.b2, E.b4, E.b6
    x = sympy.Symbol("_x")
    f = sympy.Poly([4, b2, 2 * b4, b6], x, modulus=p)
    g = sympy.gcd(f, f.diff(x))
    r = _roots_mod(g.all_coeffs(), p)[0]
    t = (-(E.a1 * r + E.a3) * pow(2, -1, p)) % p
    return E.transform(r, 0, t)


def tate_local(E: EllipticCurve, p: int) -> LocalData:
    """Kodaira symbol, conductor exponent and local root number at p."""
    while True:
        n = _val(E.disc, p)
        if n == 0:
            return LocalData(p, "I0", 0, "good", 1, 0)
        E = _singular_to_origin(E, p)
        if E.c4 % p:
            split = _has_root_mod([1, E.a1 % p, (-E.a2) % p], p)
            return LocalData(p, f"I{n}", 1, "split-multiplicative" if split else "nonsplit-multiplicative",
                             -1 if split else 1, n)
        if _val(E.a6, p) < 2:
            return _additive(p, "II", n, n)
        if _val(E.b8, p) < 3:
            return _additive(p, "III", n - 1, n)
        if _val(E.b6, p) < 3:
            return _additive(p, "IV", n - 2, n)
        E = _to_star_form(E, p)
        b, c, d = E.a2 // p, E.a4 // p ** 2, E.a6 // p ** 3
        w = 27 * d * d - b * b * c * c + 4 * b ** 3 * d - 18 * b * c * d + 4 * c ** 3
        xx = 3 * c - b * b
        if w % p:
            return _additive(p, "I0*", n - 4, n)
        if xx % p:
            alpha = next(a for a in range(p) if (a ** 3 + b * a * a + c * a + d) % p == 0
                         and (3 * a * a + 2 * b * a + c) % p == 0) if p <= 3 else \
                _double_root(b, c, d, p)
            E = E.transform(p * alpha, 0, 0)
            m = _star_subscript(E, p)
            return _additive(p, f"I{m}*", n - 4 - m, n)
        alpha = _triple_root(b, c, d, p)
        E = E.transform(p * alpha, 0, 0)
        x3, x6 = E.a3 // p ** 2, E.a6 // p ** 4
        if (x3 * x3 + 4 * x6) % p:
            return _additive(p, "IV*", n - 6, n)
        y = x6 % 2 if p == 2 else (-x3 * pow(2, -1, p)) % p
        E = E.transform(0, 0, p * p * y)
        if _val(E.a4, p) < 4:
            return _additive(p, "III*", n - 7, n)
        if _val(E.a6, p) < 6:
            return _additive(p, "II*", n - 8, n)
        E = E.transform(0, 0, 0, p)  # model was not minimal


def _to_star_form(E: EllipticCurve, p: int) -> EllipticCurve:
    """Coordinates with p | a1, a2; p^2 | a3, a4; p^3 | a6."""
    if p <= 3:
        for s in range(p):
            for t in range(0, p * p, p):
                F = E.transform(0, s, t)
                if (F.a1 % p == 0 and F.a2 % p == 0 and F.a3 % p ** 2 == 0
                        and F.a4 % p ** 2 == 0 and F.a6 % p ** 3 == 0):
                    return F
        raise AssertionError("no transformation to the star form")
    h = pow(2, -1, p)
    return E.transform(0, -E.a1 * h, -E.a3 * h)


def _double_root(b, c, d, p) -> int:
    # cubic T^3 + b T^2 + c T + d with a double (not triple) root mod p
    x = sympy.Symbol("_x")
    f = sympy.Poly([1, b, c, d], x, modulus=p)
    g = sympy.gcd(f, f.diff(x))
    return _roots_mod(g.all_coeffs(), p)[0]


def _triple_root(b, c, d, p) -> int:
    for a in range(p) if p <= 3 else [(-b * pow(3, -1, p)) % p]:
        if (b + 3 * a) % p == 0 and (c - 3 * a * a) % p == 0 and (d + a ** 3) % p == 0:
            return a
    raise AssertionError("no triple root")


def _star_subscript(E: EllipticCurve, p: int) -> int:
    """The m of type I_m* once the double root of the cubic sits at 0."""
    ix = iy = 3
    mx = my = p * p
    while True:
        a2t = E.a2 // p
        a3t = E.a3 // my
        a4t = E.a4 // (p * mx)
        a6t = E.a6 // (mx * my)
        if (a3t * a3t + 4 * a6t) % p:
            break
        y = a6t % 2 if p == 2 else (-a3t * pow(2, -1, p)) % p
        E = E.transform(0, 0, my * y)
        my *= p
        iy += 1
        a3t = E.a3 // my
        a6t = E.a6 // (mx * my)
        if (a4t * a4t - 4 * a2t * a6t) % p:
            break
        x = (a6t * a2t) % 2 if p == 2 else (-a4t * pow(2 * a2t, -1, p)) % p
        E = E.transform(mx * x, 0, 0)
        mx *= p
        ix += 1
    return ix + iy - 5


def _additive(p: int, kodaira: str, f: int, n: int) -> LocalData:
    if p <= 3:
        return LocalData(p, kodaira, f, "additive", None, n)
    if kodaira.endswith("*") and kodaira != "I0*":
        w = legendre(-1, p)          # potentially multiplicative
    else:
        e = 12 // gcd(n, 12)
        if e in (2, 6):
            w = legendre(-1, p)
        elif e == 3:
            w = legendre(-3, p)
        else:
            w = legendre(-2, p)
    return LocalData(p, kodaira, f, "additive", w, n)


_COMPONENTS = {"II": 1, "III": 2, "IV": 3, "I0*": 5, "IV*": 7, "III*": 8, "II*": 9}


def component_count(kodaira: str) -> int:
    """Number of irreducible components of the special fibre."""
    if kodaira in _COMPONENTS:
        return _COMPONENTS[kodaira]
    if kodaira.endswith("*"):
        return int(kodaira[1:-1]) + 5
    return max(int(kodaira[1:]), 1)


def ogg_exponent(ld: LocalData) -> int:
    """Conductor exponent from Ogg's formula v(Delta_min) + 1 - m."""
    if ld.reduction == "good":
        return 0
    return ld.min_disc_valuation + 1 - component_count(ld.kodaira)


# ---------------------------------------------------------------------------
# global data


@dataclass(frozen=True)
class CurveArithData:
    conductor: int
    W: int | None              # None when some local root number is unknown
    locals: tuple[LocalData, ...]

    @property
    def partial(self) -> bool:
        return self.W is None


def bad_primes(E: EllipticCurve) -> list[int]:
    return sorted(factorint(abs(E.disc)))


def conductor_and_root_number(E: EllipticCurve, overrides: dict | None = None) -> CurveArithData:
    """Conductor and global root number, W = -prod w_p.

    ``overrides`` supplies local root numbers the local machinery leaves
    unknown (additive reduction at 2 or 3).
    """
    locs = []
    for p in bad_primes(E):
        ld = tate_local(E, p)
        if ld.w_p is None and overrides and p in overrides:
            ld = LocalData(ld.p, ld.kodaira, ld.f_p, ld.reduction, overrides[p], ld.min_disc_valuation)
        locs.append(ld)
    N = 1
    for ld in locs:
        N *= ld.p ** ld.f_p
    W = -1
    for ld in locs:
        if ld.w_p is None:
            W = None
            break
        W *= ld.w_p
    return CurveArithData(N, W, tuple(locs))


def is_squarefree_int(d: int) -> bool:
    return d != 0 and all(e == 1 for e in factorint(abs(d)).values())


def fundamental_discriminant(d: int) -> int:
    """Discriminant of Q(sqrt d) for squarefree d != 1."""
    return d if d % 4 == 1 else 4 * d


def quadratic_twist(E: EllipticCurve, d: int) -> EllipticCurve:
    """Integral model of the twist by Q(sqrt d): y^2 = x^3 + A d^2 x + B d^3."""
    if not is_squarefree_int(d):
        raise NotSquarefree(f"{d} is not squarefree")
    if d == 1:
        return E
    A, B = E.short_coeffs()
    return curve_from_short(A * d * d, B * d ** 3)


def _twist_overrides(E: EllipticCurve, d: int) -> dict:
    """Local root numbers at 2 and 3 for twists of curves good there.

    For E with good reduction at p the twist by a character chi ramified at
    p has local root number chi_p(-1).
    """
    D = fundamental_discriminant(d)
    out = {}
    for p in (2, 3):
        if D % p or tate_local(E, p).reduction != "good":
            continue
        if p == 3:
            out[p] = legendre(-1, 3)
        else:
            sign = 1 if D > 0 else -1
            for q in factorint(abs(D)):
                if q != 2:
                    sign *= legendre(-1, q)
            out[p] = sign
    return out


@dataclass(frozen=True)
class TwistReport:
    d: int
    fundamental_discriminant: int
    W_E: int | None
    W_twist: int | None
    W_over_k: int | None
    shortcut: int | None = None

    @property
    def consistent(self) -> bool | None:
        if self.shortcut is None or self.W_twist is None:
            return None
        return self.shortcut == self.W_twist


def root_number_over_quadratic(E: EllipticCurve, d: int) -> TwistReport:
    """W(E/Q(sqrt d)) = W(E/Q) W(E^(d)/Q), with the character shortcut when gcd(D, N) = 1."""
    if not is_squarefree_int(d):
        raise NotSquarefree(f"{d} is not squarefree")
    base = conductor_and_root_number(E)
    if d == 1:
        W = base.W
        return TwistReport(1, 1, W, W, None if W is None else 1, W)
    D = fundamental_discriminant(d)
    tw = conductor_and_root_number(quadratic_twist(E, d), _twist_overrides(E, d))
    W_over = None if base.W is None or tw.W is None else base.W * tw.W
    shortcut = None
    if gcd(D, base.conductor) == 1 and base.W is not None:
        shortcut = kronecker(D, -base.conductor) * base.W
    return TwistReport(d, D, base.W, tw.W, W_over, shortcut)


# ---------------------------------------------------------------------------
# CM curves and the lawful-evil congruence

CM_CURVES = {
    11: (0, -1, 1, -7, 10),
    19: (0, 0, 1, -38, 90),
    43: (0, 0, 1, -860, 9707),
    67: (0, 0, 1, -7370, 243528),
    163: (0, 0, 1, -2174420, 1234136692),
}


def cm_curve(m: int) -> EllipticCurve:
    """Curve of conductor m^2 with CM by the maximal order of Q(sqrt -m)."""
    if m not in CM_CURVES:
        raise UnsupportedM(f"m must be one of {CM_DISCRIMINANTS}")
    return EllipticCurve(*CM_CURVES[m])


@dataclass(frozen=True)
class LawfulEvilEntry:
    d: int
    symbol: int
    verdict: str               # "passes", "fails" or "excluded"
    report: TwistReport | None = None
    note: str = ""


RANK_NOTE = ("W = -1 over Q(sqrt -d) predicts odd rank there (conditional on the parity "
             "conjecture), hence infinitely many points; not verified")


def lawful_evil_report(E: EllipticCurve, m: int, d_range: int) -> list[LawfulEvilEntry]:
    """For squarefree 0 < d <= d_range: the congruence (d|m) = 1 and W over Q(sqrt -d)."""
    if m not in CM_DISCRIMINANTS:
        raise UnsupportedM(f"m must be one of {CM_DISCRIMINANTS}")
    out = []
    for d in range(1, d_range + 1):
        if not is_squarefree_int(d):
            continue
        s = kronecker(d, m)
        if s == 0:
            out.append(LawfulEvilEntry(d, 0, "excluded"))
        elif s == -1:
            out.append(LawfulEvilEntry(d, -1, "fails"))
        else:
            rep = root_number_over_quadratic(E, -d)
            note = RANK_NOTE if rep.W_over_k == -1 else ""
            out.append(LawfulEvilEntry(d, 1, "passes", rep, note))
    return out


# ---------------------------------------------------------------------------
# rational points on twists


def _height_order(bound: int):
    from .build import height_order

    return height_order(bound)


def _field_elements(k: NumberField, bound: int):
    """Elements x + y*gen of k with x, y of height <= bound, by height."""
    if k.is_q:
        yield from _height_order(bound)
        return
    rats = list(_height_order(bound))
    def h(q):
        return max(abs(q.numerator), q.denominator)
    pairs = sorted(((x, y) for x in rats for y in rats),
                   key=lambda xy: (max(h(xy[0]), h(xy[1])), h(xy[1]), rats.index(xy[1]), rats.index(xy[0])))
    for x, y in pairs:
        yield coerce(k, x) + k.gen * y


def witness_search(q: UniPoly, u0, k: NumberField = QQ, height_bound: int = 10):
    """First (t, y) in k^2 with y^2 = u0 q(t), y != 0, in height order."""
    from .exact.factor import roots_in_field

    u0 = coerce(k, Fraction(u0) if not hasattr(u0, "c") else u0)
    for t in _field_elements(k, height_bound):
        v = u0 * q(t) if k.is_q else u0 * q.map_coeffs(lambda c: coerce(k, c))(t)
        if v == 0:
            continue
        if k.is_q:
            from .exact.factor import rational_sqrt

            y = rational_sqrt(Fraction(v))
            if y is not None:
                return t, y
        else:
            roots = roots_in_field(UniPoly([-v, 0, 1], "y"), k)
            if roots:
                return t, max(roots, key=lambda r: str(r))
    return None
