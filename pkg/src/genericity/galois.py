"""Galois groups over k(T), over kbar(T) and of specializations.

Degree <= 4 is decided exactly.  Roots of a monic polynomial with
coefficients in k[T] that lie in k(T) are polynomials of bounded degree,
so they are found by factoring a good specialization over k and lifting
each root T-adically; the lift is then checked by exact substitution.  The
same routine over kbar(T) lifts the roots of every factor (in the field it
generates) and counts them with the factor degree.

Degrees 5..8 go through :mod:`genericity.sampling` and are flagged as not
certified unless the symmetric group is proved.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    BranchPoint,
    DegreeTooLarge,
    Inseparable,
    NotMonic,
    Reducible,
)
from .exact.bipoly import BiPoly, disc_y, factor_count_over
from .exact.factor import extend, factor_over, is_square_in
from .exact.field import QQ, NumberField, coerce
from .exact.poly import UniPoly, yun
from .groups import A4, S4, V4, Cyclic, Dihedral, GroupId

MAX_DEGREE = 8
MAX_SPLITTING_DEGREE = 24


# ---------------------------------------------------------------------------
# validation


def check_cover_input(p: BiPoly, k: NumberField = QQ, irreducible: bool = True) -> None:
    """Raise the typed errors shared by every cover-level operation."""
    n = p.deg_y()
    if n < 1 or not p.is_monic_in_y():
        raise NotMonic("P must be monic in Y of positive degree")
    if n > MAX_DEGREE:
        raise DegreeTooLarge(f"deg_Y = {n} exceeds {MAX_DEGREE}")
    if disc_y(p).is_zero():
        raise Inseparable("P is inseparable in Y (zero discriminant)")
    if irreducible and _factor_count(p, k) != 1:
        raise Reducible(f"P is reducible over {k.describe()}(T)")


@lru_cache(maxsize=512)
def _factor_count(p: BiPoly, k: NumberField) -> int:
    return factor_count_over(p, k)


# ---------------------------------------------------------------------------
# roots in K(T) and square tests


def _shifted_coeffs(p: BiPoly, t0: Fraction) -> list[UniPoly]:
    """Coefficients a_j(t0 + s) of P as polynomials in s."""
    return [c.taylor_shift(t0).with_var("s") for c in p.y_coeffs()]


def _degree_bound(cs: list[UniPoly]) -> int:
    n = len(cs) - 1
    D = 0
    for j, c in enumerate(cs[:-1]):
        if not c.is_zero():
            D = max(D, -(-c.degree() // (n - j)))
    return D


def _eval(cs: list[UniPoly], y: UniPoly, prec: int | None = None) -> UniPoly:
    acc = UniPoly([], "s")
    for c in reversed(cs):
        acc = acc * y + c
        if prec is not None:
            acc = acc.truncate(prec)
    return acc


def _lift_root(cs: list[UniPoly], y0, D: int):
    """Lift a simple root y0 of R(0, Y) to a polynomial root, or None."""
    n = len(cs) - 1
    deriv = 0
    for j in range(1, n + 1):
        deriv = deriv + cs[j][0] * j * y0 ** (j - 1)
    y = UniPoly([y0], "s")
    for i in range(1, D + 1):
        c = _eval(cs, y, i + 1)[i]
        if c != 0:
            y = y + UniPoly.monomial(-c / deriv, i, "s")
    if not _eval(cs, y).is_zero():
        return None
    return y


@dataclass
class _Root:
    value: UniPoly          # root as a polynomial in s
    field: NumberField      # field of its coefficients
    embed: object           # map from the base field into ``field``
    weight: int             # number of kbar-conjugates it stands for


class _FieldCtx:
    """Root and square tests over K(s), or over Kbar(s) when ``closure``."""

    def __init__(self, K: NumberField, closure: bool):
        self.K = K
        self.closure = closure

    def roots(self, cs: list[UniPoly]) -> list[_Root]:
        K = self.K
        csK = [c.map_coeffs(lambda v: coerce(K, v)) for c in cs]
        base = UniPoly([c[0] for c in csK], "Y")
        D = _degree_bound(cs)
        _, facs = factor_over(base, K)
        out = []
        for g, mult in facs:
            if mult != 1:
                raise Inseparable("specialization used for lifting is not squarefree")
            if g.degree() == 1:
                y = _lift_root(csK, -g[0], D)
                if y is not None:
                    out.append(_Root(y, K, lambda v: v, 1))
            elif self.closure:
                ext = extend(K, g)
                csL = [c.map_coeffs(ext.embed) for c in csK]
                y = _lift_root(csL, ext.xi, D)
                if y is not None:
                    out.append(_Root(y, ext.L, ext.embed, g.degree()))
        return out

    def is_square(self, f: UniPoly, field: NumberField) -> bool:
        if f.is_zero():
            return True
        if any(m % 2 for _, m in yun(f)):
            return False
        return self.closure or is_square_in(f.lc(), field)


def _disc(cs: list[UniPoly]) -> UniPoly:
    n = len(cs) - 1
    if n == 2:
        a, b = cs[1], cs[0]
        return a * a - b * 4
    if n == 3:
        a, b, c = cs[2], cs[1], cs[0]
        return a * a * b * b - b * b * b * 4 - a * a * a * c * 4 - c * c * 27 + a * b * c * 18
    if n == 4:
        return _disc(_resolvent_cubic(cs))
    raise ValueError("closed-form discriminant only up to degree 4")


def _resolvent_cubic(cs: list[UniPoly]) -> list[UniPoly]:
    """Cubic whose roots are r1 r2 + r3 r4 and its conjugates."""
    a, b, c, d = cs[3], cs[2], cs[1], cs[0]
    one = UniPoly([1], "s")
    return [-(a * a * d - b * d * 4 + c * c), a * c - d * 4, -b, one]


def _group_small(cs: list[UniPoly], ctx: _FieldCtx) -> GroupId:
    n = len(cs) - 1
    if n == 1:
        return Cyclic(1)
    rho = sum(r.weight for r in ctx.roots(cs))
    if rho == n:
        return Cyclic(1)
    D = _disc(cs)
    if n == 2:
        return Cyclic(2)
    if n == 3 or (n == 4 and rho == 1):
        if rho == 1 and n == 3:
            return Cyclic(2)
        return Cyclic(3) if ctx.is_square(D, ctx.K) else Dihedral(3)
    if rho == 2:
        return Cyclic(2)
    # irreducible quartic, or a product of two irreducible quadratics
    res = _resolvent_cubic(cs)
    thetas = ctx.roots(res)
    rho3 = sum(r.weight for r in thetas)
    if rho3 == 0:
        return A4 if ctx.is_square(D, ctx.K) else S4
    a, b, d = cs[3], cs[2], cs[0]
    splits = []
    for th in thetas:
        L, emb = th.field, th.embed
        aL, bL, dL = (x.map_coeffs(lambda v: emb(coerce(ctx.K, v))) for x in (a, b, d))
        t = th.value
        d1 = t * t - dL * 4
        d2 = aL * aL - (bL - t) * 4
        splits.append((th, d1, d2, ctx.is_square(d1, L) and ctx.is_square(d2, L)))
    if rho3 == 3:
        return Cyclic(2) if any(s[3] for s in splits) else V4
    th, d1, d2, split = splits[0]
    if split:
        return V4
    L = th.field
    DL = D.map_coeffs(lambda v: th.embed(coerce(ctx.K, v)))

    def in_quadratic(delta):
        return ctx.is_square(delta, L) or ctx.is_square(delta * DL, L)

    return Cyclic(4) if in_quadratic(d1) and in_quadratic(d2) else Dihedral(4)


def _good_point(p: BiPoly) -> Fraction:
    """A rational t0 where P(t0, Y) is squarefree."""
    disc = disc_y(p)
    for t0 in _small_rationals():
        if disc(t0) != 0:
            return t0
    raise AssertionError("unreachable")


def _small_rationals():
    yield Fraction(0)
    h = 1
    while True:
        yield Fraction(h)
        yield Fraction(-h)
        h += 1


# ---------------------------------------------------------------------------
# public operations


@lru_cache(maxsize=512)
def _group_exact(p: BiPoly, k: NumberField, closure: bool) -> GroupId:
    t0 = _good_point(p)
    cs = _shifted_coeffs(p, t0)
    ctx = _FieldCtx(QQ if closure else k, closure)
    return _group_small(cs, ctx)


def group_over_function_field(p: BiPoly, k: NumberField = QQ) -> GroupId:
    """Galois group of P over k(T).

    Exact for deg_Y <= 4.  For larger degrees the answer comes from cycle
    type sampling and carries ``certified = False`` on the returned record
    of :func:`group_info` unless the symmetric group was proved.
    """
    return group_info(p, k).group


@dataclass(frozen=True)
class GroupInfo:
    group: GroupId
    certified: bool
    method: str


def group_info(p: BiPoly, k: NumberField = QQ) -> GroupInfo:
    check_cover_input(p, k)
    if p.deg_y() <= 4:
        return GroupInfo(_group_exact(p, k, False), True, "resolvent")
    from .sampling import sampled_group

    return sampled_group(p, k)


def geometric_group(p: BiPoly, k: NumberField = QQ) -> GroupInfo:
    """Galois group of P over kbar(T), i.e. of the geometric Galois closure."""
    check_cover_input(p, k)
    if p.deg_y() <= 4:
        return GroupInfo(_group_exact(p, k, True), True, "resolvent")
    from .sampling import sampled_geometric_group

    return sampled_geometric_group(p, k)


def polynomial_group(f: UniPoly, k: NumberField = QQ) -> GroupId:
    """Galois group over k of a separable univariate polynomial of degree <= 4."""
    f = f.monic()
    if f.degree() > 4:
        from .sampling import sampled_constant_group

        return sampled_constant_group(f, k).group
    cs = [UniPoly([c], "s") for c in f.coeffs]
    if not _disc_nonzero(f):
        raise Inseparable("polynomial is not separable")
    return _group_small(cs, _FieldCtx(k, False))


def _disc_nonzero(f: UniPoly) -> bool:
    from .exact.poly import is_squarefree

    return is_squarefree(f)


def fiber_at_infinity(p: BiPoly) -> UniPoly:
    """Polynomial whose roots describe the fiber above T = infinity.

    With X = 1/T the Newton polygon of X^d P(1/X, Y) has integral slopes
    when infinity is unramified; the product of the residual polynomials of
    its edges describes the fiber.  Residues of different edges belong to
    different places and may coincide, so only the squarefree part is kept;
    it has the same splitting field.
    """
    from .exact.factor import squarefree_part
    from .exact.poly import is_squarefree

    d = max(i for i, _ in p.coeffs)
    H = {(d - i, j): Fraction(c) for (i, j), c in p.coeffs.items() if c}
    vals: dict[int, int] = {}
    for (i, j) in H:
        vals[j] = min(vals.get(j, i), i)
    pts = sorted(vals.items())
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    f = UniPoly([Fraction(1)], "Y")
    for (j0, v0), (j1, v1) in zip(hull, hull[1:]):
        if (v1 - v0) % (j1 - j0):
            raise BranchPoint("infinity is a branch point")
        s = (v1 - v0) // (j1 - j0)
        res = UniPoly([H.get((v0 + s * (j - j0), j), Fraction(0)) for j in range(j0, j1 + 1)], "Y")
        if not is_squarefree(res):
            raise Inseparable("the fiber at infinity is not visible on the Newton polygon")
        f = f * res
    return squarefree_part(f).monic()


def _check_specialization(p: BiPoly, t0, k: NumberField) -> UniPoly:
    from .cover import branch_data

    check_cover_input(p, k)
    pts = branch_data(p, k)
    if t0 is None:
        if any(b.point.is_infinity for b in pts):
            raise BranchPoint("infinity is a branch point")
        f = fiber_at_infinity(p)
    else:
        t0 = Fraction(t0)
        if any(b.point.value() == t0 for b in pts):
            raise BranchPoint(f"t0 = {t0} is a branch point")
        f = p.subs_t(t0)
    if not _disc_nonzero(f):
        raise Inseparable(f"P(t0, Y) is inseparable at t0 = {t0}")
    return f


def group_of_specialization(p: BiPoly, t0, k: NumberField = QQ) -> GroupId:
    """Galois group over k of the splitting field of P(t0, Y).

    ``t0`` is a rational number or None for infinity (where the monic model
    in the chart at infinity is specialized).
    """
    f = _check_specialization(p, t0, k)
    return polynomial_group(f, k)


@dataclass(frozen=True)
class SplittingFieldDesc:
    degree: int
    kernel: object | None
    defining_poly: UniPoly | None
    group: GroupId


def splitting_field(f: UniPoly, k: NumberField = QQ):
    """Splitting field of f over k as an absolute number field, with degree over k."""
    L = k
    emb = lambda v: coerce(k, v)  # noqa: E731
    f = f.map_coeffs(lambda v: coerce(k, v))
    while True:
        fL = f.map_coeffs(emb)
        _, facs = factor_over(fL, L)
        big = [g for g, _ in facs if g.degree() > 1]
        if not big:
            return L, L.degree // k.degree
        g = min(big, key=lambda g: g.degree())
        if (L.degree * g.degree()) // k.degree > MAX_SPLITTING_DEGREE:
            raise DegreeTooLarge("splitting field degree exceeds the cap")
        ext = extend(L, g, name="b")
        prev = emb
        emb = (lambda v, prev=prev, e=ext: e.embed(prev(v)))
        L = ext.L


def squarefree_kernel(c: Fraction) -> int:
    """Squarefree integer d with c = d * (rational square)."""
    from sympy import factorint

    c = Fraction(c)
    num = c.numerator * c.denominator
    sign = -1 if num < 0 else 1
    d = 1
    for q, e in factorint(abs(num)).items():
        if e % 2:
            d *= q
    return sign * d


def specialization_field(p: BiPoly, t0, k: NumberField = QQ) -> SplittingFieldDesc:
    f = _check_specialization(p, t0, k)
    G = polynomial_group(f, k)
    L, deg = splitting_field(f, k)
    kernel = None
    if deg == 2:
        _, facs = factor_over(f.map_coeffs(lambda v: coerce(k, v)), k)
        g = next(g for g, _ in facs if g.degree() == 2)
        disc = g[1] * g[1] - g[0] * 4
        kernel = squarefree_kernel(disc) if k.is_q else disc
    poly = L.minpoly if L.degree <= 6 else None
    return SplittingFieldDesc(deg, kernel, poly.with_var("x") if poly is not None else None, G)


def inertia_invariant(p: BiPoly, k: NumberField = QQ) -> list:
    """One inertia class per branch point, labelled by the element order.

    Inside the identified group the class of a distinguished inertia
    generator is recorded by its order (its cycle type on the roots is kept
    in the branch record); groups above order 24 are refused.
    """
    from .cover import branch_data
    from .errors import GroupTooLarge
    from .groups import MAX_ENUM_ORDER

    G = group_info(p, k).group
    if G.order > MAX_ENUM_ORDER:
        raise GroupTooLarge(f"inertia labels need |G| <= {MAX_ENUM_ORDER}")
    return [b.inertia_class for b in branch_data(p, k)]
