from fractions import Fraction as F

import mpmath
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from genericity.errors import DegreeTooLarge, Reducible
from genericity.exact import (
    QQ,
    BiPoly,
    UniPoly,
    base_field,
    cos_minpoly,
    cyclotomic,
    disc_y,
    extend,
    factor_over,
    has_cos_of_root_of_unity,
    has_root_of_unity,
    is_square_in,
    is_squarefree,
    isolate_roots,
    poly_gcd,
    poly_gcdex,
    rat_func_is_square,
    resultant_y,
    root_in_field,
    roots_in_field,
    yun,
)
from genericity.exact.render import render_bi, render_uni

x = sympy.Symbol("x")
T, Y = sympy.symbols("T Y")

small_rats = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.lists(small_rats, min_size=1, max_size=6).map(lambda cs: UniPoly(cs, "x"))


def to_sym(f: UniPoly):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)] or [0], x,
                      domain="QQ")


def Qi():
    return base_field(UniPoly([1, 0, 1], "x"), label="Q(i)")


# ---------------------------------------------------------------- UniPoly


@given(polys, polys)
def test_ring_ops_match_sympy(f, g):
    assert to_sym(f + g) == to_sym(f) + to_sym(g)
    assert to_sym(f * g) == to_sym(f) * to_sym(g)
    assert to_sym(f - g) == to_sym(f) - to_sym(g)


@given(polys, polys)
def test_divmod_identity(f, g):
    if g.is_zero():
        return
    q, r = f.divmod(g)
    assert q * g + r == f
    assert r.is_zero() or r.degree() < g.degree()


@given(polys, polys)
def test_gcd_matches_sympy(f, g):
    if f.is_zero() and g.is_zero():
        return
    d = poly_gcd(f, g)
    assert to_sym(d).monic() == sympy.gcd(to_sym(f), to_sym(g)).monic()


@given(polys, polys)
def test_gcdex_bezout(f, g):
    if f.is_zero() or g.is_zero():
        return
    d, s, t = poly_gcdex(f, g)
    assert s * f + t * g == d


@given(st.lists(polys.filter(lambda f: f.degree() >= 1), min_size=1, max_size=3),
       st.lists(st.integers(1, 3), min_size=3, max_size=3))
def test_yun_reassembles(fs, mults):
    f = UniPoly([1], "x")
    for g, m in zip(fs, mults):
        f = f * g ** m
    parts = yun(f)
    prod = UniPoly([f.lc()], "x")
    for g, m in parts:
        assert is_squarefree(g)
        prod = prod * g ** m
    assert prod == f


def test_render_univariate():
    assert render_uni(UniPoly([F(41, 4), -7, -1, 1], "T")) == "T^3 - T^2 - 7*T + 41/4"
    assert render_uni(UniPoly([], "x")) == "0"


# ---------------------------------------------------------------- fields


def test_field_arithmetic():
    K = Qi()
    i = K.gen
    assert i * i == K(-1)
    assert (1 + i) * (1 - i) == K(2)
    assert (1 + i).inverse() * (1 + i) == K(1)
    assert (1 + i) ** 4 == K(-4)


def test_reducible_field_rejected():
    with pytest.raises(Reducible):
        base_field(UniPoly([-4, 0, 1], "x"))
    with pytest.raises(DegreeTooLarge):
        base_field(cyclotomic(7))


@pytest.mark.parametrize("f,minpoly,ext", [
    (UniPoly([-2, 0, 1], "x"), UniPoly([-2, 0, 1], "x"), sympy.sqrt(2)),
    (UniPoly([1, 0, 0, 0, 1], "x"), UniPoly([1, 0, 1], "x"), sympy.I),
    (UniPoly([-2, 0, 0, 0, 1], "x"), UniPoly([-2, 0, 1], "x"), sympy.sqrt(2)),
    (UniPoly([-1, 0, 0, 1], "x"), UniPoly([1, 1, 1], "x"), sympy.sqrt(-3)),
])
def test_factor_over_matches_sympy(f, minpoly, ext):
    K = base_field(minpoly)
    _, facs = factor_over(f.map_coeffs(K), K)
    _, sym = sympy.factor_list(to_sym(f).as_expr(), x, extension=ext)
    assert sorted(g.degree() for g, _ in facs) == sorted(sympy.degree(g, x) for g, _ in sym)
    prod = UniPoly([K(1)], "x")
    for g, m in facs:
        prod = prod * g ** m
    assert prod == f.map_coeffs(K)


def test_roots_in_field():
    K = Qi()
    roots = roots_in_field(UniPoly([1, 0, 1], "x").map_coeffs(K), K)
    assert sorted(map(str, roots)) == sorted(map(str, [K.gen, -K.gen]))
    assert root_in_field(UniPoly([-2, 0, 1], "x"), QQ) is None


def test_is_square_in():
    K = Qi()
    assert is_square_in(F(-1), K)
    assert is_square_in(F(2) * K.gen, K)        # (1 + i)^2 = 2i
    assert not is_square_in(F(2), K)
    assert is_square_in(F(9, 4), QQ) and not is_square_in(F(-1), QQ)


def test_extend_contains_both_generators():
    K = base_field(UniPoly([-2, 0, 1], "x"))
    ext = extend(K, UniPoly([-3, 0, 1], "x").map_coeffs(K))
    L = ext.L
    assert L.degree == 4
    assert ext.xi * ext.xi == L(3)
    s2 = ext.embed(K.gen)
    assert s2 * s2 == L(2)


# ---------------------------------------------------------------- roots


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=6))
def test_isolation_matches_numeric_roots(cs):
    f = UniPoly(cs, "x")
    if f.degree() < 1 or not is_squarefree(f):
        return
    rects = isolate_roots(f)
    assert len(rects) == f.degree()
    numeric = mpmath.polyroots([int(c) for c in reversed(f.coeffs)], maxsteps=200, extraprec=100)
    for z in numeric:
        inside = [r for r in rects
                  if r[0][0] - F(1, 10 ** 9) <= F(str(mpmath.nstr(z.real, 30))) <= r[1][0] + F(1, 10 ** 9)
                  and r[0][1] - F(1, 10 ** 9) <= F(str(mpmath.nstr(mpmath.im(z), 30))) <= r[1][1] + F(1, 10 ** 9)]
        assert len(inside) >= 1


def test_isolation_order_real_first():
    rects = isolate_roots(UniPoly([1, 0, 1, 0, 0], "x") * UniPoly([-2, 0, 1], "x") + UniPoly([0], "x"))
    reals = [r for r in rects if r[0][1] == r[1][1] == 0]
    assert rects[:len(reals)] == reals


# ---------------------------------------------------------------- cyclotomy


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_matches_sympy(n):
    assert to_sym(cyclotomic(n)) == sympy.Poly(sympy.cyclotomic_poly(n, x), x, domain="QQ")


@pytest.mark.parametrize("n", range(3, 25))
def test_cos_minpoly_vanishes_numerically(n):
    f = cos_minpoly(n)
    with mpmath.workdps(50):
        z = 2 * mpmath.cos(2 * mpmath.pi / n)
        val = sum(mpmath.mpf(c.numerator) / c.denominator * z ** i for i, c in enumerate(F(c) for c in f.coeffs))
        assert abs(val) < mpmath.mpf(10) ** -40
    assert sympy.Poly(to_sym(f), x).is_irreducible
    assert f.degree() == sympy.totient(n) // 2


def test_root_of_unity_membership():
    Qi_ = Qi()
    Q3 = base_field(cyclotomic(3), label="Q(zeta_3)")
    Q5 = base_field(cyclotomic(5), label="Q(zeta_5)")
    assert has_root_of_unity(QQ, 2) and not has_root_of_unity(QQ, 4)
    assert has_root_of_unity(Qi_, 4) and not has_root_of_unity(Qi_, 8)
    assert has_root_of_unity(Q3, 6) and not has_root_of_unity(Q3, 4)
    assert has_cos_of_root_of_unity(QQ, 3) and has_cos_of_root_of_unity(QQ, 4)
    assert not has_cos_of_root_of_unity(QQ, 5)
    assert has_cos_of_root_of_unity(Q5, 5)
    assert has_cos_of_root_of_unity(base_field(UniPoly([-5, 0, 1], "x")), 5)


# ---------------------------------------------------------------- bivariate


def bi(expr) -> BiPoly:
    return BiPoly.from_sympy(sympy.Poly(sympy.sympify(expr), T, Y))


@pytest.mark.parametrize("expr", [
    "Y**3 + T*Y + T", "Y**3 - T*Y**2 + (T-3)*Y + 1", "Y**4 - T", "Y**2 - (T**3 - T**2 - 7*T + 41/4)",
    "Y**4 - T*Y - T", "Y**5 - 5*Y + T",
])
def test_discriminant_matches_sympy(expr):
    p = bi(expr)
    d = disc_y(p)
    oracle = sympy.Poly(sympy.discriminant(sympy.sympify(expr), Y), T)
    mine = sympy.Poly(sum(sympy.Rational(c.numerator, c.denominator) * T ** i
                          for i, c in enumerate(F(c) for c in d.coeffs)), T)
    assert mine == oracle


def test_resultant_matches_sympy():
    p, q = bi("Y**2 - T"), bi("Y**3 + T*Y + 1")
    r = resultant_y(p, q)
    oracle = sympy.Poly(sympy.resultant(sympy.sympify("Y**2 - T"), sympy.sympify("Y**3 + T*Y + 1"), Y), T)
    assert sympy.Poly(sum(sympy.Rational(F(c).numerator, F(c).denominator) * T ** i
                          for i, c in enumerate(r.coeffs)), T) == oracle


def test_bivariate_render_order():
    assert render_bi(bi("Y**3 - T*Y**2 + (T-3)*Y + 1")) == "Y^3 - T*Y^2 + T*Y - 3*Y + 1"
    assert str(bi("Y**2 - T")) == "Y^2 - T"


def test_rat_func_square():
    t = UniPoly([0, 1], "T")
    one = UniPoly([1], "T")
    assert rat_func_is_square(t * t * 4, one, False)
    assert not rat_func_is_square(t * t * -4, one, False)
    assert rat_func_is_square(t * t * -4, one, True)
    assert rat_func_is_square(t * t * -4, one, False, Qi())
    assert not rat_func_is_square(t, t * t, True)
