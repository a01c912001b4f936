"""Exact arithmetic: polynomials over Q and small number fields."""
from __future__ import annotations


from .bipoly import BiPoly, disc_y, resultant_y
from .cyclo import cos_minpoly, cyclotomic, has_cos_of_root_of_unity, has_root_of_unity
from .factor import (
    Extension,
    extend,
    factor_over,
    factor_over_Q,
    factor_q,
    is_square_in,
    root_in_field,
    roots_in_field,
    squarefree_part,
)
from .field import QQ, NFElem, NumberField, base_field
from .poly import UniPoly, is_squarefree, poly_gcd, poly_gcdex, yun
from .roots import INFINITY, AlgPoint, isolate_roots, points_of, rational_point


def rat_func_is_square(f: UniPoly, g: UniPoly, over_closure: bool, k: NumberField = QQ) -> bool:
    """Whether f/g is a square in k(T), or in kbar(T) when ``over_closure``.

    f/g is a square iff f*g is; every irreducible factor must occur to even
    multiplicity, and over k the leading coefficient must be a square in k.
    """
    if g.is_zero():
        raise ZeroDivisionError("denominator is zero")
    if f.is_zero():
        return True
    h = f * g
    if any(m % 2 for _, m in yun(h)):
        return False
    if over_closure:
        return True
    return is_square_in(h.lc(), k)


__all__ = [
    "AlgPoint", "BiPoly", "Extension", "INFINITY", "NFElem", "NumberField", "QQ", "UniPoly",
    "base_field", "cos_minpoly", "cyclotomic", "disc_y", "extend", "factor_over", "factor_over_Q",
    "factor_q", "has_cos_of_root_of_unity", "has_root_of_unity", "is_square_in", "is_squarefree",
    "isolate_roots", "points_of", "poly_gcd", "poly_gcdex", "rat_func_is_square", "rational_point",
    "resultant_y", "root_in_field", "roots_in_field", "squarefree_part", "yun",
]
