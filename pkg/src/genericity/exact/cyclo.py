"""Membership of roots of unity and of 2cos(2*pi/n) in a number field."""
from __future__ import annotations

from functools import lru_cache

import sympy

from .field import NumberField
from .poly import UniPoly


@lru_cache(maxsize=256)
def cyclotomic(n: int, var: str = "x") -> UniPoly:
    """The n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    p = sympy.Poly(sympy.cyclotomic_poly(n, sympy.Symbol("_c")))
    return UniPoly([int(c) for c in reversed(p.all_coeffs())], var)


@lru_cache(maxsize=256)
def cos_minpoly(n: int, var: str = "x") -> UniPoly:
    """Minimal polynomial over Q of 2cos(2*pi/n).

    For n >= 3 the cyclotomic polynomial is palindromic of even degree 2m, so
    x^-m * Phi_n(x) is a polynomial in x + 1/x; we rewrite it in that variable.
    """
    if n == 1:
        return UniPoly([-2, 1], var)
    if n == 2:
        return UniPoly([2, 1], var)
    phi = cyclotomic(n)
    m = phi.degree() // 2
    # x^k + x^-k as polynomials D_k(z) in z = x + 1/x (Dickson recursion)
    dk = [UniPoly([2], var), UniPoly([0, 1], var)]
    for k in range(2, m + 1):
        dk.append(UniPoly([0, 1], var) * dk[k - 1] - dk[k - 2])
    out = UniPoly([phi[m]], var)
    for k in range(1, m + 1):
        out = out + dk[k] * phi[m + k]
    return out.monic()


def _has_root(f: UniPoly, k: NumberField) -> bool:
    if f.degree() == 1:
        return True
    if k.degree % f.degree() != 0:
        return False
    from .factor import root_in_field

    return root_in_field(f, k) is not None


def has_root_of_unity(k: NumberField, n: int) -> bool:
    """Whether a primitive n-th root of unity lies in ``k``."""
    if n < 1:
        raise ValueError("n must be positive")
    return _has_root(cyclotomic(n), k)


def has_cos_of_root_of_unity(k: NumberField, n: int) -> bool:
    """Whether 2cos(2*pi/n) lies in ``k``."""
    if n < 1:
        raise ValueError("n must be positive")
    return _has_root(cos_minpoly(n), k)
