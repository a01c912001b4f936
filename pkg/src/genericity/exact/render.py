"""Canonical text rendering, inverse of :mod:`genericity.parse`.

Multiplication and powers are always explicit (``*`` and ``^``).
"""
from __future__ import annotations

from fractions import Fraction


def render_rat(c: Fraction) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _coeff_text(c) -> tuple[int, str]:
    """Split a coefficient into (sign, magnitude text); text '' means 1."""
    from .field import NFElem

    if isinstance(c, NFElem):
        if c.is_rational():
            return _coeff_text(c.rational())
        return 1, f"({c})"
    c = Fraction(c)
    sign = -1 if c < 0 else 1
    c = abs(c)
    return sign, "" if c == 1 else render_rat(c)


def _power(var: str, n: int) -> str:
    if n == 0:
        return ""
    return var if n == 1 else f"{var}^{n}"


def _join(terms: list[tuple[int, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for idx, (sign, body) in enumerate(terms):
        if idx == 0:
            out.append(("-" if sign < 0 else "") + body)
        else:
            out.append((" - " if sign < 0 else " + ") + body)
    return "".join(out)


def _term(c, monos: list[str]) -> tuple[int, str]:
    sign, mag = _coeff_text(c)
    parts = [m for m in monos if m]
    if mag:
        parts = [mag] + parts
    return sign, "*".join(parts) if parts else "1"


def render_uni(p) -> str:
    terms = []
    for i in range(p.degree(), -1, -1):
        c = p[i]
        if c == 0:
            continue
        terms.append(_term(c, [_power(p.var, i)]))
    return _join(terms)


def render_bi(p) -> str:
    keys = sorted(p.coeffs, key=lambda k: (k[1], k[0]), reverse=True)
    terms = [_term(p.coeffs[k], [_power("T", k[0]), _power("Y", k[1])]) for k in keys]
    return _join(terms)
