"""Ramification of the places above X = 0 of a plane curve H(X, Y) = 0.

The computation follows Duval's rational Newton-Puiseux algorithm: every
edge of the Newton polygon with slope m/q (lowest terms) and every factor
of its residual polynomial either yields places of ramification q directly
(simple roots) or is refined by the substitution X = z^v X1^q,
Y = X1^m (z^u + Y1) with u*q - v*m = 1.  Everything is exact; there is no
series truncation, so the only failure mode is the depth cap.

Polynomials are dicts ``{(deg_X, deg_Y): coefficient}`` over a number field.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

from .errors import PrecisionExhausted
from .exact.factor import extend, factor_over
from .exact.field import NumberField, coerce
from .exact.poly import UniPoly

MAX_DEPTH = 40

Dict2 = dict


def _valuations(H: Dict2) -> dict[int, int]:
    """j -> X-adic valuation of the coefficient of Y^j."""
    vals: dict[int, int] = {}
    for (i, j) in H:
        if j not in vals or i < vals[j]:
            vals[j] = i
    return vals


def lower_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Vertices of the lower convex hull, sorted by abscissa."""
    pts = sorted(points)
    hull: list[tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it lies strictly below the chord
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return a, 1, 0
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


def _substitute(H: Dict2, K: NumberField, z, m: int, q: int, u: int, v: int, low: int) -> Dict2:
    """H(z^v X^q, X^m (z^u + Y)) / X^low."""
    zu = z ** u
    zv = z ** v
    out: dict = {}
    binoms: dict[int, list] = {}
    for (i, j), c in H.items():
        if j not in binoms:
            binoms[j] = [comb(j, r) * zu ** (j - r) for r in range(j + 1)]
        base = c * zv ** i
        e = q * i + m * j - low
        if e < 0:
            raise ArithmeticError("negative exponent after substitution")
        for r, b in enumerate(binoms[j]):
            key = (e, r)
            out[key] = out.get(key, 0) + base * b
    return {k: c for k, c in out.items() if c != 0}


def _strip_y(H: Dict2) -> tuple[Dict2, int]:
    """Remove the largest power of Y dividing H."""
    k = min(j for _, j in H)
    if k == 0:
        return H, 0
    return {(i, j - k): c for (i, j), c in H.items()}, k


def ramification(H: Dict2, K: NumberField, jmax: int | None = None, depth: int = 0) -> list[int]:
    """Ramification indices (over K-bar) of the places above X = 0.

    With ``jmax`` None every root of H in Y is accounted for and the result
    sums to deg_Y(H).  Otherwise only the roots tending to zero are
    considered, which is the situation after a Duval substitution where
    exactly ``jmax`` such roots exist.
    """
    if depth > MAX_DEPTH:
        raise PrecisionExhausted("Newton-Puiseux recursion depth exceeded")
    H, k = _strip_y(H)
    out = [1] * k
    if jmax is not None:
        jmax -= k
        if jmax <= 0:
            return out
    vals = _valuations(H)
    top = max(vals) if jmax is None else jmax
    pts = [(j, vals[j]) for j in sorted(vals) if j <= top]
    hull = lower_hull(pts)
    for (ja, va), (jb, vb) in zip(hull, hull[1:]):
        if jmax is not None and va == vb:
            continue
        num, den = va - vb, jb - ja
        g = gcd(num, den)
        m, q = num // g, den // g
        # residual polynomial on the edge
        res = [0] * (den // q + 1)
        for j in range(ja, jb + 1, q):
            i = va - (j - ja) * m // q
            c = H.get((i, j), 0)
            res[(j - ja) // q] = c
        phi = UniPoly([coerce(K, c) for c in res], "Z")
        _, facs = factor_over(phi, K)
        for psi, mult in facs:
            if psi.degree() == 1 and psi[0] == 0:
                continue
            if mult == 1:
                out.extend([q] * psi.degree())
                continue
            ext = extend(K, psi)
            L, z = ext.L, ext.xi
            HL = {key: ext.embed(c) for key, c in H.items()} if L is not K else H
            _, u, v = _egcd(q, m)
            # u*q + v*m = 1; we need u*q - v'*m = 1, so v' = -v
            v = -v
            low = q * va + m * ja
            H1 = _substitute(HL, L, z, m, q, u, v, low)
            sub = ramification(H1, L, jmax=mult, depth=depth + 1)
            out.extend([q * e for e in sub] * psi.degree())
    return out


def shift_to_point(coeffs: dict, K: NumberField, theta) -> Dict2:
    """P(X + theta, Y) for P given as ``{(deg_T, deg_Y): rational}``."""
    out: dict = {}
    powers = [coerce(K, 1)]
    maxdeg = max(i for i, _ in coeffs)
    for _ in range(maxdeg):
        powers.append(powers[-1] * theta)
    for (i, j), c in coeffs.items():
        for r in range(i + 1):
            key = (r, j)
            out[key] = out.get(key, 0) + coerce(K, c) * comb(i, r) * powers[i - r]
    return {k: c for k, c in out.items() if c != 0}


def chart_at_infinity(coeffs: dict) -> tuple[Dict2, int]:
    """Monic model of P(1/X, Y/X^w) * X^(n w) with minimal weight ``w``."""
    n = max(j for _, j in coeffs)
    w = 0
    for (i, j) in coeffs:
        if j < n:
            w = max(w, -(-i // (n - j)))
    out = {(w * (n - j) - i, j): Fraction(c) for (i, j), c in coeffs.items()}
    return out, w
