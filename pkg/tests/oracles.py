"""Independent numerical and brute-force oracles used by the tests."""
from fractions import Fraction

import mpmath


def _coeffs_at(p, t):
    cs = p.y_coeffs()
    out = []
    for a in cs:
        v = mpmath.mpc(0)
        for c in reversed(a.coeffs):
            c = Fraction(c)
            v = v * t + mpmath.mpf(c.numerator) / c.denominator
        out.append(v)
    return list(reversed(out))


def _roots(p, t):
    return mpmath.polyroots(_coeffs_at(p, t), maxsteps=300, extraprec=60)


def monodromy_cycle_type(p, center, radius, steps=720):
    """Cycle lengths of the permutation of Y-roots along a loop around ``center``.

    ``center=None`` loops around infinity on the circle |T| = radius.
    """
    with mpmath.workdps(40):
        c = mpmath.mpc(0) if center is None else mpmath.mpc(center)

        def point(k):
            return c + radius * mpmath.expjpi(2 * mpmath.mpf(k) / steps)

        start = _roots(p, point(0))
        cur = list(start)
        for k in range(1, steps + 1):
            new = _roots(p, point(k))
            nxt = []
            used = set()
            for z in cur:
                j = min((i for i in range(len(new)) if i not in used), key=lambda i: abs(new[i] - z))
                used.add(j)
                nxt.append(new[j])
            cur = nxt
        perm = [min(range(len(start)), key=lambda i: abs(start[i] - z)) for z in cur]
    seen, lengths = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        n, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            n += 1
        lengths.append(n)
    return sorted(lengths, reverse=True)


def brute_is_square(q: Fraction) -> bool:
    from math import isqrt

    q = Fraction(q)
    return q >= 0 and isqrt(q.numerator) ** 2 == q.numerator and isqrt(q.denominator) ** 2 == q.denominator


def quadratic_residues(p: int) -> set:
    return {(a * a) % p for a in range(1, p)}


def brute_legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if a in quadratic_residues(p) else -1


def _track(p, path, start):
    cur = list(start)
    for t in path[1:]:
        new = _roots(p, t)
        nxt, used = [], set()
        for z in cur:
            j = min((i for i in range(len(new)) if i not in used), key=lambda i: abs(new[i] - z))
            used.add(j)
            nxt.append(new[j])
        cur = nxt
    return cur


def monodromy_group(p, branch_values, steps=300):
    """Permutation group generated by loops around the finite branch points.

    Loops start at a fixed generic base point, run straight towards each
    branch point, circle it once and come back.
    """
    from sympy.combinatorics import Permutation, PermutationGroup

    gens = []
    with mpmath.workdps(40):
        vals = [mpmath.mpc(v) for v in branch_values]
        span = max([abs(v) for v in vals] + [1])
        base = mpmath.mpc(0.3712, 1.9137) * span
        start = _roots(p, base)
        for v in vals:
            others = [abs(v - w) for w in vals if w != v]
            r = min(others) / 3 if others else span / 2
            d = (base - v) / abs(base - v)
            near = v + r * d
            seg = [base + (near - base) * mpmath.mpf(k) / steps for k in range(steps + 1)]
            ang = mpmath.arg(d)
            circ = [v + r * mpmath.expj(ang + 2 * mpmath.pi * mpmath.mpf(k) / steps) for k in range(steps + 1)]
            path = seg + circ[1:] + list(reversed(seg))[1:]
            end = _track(p, path, start)
            perm = [min(range(len(start)), key=lambda i: abs(start[i] - z)) for z in end]
            gens.append(Permutation(perm))
    return PermutationGroup(gens)


def _v(n: int, p: int) -> int:
    if n == 0:
        return 10 ** 6
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def conductor_exponent_large_p(c4: int, c6: int, disc: int, p: int):
    """(f_p, Kodaira symbol) for p >= 5 from valuations of a minimal model.

    Scales (c4, c6, disc) down by p^(4, 6, 12) while possible, then reads the
    reduction type off the valuations and applies Ogg's formula
    f = v(disc) + 1 - (number of components).
    """
    assert p >= 5
    while _v(c4, p) >= 4 and _v(c6, p) >= 6 and _v(disc, p) >= 12:
        c4, c6, disc = c4 // p ** 4, c6 // p ** 6, disc // p ** 12
    n = _v(disc, p)
    if n == 0:
        return 0, "I0"
    if _v(c4, p) == 0:
        return 1, f"I{n}"
    if 3 * _v(c4, p) - n < 0:          # potentially multiplicative: v(j) < 0
        m = n - 6
        symbol, comps = f"I{m}*", 5 + m
    else:
        symbol, comps = {2: ("II", 1), 3: ("III", 2), 4: ("IV", 3), 6: ("I0*", 5),
                         8: ("IV*", 7), 9: ("III*", 8), 10: ("II*", 9)}[n]
    return n + 1 - comps, symbol
