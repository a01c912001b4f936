"""Cycle-type sampling for Galois groups of degree 5..8.

Frobenius elements at primes of good reduction of specializations P(t0, Y)
give cycle types of elements of the Galois group over k(T) (primes that
split completely in k are used so that residue fields stay F_p).  The set of
observed cycle types is matched against a table of transitive groups; the
smallest group containing all of them is reported.  A symmetric or
alternating group is certified when the Jordan-type criteria apply:
an (n-1)-cycle makes a transitive group primitive, and a primitive group
containing a transposition (resp. a 3-cycle) contains S_n (resp. A_n).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import islice

import sympy
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.galois import S5TransitiveSubgroups, S6TransitiveSubgroups
from sympy.combinatorics.named_groups import CyclicGroup, DihedralGroup
from sympy.utilities.iterables import partitions

from .errors import Unsupported
from .exact.bipoly import BiPoly, disc_y
from .exact.field import QQ, NumberField
from .exact.poly import UniPoly
from .groups import Alt, GroupId, Sym, identify

N_SPECIALIZATIONS = 40
N_PRIMES = 25
CYCLOTOMIC_LEVELS = (3, 4, 5, 7, 8)


def _cycle_types_of_group(G: PermutationGroup) -> frozenset:
    return frozenset(_cycle_type(g) for g in G.elements)


def _cycle_type(g: Permutation) -> tuple:
    n = g.size
    lengths = [len(c) for c in g.cyclic_form]
    lengths += [1] * (n - sum(lengths))
    return tuple(sorted(lengths, reverse=True))


def _all_types(n: int, even_only: bool) -> frozenset:
    out = set()
    for part in partitions(n):
        lengths = []
        for size, mult in part.items():
            lengths += [size] * mult
        if even_only and sum(l - 1 for l in lengths) % 2:
            continue
        out.add(tuple(sorted(lengths, reverse=True)))
    return frozenset(out)


def _perm(cycles, n):
    return Permutation([list(c) for c in cycles], size=n)


def _affine(n: int, mult: int) -> PermutationGroup:
    """x -> x + 1 and x -> mult * x on Z/n."""
    return PermutationGroup([Permutation([(i + 1) % n for i in range(n)]),
                             Permutation([(mult * i) % n for i in range(n)])])


def _regular(G: PermutationGroup) -> PermutationGroup:
    """Right regular representation of a small group."""
    elems = list(G.elements)
    index = {e: i for i, e in enumerate(elems)}
    gens = [Permutation([index[e * g] for e in elems]) for g in G.generators]
    return PermutationGroup(gens)


@lru_cache(maxsize=None)
def _candidates(n: int) -> tuple:
    """(name-or-None, order, cycle types, group or None) for transitive groups."""
    groups = []
    if n == 5:
        groups = [g.get_perm_group() for g in S5TransitiveSubgroups][:3]
    elif n == 6:
        groups = [g.get_perm_group() for g in S6TransitiveSubgroups][:-2]
    elif n == 7:
        groups = [CyclicGroup(7), DihedralGroup(7), _affine(7, 2), _affine(7, 3),
                  PermutationGroup([Permutation([1, 2, 3, 4, 5, 6, 0]),
                                    _perm([(1, 2, 4), (3, 6, 5)], 7)])]
    elif n == 8:
        Q8 = PermutationGroup([_perm([(0, 1, 2, 3), (4, 5, 6, 7)], 8),
                               _perm([(0, 4, 2, 6), (1, 7, 3, 5)], 8)])
        groups = [CyclicGroup(8), DihedralGroup(8), Q8,
                  _regular(PermutationGroup([_perm([(0, 1, 2, 3)], 6), _perm([(4, 5)], 6)])),
                  _regular(PermutationGroup([_perm([(0, 1)], 6), _perm([(2, 3)], 6), _perm([(4, 5)], 6)])),
                  _regular(DihedralGroup(4)), _affine(8, 3), _affine(8, 5),
                  PermutationGroup(list(_affine(8, 3).generators) + [Permutation([(5 * i) % 8 for i in range(8)])])]
    out = [(None, G.order(), _cycle_types_of_group(G), G) for G in groups]
    from math import factorial

    out.append(("A", factorial(n) // 2, _all_types(n, True), None))
    out.append(("S", factorial(n), _all_types(n, False), None))
    out.sort(key=lambda c: c[1])
    return tuple(out)


def _primes_for(k: NumberField, level: int = 1, skip=()):
    """Primes splitting completely in k and congruent to 1 mod ``level``."""
    p = 3
    while True:
        p = int(sympy.nextprime(p))
        if level > 1 and p % level != 1:
            continue
        if p in skip:
            continue
        if not k.is_q:
            m = k.minpoly
            if any(Fraction(c).denominator % p == 0 for c in m.coeffs):
                continue
            mp = sympy.Poly([int(Fraction(c).numerator * pow(Fraction(c).denominator, -1, p)) % p
                             for c in reversed(m.coeffs)], sympy.Symbol("_m"), modulus=p)
            if mp.degree() != k.degree:
                continue
            _, facs = mp.factor_list()
            if sum(1 for f, e in facs if f.degree() == 1 and e == 1) != k.degree:
                continue
        yield p


def _mod_p_type(f: UniPoly, p: int):
    """Cycle type of Frobenius at p, or None if p is bad for f."""
    cs = []
    for c in f.coeffs:
        c = Fraction(c)
        if c.denominator % p == 0:
            return None
        cs.append(c.numerator * pow(c.denominator, -1, p) % p)
    if cs[-1] == 0:
        return None
    fp = sympy.Poly(list(reversed(cs)), sympy.Symbol("_y"), modulus=p)
    if sympy.gcd(fp, fp.diff()).degree() > 0:
        return None
    _, facs = fp.factor_list()
    return tuple(sorted((g.degree() for g, _ in facs), reverse=True))


def _sample_points(p: BiPoly, count: int):
    disc = disc_y(p)
    pts = []
    h = 0
    while len(pts) < count:
        for t0 in ([Fraction(0)] if h == 0 else [Fraction(h), Fraction(-h), Fraction(1, h + 1), Fraction(-1, h + 1)]):
            if disc(t0) != 0 and t0 not in pts:
                pts.append(t0)
        h += 1
    return pts[:count]


@lru_cache(maxsize=256)
def observed_types(p: BiPoly, k: NumberField, level: int = 1,
                   n_points: int = N_SPECIALIZATIONS, n_primes: int = N_PRIMES) -> frozenset:
    types = set()
    for t0 in _sample_points(p, n_points):
        f = p.subs_t(t0)
        got = 0
        for q in _primes_for(k, level):
            ct = _mod_p_type(f, q)
            if ct is None:
                continue
            types.add(ct)
            got += 1
            if got >= n_primes:
                break
    return frozenset(types)


def _disc_is_square(p: BiPoly, k: NumberField, closure: bool) -> bool:
    from .exact import rat_func_is_square

    return rat_func_is_square(disc_y(p), UniPoly([1]), closure, k)


def _match(n: int, types: frozenset, even: bool) -> tuple[GroupId, bool]:
    """Smallest candidate containing the observed types; second item = certified."""
    # transitive of prime degree, or containing an (n-1)-cycle, means primitive
    primitive = sympy.isprime(n) or (n - 1, 1) in types
    transposition = (2,) + (1,) * (n - 2) in types
    three_cycle = (3,) + (1,) * (n - 3) in types
    if primitive and transposition and not even:
        return Sym(n), True
    if primitive and three_cycle:
        return (Alt(n), True) if even else (Sym(n), True)
    for name, order, ctypes, G in _candidates(n):
        if not types <= ctypes:
            continue
        if even and name == "S":
            continue
        if G is not None and even and not all(_is_even_type(t) for t in ctypes):
            continue
        if name == "A":
            return Alt(n), False
        if name == "S":
            return Sym(n), False
        return identify(G), False
    return (Alt(n) if even else Sym(n)), False


def _is_even_type(t: tuple) -> bool:
    return sum(l - 1 for l in t) % 2 == 0


def sampled_group(p: BiPoly, k: NumberField = QQ):
    from .galois import GroupInfo

    n = p.deg_y()
    types = observed_types(p, k)
    G, cert = _match(n, types, _disc_is_square(p, k, False))
    return GroupInfo(G, cert, "sampling")


def sampled_geometric_group(p: BiPoly, k: NumberField = QQ):
    """Group over kbar(T) estimated over k(zeta_N)(T) for small levels N.

    A constant field extension shows up as a drop of the group order when
    the base is enlarged; the smallest group seen is reported.  A square
    discriminant over kbar(T) that is not a square over k(T) is an exact
    witness of such a drop.
    """
    from .galois import GroupInfo

    n = p.deg_y()
    even_geom = _disc_is_square(p, k, True)
    best = None
    for level in (1,) + CYCLOTOMIC_LEVELS:
        types = observed_types(p, k, level, 20, 15)
        G, cert = _match(n, types, even_geom)
        if best is None or G.order < best[0].order:
            best = (G, cert and level == 1)
    return GroupInfo(best[0], best[1] and not (even_geom and not _disc_is_square(p, k, False)),
                     "sampling")


def sampled_constant_group(f: UniPoly, k: NumberField = QQ):
    """Galois group over k of a univariate polynomial of degree 5..8."""
    from .galois import GroupInfo

    n = f.degree()
    from .exact.factor import factor_over, is_square_in

    if len(factor_over(f, k)[1]) != 1:
        raise Unsupported("Galois groups of reducible polynomials of degree >= 5 are not identified")
    if k.is_q and n <= 6:
        from sympy.polys.numberfields.galoisgroups import galois_group

        y = sympy.Symbol("_y")
        G, _ = galois_group(sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                                        for c in reversed(f.monic().coeffs)], y))
        return GroupInfo(identify(G), True, "sympy")
    types = set()
    for q in islice(_primes_for(k), 200):
        ct = _mod_p_type(f, q)
        if ct is not None:
            types.add(ct)
    disc = sympy.discriminant(sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                                          for c in reversed(f.coeffs)], sympy.Symbol("_y")))
    even = is_square_in(Fraction(int(sympy.Rational(disc).p), int(sympy.Rational(disc).q)), k)
    G, cert = _match(n, frozenset(types), even)
    return GroupInfo(G, cert, "sampling")
