"""Branch points, ramification, genus and regularity of the Galois closure."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

import mpmath

from .errors import NonIntegralGenus
from .exact.bipoly import BiPoly, disc_y
from .exact.factor import factor_over, factor_q, squarefree_part
from .exact.field import QQ, NumberField, coerce
from .exact.poly import UniPoly
from .exact.roots import INFINITY, AlgPoint, isolate_roots, numeric_root
from .galois import GroupInfo, check_cover_input, geometric_group, group_info
from .groups import GroupId, genus_zero_shape
from .puiseux import chart_at_infinity, ramification, shift_to_point

__all__ = [
    "BranchPointRecord", "CoverInvariants", "InertiaClass", "branch_data", "branch_rationality",
    "cover_invariants", "genus_galois", "genus_zero_shape", "regularity",
]


@dataclass(frozen=True)
class InertiaClass:
    order: int
    class_label: str


@dataclass(frozen=True)
class BranchPointRecord:
    """One branch point over kbar.

    ``orbit_poly`` is the k-irreducible polynomial (variable T) vanishing at
    the point, absent for infinity and for k-rational points.  ``places``
    lists the ramification indices of the places of the root field above
    the point; ``ram_index`` is their lcm.
    """

    point: AlgPoint
    orbit_poly: UniPoly | None
    ram_index: int
    inertia_class: InertiaClass
    places: tuple[int, ...]

    def is_k_rational(self) -> bool:
        return self.point.is_infinity or self.orbit_poly is None


@dataclass(frozen=True)
class CoverInvariants:
    group: GroupId
    geometric_group: GroupId
    r: int
    branch: tuple[BranchPointRecord, ...]
    e_tuple: tuple[int, ...]
    genus: int | None
    regular: bool | None
    all_branch_in_k: bool
    certified: bool


def _inertia(e: int) -> InertiaClass:
    return InertiaClass(e, f"C{e}")


def _place_indices_at(p: BiPoly, g: UniPoly) -> list[int]:
    """Ramification of the places above a root of the Q-irreducible ``g``."""
    if g.degree() == 1:
        K, theta = QQ, -g[0]
    else:
        K = NumberField(g, check=False)
        theta = K.gen
    H = shift_to_point(p.coeffs, K, theta)
    return ramification(H, K)


def _k_orbit(g: UniPoly, point: AlgPoint, k: NumberField) -> UniPoly | None:
    """The k-irreducible factor of ``g`` vanishing at ``point``."""
    if k.is_q:
        return g if g.degree() > 1 else None
    _, facs = factor_over(g.map_coeffs(lambda v: coerce(k, v)), k)
    if len(facs) == 1:
        return facs[0][0] if facs[0][0].degree() > 1 else None
    dps = 60
    with mpmath.workdps(dps):
        z = point.approx(dps)
        a = numeric_root(k.minpoly, k.root_index, dps)

        def value(h):
            acc = mpmath.mpf(0)
            for c in reversed(h.coeffs):
                parts = c.c if hasattr(c, "c") else (Fraction(c),)
                cv = sum(mpmath.mpf(v.numerator) / v.denominator * a ** i for i, v in enumerate(parts))
                acc = acc * z + cv
            return abs(acc)

        best = min(facs, key=lambda fm: value(fm[0]))[0]
    return None if best.degree() == 1 else best


@lru_cache(maxsize=256)
def _branch_data(p: BiPoly, k: NumberField) -> tuple[BranchPointRecord, ...]:
    check_cover_input(p, k)
    disc = disc_y(p)
    records = []
    if disc.degree() > 0:
        for g, _ in factor_q(squarefree_part(disc))[1]:
            places = _place_indices_at(p, g)
            e = lcm(*places)
            if e == 1:
                continue
            g = g.with_var("T")
            for idx, rect in enumerate(isolate_roots(g)):
                pt = AlgPoint(g, rect, idx)
                orbit = _k_orbit(g, pt, k)
                records.append(BranchPointRecord(pt, orbit, e, _inertia(e), tuple(sorted(places, reverse=True))))
    H, _ = chart_at_infinity(p.coeffs)
    places = ramification(H, QQ)
    e = lcm(*places)
    records.sort(key=lambda b: (b.orbit_poly.degree() if b.orbit_poly is not None else 1,
                                b.point.sort_key()))
    if e > 1:
        records.append(BranchPointRecord(INFINITY, None, e, _inertia(e), tuple(sorted(places, reverse=True))))
    return tuple(records)


def branch_data(p: BiPoly, k: NumberField = QQ) -> list[BranchPointRecord]:
    """All branch points of the Galois closure of P over k(T), with indices."""
    return list(_branch_data(p, k))


def genus_galois(group_order: int, e_tuple) -> int:
    """Genus of a Galois cover of P^1 by Riemann-Hurwitz."""
    total = Fraction(-2)
    for e in e_tuple:
        if e < 1 or group_order % e:
            raise NonIntegralGenus(f"ramification index {e} does not divide {group_order}")
        total += 1 - Fraction(1, e)
    two_g = group_order * total + 2
    if two_g.denominator != 1 or two_g.numerator % 2 or two_g < 0:
        raise NonIntegralGenus(f"Riemann-Hurwitz gives 2g = {two_g}")
    return two_g.numerator // 2


def branch_rationality(branch, k: NumberField = QQ) -> bool:
    """Whether every branch point lies in P^1(k)."""
    return all(b.is_k_rational() for b in branch)


def regularity(p: BiPoly, k: NumberField = QQ) -> bool | None:
    """Whether the Galois closure of P over k(T) has no constant extension.

    Exact in degree <= 4 (group orders over k(T) and kbar(T) compared).  In
    higher degree the sampled orders are compared; equality is reported as
    regular, a drop is reported as non-regular only when witnessed by the
    discriminant, and as unknown (None) otherwise.
    """
    return _regularity(group_info(p, k), geometric_group(p, k), p, k)


def _regularity(G: GroupInfo, Ggeo: GroupInfo, p: BiPoly, k: NumberField) -> bool | None:
    if p.deg_y() <= 4:
        return G.group.order == Ggeo.group.order
    if G.group.order == Ggeo.group.order:
        return True
    from .exact import rat_func_is_square

    d = disc_y(p)
    one = UniPoly([1])
    if rat_func_is_square(d, one, True, k) and not rat_func_is_square(d, one, False, k):
        return False
    return None


@lru_cache(maxsize=256)
def _invariants(p: BiPoly, k: NumberField) -> CoverInvariants:
    G = group_info(p, k)
    Ggeo = geometric_group(p, k)
    branch = _branch_data(p, k)
    e = tuple(sorted((b.ram_index for b in branch), reverse=True))
    certified = G.certified and Ggeo.certified
    try:
        g = genus_galois(Ggeo.group.order, e)
    except NonIntegralGenus:
        if certified:
            raise
        g = None
    reg = _regularity(G, Ggeo, p, k)
    return CoverInvariants(G.group, Ggeo.group, len(branch), branch, e, g, reg,
                           branch_rationality(branch, k), certified)


def cover_invariants(p: BiPoly, k: NumberField = QQ) -> CoverInvariants:
    """Group, branch data, genus and regularity in one record."""
    return _invariants(p, k)
