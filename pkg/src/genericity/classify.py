"""Genericity decision and non-parametricity obstruction labels.

A regular cover of P^1 with group G is generic over k exactly when one of
three condition bundles holds:

(a) G cyclic of even order n, zeta_n in k, two branch points, all in P^1(k);
(b) G cyclic of odd order n, 2cos(2 pi/n) in k, two branch points;
(c) G dihedral of order 2n, n >= 3 odd, 2cos(2 pi/n) in k, three branch
    points, all in P^1(k).

The obstruction labels record which non-parametricity statements apply:
positive genus, a non-cyclic abelian subgroup, or the cyclic/dihedral
shapes with a branch point outside P^1(k).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cover import CoverInvariants, cover_invariants
from .errors import GroupTooLarge
from .exact.bipoly import BiPoly
from .exact.cyclo import has_cos_of_root_of_unity, has_root_of_unity
from .exact.field import QQ, NumberField
from .groups import has_noncyclic_abelian

K_U_AMPLE = "NotParametricOver_K_U_for_ample_K"
KVU_ALG_CLOSED = "NotParametricOver_KVU_for_alg_closed_K"
K_U = "NotParametricOver_k_U"


@dataclass(frozen=True)
class GenericityVerdict:
    outcome: str                 # "Generic" or "NotGeneric"
    case: str | None             # "a", "b" or "c" when generic
    failures: tuple[str, ...]
    invariants: CoverInvariants
    certified: bool

    @property
    def is_generic(self) -> bool:
        return self.outcome == "Generic"


@dataclass(frozen=True)
class ObstructionVerdict:
    labels: tuple[str, ...]
    witnesses: tuple[str, ...] = field(default=())


def _case_failures(inv: CoverInvariants, k: NumberField) -> dict[str, list[str]]:
    G = inv.group
    n = G.n
    out: dict[str, list[str]] = {"a": [], "b": [], "c": []}

    a = out["a"]
    if G.is_cyclic() and n % 2 == 0:
        if not has_root_of_unity(k, n):
            a.append("a.root_of_unity_in_k")
    else:
        a.append("a.cyclic_even_order")
    if inv.r != 2:
        a.append("a.r_equals_2")
    if not inv.all_branch_in_k:
        a.append("a.branch_points_in_P1k")

    b = out["b"]
    if G.is_cyclic() and n % 2 == 1 and n > 1:
        if not has_cos_of_root_of_unity(k, n):
            b.append("b.cos_in_k")
    else:
        b.append("b.cyclic_odd_order")
    if inv.r != 2:
        b.append("b.r_equals_2")

    c = out["c"]
    if G.is_dihedral() and n % 2 == 1:
        if not has_cos_of_root_of_unity(k, n):
            c.append("c.cos_in_k")
    else:
        c.append("c.dihedral_odd_n")
    if inv.r != 3:
        c.append("c.r_equals_3")
    if not inv.all_branch_in_k:
        c.append("c.branch_points_in_P1k")
    return out


def decide_genericity(p: BiPoly, k: NumberField = QQ) -> GenericityVerdict:
    """Decide whether P is generic over k; every failed criterion is listed."""
    inv = cover_invariants(p, k)
    cases = _case_failures(inv, k)
    failures: list[str] = []
    if inv.regular is None:
        failures.append("regular_unknown")
    elif not inv.regular:
        failures.append("regular")
    if inv.group.is_trivial():
        failures.append("nontrivial_group")
    ok = [c for c in ("a", "b", "c") if not cases[c]]
    if not failures and ok:
        return GenericityVerdict("Generic", ok[0], (), inv, inv.certified)
    for c in ("a", "b", "c"):
        failures.extend(cases[c])
    return GenericityVerdict("NotGeneric", None, tuple(failures), inv, inv.certified)


def obstruction_report(p: BiPoly, k: NumberField = QQ) -> ObstructionVerdict:
    """Which non-parametricity statements have their hypotheses met."""
    inv = cover_invariants(p, k)
    G = inv.group
    labels, why = [], []
    if inv.genus is not None and inv.genus >= 1:
        labels.append(K_U_AMPLE)
        why.append(f"genus {inv.genus} >= 1")
    try:
        if has_noncyclic_abelian(G):
            labels.append(KVU_ALG_CLOSED)
            why.append(f"{G.name} has a non-cyclic abelian subgroup")
    except GroupTooLarge:
        why.append(f"non-cyclic abelian subgroups of {G.name} not enumerated")
    if not inv.all_branch_in_k:
        if G.is_cyclic() and G.n % 2 == 0 and inv.r == 2:
            labels.append(K_U)
            why.append(f"cyclic of even order {G.n}, r = 2, a branch point outside P^1(k)")
        elif G.is_dihedral() and G.n % 2 == 1 and inv.r == 3:
            labels.append(K_U)
            why.append(f"dihedral of order {G.order}, r = 3, a branch point outside P^1(k)")
    return ObstructionVerdict(tuple(labels), tuple(why))
