"""Abstract identities of the Galois groups the toolkit can name."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import factorial

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import (
    AlternatingGroup,
    CyclicGroup,
    DihedralGroup,
    SymmetricGroup,
)

from .errors import GroupTooLarge

MAX_ENUM_ORDER = 24


@dataclass(frozen=True)
class GroupId:
    """Isomorphism type of a finite group.

    ``tag`` is one of Cyclic, Dihedral, V4, A4, S4, A5, Sn, An, Other.  For
    Cyclic, Sn and An ``n`` is the defining integer; for Dihedral(n) the
    order is 2n.  ``Other`` carries its order and optionally generators of a
    permutation representation (tuples of images).
    """

    tag: str
    n: int = 0
    other_order: int = 0
    gens: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.tag == "Dihedral" and self.n < 3:
            raise ValueError("Dihedral(n) needs n >= 3; the Klein group is V4")
        if self.tag == "Cyclic" and self.n < 1:
            raise ValueError("Cyclic(n) needs n >= 1")

    @property
    def order(self) -> int:
        t = self.tag
        if t == "Cyclic":
            return self.n
        if t == "Dihedral":
            return 2 * self.n
        if t == "V4":
            return 4
        if t == "A4":
            return 12
        if t == "S4":
            return 24
        if t == "A5":
            return 60
        if t == "Sn":
            return factorial(self.n)
        if t == "An":
            return factorial(self.n) // 2
        return self.other_order

    @property
    def name(self) -> str:
        t = self.tag
        if t == "Cyclic":
            return f"C{self.n}"
        if t == "Dihedral":
            return "S3" if self.n == 3 else f"D{self.n}"
        if t in ("V4", "A4", "S4", "A5"):
            return t
        if t == "Sn":
            return f"S{self.n}"
        if t == "An":
            return f"A{self.n}"
        return f"Other({self.other_order})"

    def is_cyclic(self) -> bool:
        return self.tag == "Cyclic"

    def is_dihedral(self) -> bool:
        return self.tag == "Dihedral"

    def is_trivial(self) -> bool:
        return self.order == 1

    def permutation_group(self) -> PermutationGroup:
        """A faithful permutation representation (small degree when possible)."""
        t = self.tag
        if t == "Cyclic":
            return CyclicGroup(self.n)
        if t == "Dihedral":
            return DihedralGroup(self.n)
        if t == "V4":
            return PermutationGroup([Permutation([1, 0, 3, 2]), Permutation([2, 3, 0, 1])])
        if t == "A4":
            return AlternatingGroup(4)
        if t == "S4":
            return SymmetricGroup(4)
        if t == "A5":
            return AlternatingGroup(5)
        if t == "Sn":
            return SymmetricGroup(self.n)
        if t == "An":
            return AlternatingGroup(self.n)
        if self.gens:
            return PermutationGroup([Permutation(list(g)) for g in self.gens])
        raise GroupTooLarge(f"no representation known for {self.name}")

    def __str__(self):
        return self.name


def Cyclic(n: int) -> GroupId:
    return GroupId("Cyclic", n)


def Dihedral(n: int) -> GroupId:
    return GroupId("Dihedral", n)


V4 = GroupId("V4")
A4 = GroupId("A4")
S4 = GroupId("S4")
A5 = GroupId("A5")


def Sym(n: int) -> GroupId:
    if n <= 2:
        return Cyclic(max(n, 1))
    if n == 3:
        return Dihedral(3)
    if n == 4:
        return S4
    return GroupId("Sn", n)


def Alt(n: int) -> GroupId:
    if n <= 2:
        return Cyclic(1)
    if n == 3:
        return Cyclic(3)
    if n == 4:
        return A4
    if n == 5:
        return A5
    return GroupId("An", n)


def Other(order: int, gens=()) -> GroupId:
    return GroupId("Other", 0, order, tuple(tuple(g) for g in gens))


def identify(G: PermutationGroup) -> GroupId:
    """Name a permutation group by the closest tag in the table."""
    order = G.order()
    if G.is_cyclic:
        return Cyclic(order)
    if order == 4:
        return V4
    gens = [tuple(g.array_form) for g in G.generators]
    if order >= 6 and order % 2 == 0 and not G.is_abelian and _is_dihedral(G, order // 2):
        return Dihedral(order // 2)
    deg = G.degree
    if order == 12 and _is_alt(G, 4):
        return A4
    if order == 24 and _is_sym4(G):
        return S4
    if order == 60 and G.is_perfect:
        return A5
    if deg >= 5 and order == factorial(deg):
        return Sym(deg)
    if deg >= 5 and order == factorial(deg) // 2 and all(g.is_even for g in G.generators):
        return Alt(deg)
    return Other(order, gens)


def _is_dihedral(G: PermutationGroup, n: int) -> bool:
    rot = next((g for g in G.elements if g.order() == n), None)
    if rot is None:
        return False
    return any(h.order() == 2 and h * rot * h == rot ** -1 for h in G.elements)


def _is_alt(G: PermutationGroup, n: int) -> bool:
    return G.degree == n and all(g.is_even for g in G.generators) and G.order() == factorial(n) // 2


def _is_sym4(G: PermutationGroup) -> bool:
    # S4 is the only group of order 24 with trivial centre and an element of order 4
    return G.center().order() == 1 and any(g.order() == 4 for g in G.elements)


def has_noncyclic_abelian(g: GroupId) -> bool:
    """Whether the group contains a subgroup isomorphic to C_p x C_p."""
    t = g.tag
    if t == "Cyclic":
        return False
    if t == "Dihedral":
        return g.n % 2 == 0
    if t in ("V4", "A4", "S4", "A5"):
        return True
    if t == "Sn":
        return g.n >= 4
    if t == "An":
        return g.n >= 4
    if g.order > MAX_ENUM_ORDER:
        raise GroupTooLarge(f"subgroup enumeration is limited to order {MAX_ENUM_ORDER}")
    G = g.permutation_group()
    # a non-cyclic abelian group contains C_p x C_p; look for two commuting
    # elements of prime order p generating a group of order p^2
    elems = list(G.elements)
    for p in _primes_upto(g.order):
        if g.order % (p * p):
            continue
        of_p = [x for x in elems if x.order() == p]
        for x, y in combinations(of_p, 2):
            if x * y == y * x and PermutationGroup([x, y]).order() == p * p:
                return True
    return False


def _primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


def genus_zero_shape(g: GroupId, e_tuple) -> bool:
    """Whether (G, e) is one of the genus-zero shapes.

    cyclic (|G|, |G|); dihedral (2, 2, |G|/2), the Klein group counting as
    dihedral of order 4; A4 (2, 3, 3); S4 (2, 3, 4); A5 (2, 3, 5).
    """
    e = sorted(e_tuple)
    order = g.order
    if g.tag == "Cyclic":
        return order > 1 and e == [order, order]
    if g.tag == "Dihedral" or g.tag == "V4":
        return e == sorted([2, 2, order // 2])
    if g.tag == "A4":
        return e == [2, 3, 3]
    if g.tag == "S4":
        return e == [2, 3, 4]
    if g.tag == "A5":
        return e == [2, 3, 5]
    return False
