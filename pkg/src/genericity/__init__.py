"""Exact tools for one-parameter Galois covers of the projective line.

Branch data and genus of the Galois closure, Galois groups over k(T),
genericity verdicts for cyclic and dihedral covers, constructions of generic
polynomials, and root-number computations for elliptic curves.
"""
from .build import (
    MoebiusMap,
    TargetExtension,
    construct_generic,
    moebius_apply,
    moebius_between,
    solve_parameter,
)
from .classify import GenericityVerdict, ObstructionVerdict, decide_genericity, obstruction_report
from .cover import (
    BranchPointRecord,
    CoverInvariants,
    branch_data,
    branch_rationality,
    cover_invariants,
    genus_galois,
    regularity,
)
from .exact import QQ, AlgPoint, BiPoly, NumberField, UniPoly, base_field
from .galois import (
    geometric_group,
    group_of_specialization,
    group_over_function_field,
    inertia_invariant,
    polynomial_group,
    specialization_field,
)
from .groups import A4, A5, S4, V4, Alt, Cyclic, Dihedral, GroupId, Sym
from .parse import parse_bipoly, parse_field, parse_group, parse_poly, parse_unipoly

__all__ = [
    "A4", "A5", "AlgPoint", "Alt", "BiPoly", "BranchPointRecord", "CoverInvariants", "Cyclic",
    "Dihedral", "GenericityVerdict", "GroupId", "MoebiusMap", "NumberField", "ObstructionVerdict",
    "QQ", "S4", "Sym", "TargetExtension", "UniPoly", "V4", "base_field", "branch_data",
    "branch_rationality", "construct_generic", "cover_invariants", "decide_genericity",
    "genus_galois", "geometric_group", "group_of_specialization", "group_over_function_field",
    "inertia_invariant", "moebius_apply", "moebius_between", "obstruction_report", "parse_bipoly",
    "parse_field", "parse_group", "parse_poly", "parse_unipoly", "polynomial_group", "regularity",
    "solve_parameter", "specialization_field",
]
