import pytest

from genericity.classify import K_U, K_U_AMPLE, KVU_ALG_CLOSED, decide_genericity, obstruction_report
from genericity.cover import genus_zero_shape
from genericity.errors import GroupTooLarge
from genericity.groups import A4, A5, S4, V4, Cyclic, Dihedral, Other, has_noncyclic_abelian
from genericity.parse import parse_bipoly, parse_field

from conftest import FIXTURES


@pytest.mark.parametrize("text,verdict,case", FIXTURES)
def test_fixture_verdicts(text, verdict, case):
    v = decide_genericity(parse_bipoly(text))
    assert v.outcome == verdict
    assert v.case == case
    assert v.certified


def test_kummer_quartic_failures():
    v = decide_genericity(parse_bipoly("Y^4 - T"))
    assert v.invariants.group == Dihedral(4)
    for f in ("regular", "a.cyclic_even_order", "b.cyclic_odd_order", "c.dihedral_odd_n"):
        assert f in v.failures


def test_failures_are_collected():
    v = decide_genericity(parse_bipoly("Y^2 - (T^3 - T^2 - 7*T + 41/4)"))
    assert {"a.r_equals_2", "a.branch_points_in_P1k", "b.cyclic_odd_order", "c.dihedral_odd_n"} <= set(v.failures)


@pytest.mark.parametrize("text,field", [
    ("Y^2 - T", "Q"),
    ("Y^4 - T", "Q(i)"),
    ("Y^6 - T", "Q(zeta_3)"),
    ("Y^2 - (T^2 + 1)", "Q(i)"),
])
def test_kummer_generic_over_fields_with_roots_of_unity(text, field):
    v = decide_genericity(parse_bipoly(text), parse_field(field))
    assert (v.outcome, v.case) == ("Generic", "a")


def test_odd_cyclic_needs_only_cosine():
    # branch points of the Shanks cubic are not rational, case (b) does not ask for it
    v = decide_genericity(parse_bipoly("Y^3 - T*Y^2 + (T - 3)*Y + 1"))
    assert v.invariants.all_branch_in_k is False
    assert v.case == "b"


def test_dihedral_with_irrational_branch_points():
    # Y^3 - 3Y + T: branch points T = +-2 and infinity, all rational
    v = decide_genericity(parse_bipoly("Y^3 - 3*Y + T"))
    assert v.case == "c"
    # critical values of Y^3 - 6Y are +-4 sqrt(2)
    p = parse_bipoly("Y^3 - 6*Y + T")
    w = decide_genericity(p)
    assert w.outcome == "NotGeneric"
    assert "c.branch_points_in_P1k" in w.failures and "c.r_equals_3" not in w.failures
    assert K_U in obstruction_report(p).labels


@pytest.mark.parametrize("text,labels", [
    ("Y^2 - (T^3 - T^2 - 7*T + 41/4)", {K_U_AMPLE}),
    ("Y^4 - T", {KVU_ALG_CLOSED}),
    ("Y^2 - (T^2 + 1)", {K_U}),
    ("Y^4 - T*Y - T", {KVU_ALG_CLOSED}),
    ("Y^2 - T", set()),
    ("Y^3 + T*Y + T", set()),
    ("Y^3 - T*Y^2 + (T - 3)*Y + 1", set()),
])
def test_obstruction_labels(text, labels):
    rep = obstruction_report(parse_bipoly(text))
    assert set(rep.labels) == labels
    assert len(rep.witnesses) >= len(rep.labels)


@pytest.mark.parametrize("text,_v,_c", FIXTURES)
def test_generic_implies_genus_zero_shape_and_no_labels(text, _v, _c):
    p = parse_bipoly(text)
    v = decide_genericity(p)
    labels = obstruction_report(p).labels
    if v.is_generic:
        assert genus_zero_shape(v.invariants.group, v.invariants.e_tuple)
        assert not labels
    if labels:
        assert not v.is_generic


@pytest.mark.parametrize("G,expected", [
    (Cyclic(12), False),
    (Cyclic(2), False),
    (Dihedral(4), True),
    (Dihedral(3), False),
    (Dihedral(5), False),
    (Dihedral(6), True),
    (V4, True),
    (A4, True),
    (S4, True),
    (A5, True),
])
def test_noncyclic_abelian(G, expected):
    assert has_noncyclic_abelian(G) is expected


def test_noncyclic_abelian_enumeration_limit():
    with pytest.raises(GroupTooLarge):
        has_noncyclic_abelian(Other(48))
