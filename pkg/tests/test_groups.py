import pytest

from pcl.groups import (EnumerationBudgetError, a4_model, coset_enumerate,
                        cyclic_group, direct_product, find_isomorphism,
                        z4xz2_model)
from pcl.presentation import parse_presentation


def test_a4_enumeration():
    g = a4_model()
    assert g.order == 12
    g.check_axioms()
    assert g.element_order(g.element("k")) == 2
    assert g.element_order(g.element("r")) == 3


def test_alternate_presentation_isomorphic():
    p = parse_presentation("group A4alt { gens: r s; rels: r^3, s^3, (r*s)^2; }")
    h = coset_enumerate(p, 200)
    assert h.order == 12
    assert find_isomorphism(a4_model(), h) is not None


def test_cyclic_and_product():
    g = z4xz2_model()
    assert g.order == 8
    g.check_axioms()
    assert g.element_order(g.element("(1,0)")) == 4
    assert g.element_order(g.element("(0,1)")) == 2
    assert g.mul(g.element("(1,0)"), g.element("(0,1)")) == g.element("(1,1)")


def test_trivial_and_small_enumerations():
    p = parse_presentation("group T { gens: a; rels: a; }")
    assert coset_enumerate(p, 10).order == 1
    p = parse_presentation("group Z6 { gens: a; rels: a^6; }")
    g = coset_enumerate(p, 50)
    assert g.order == 6
    assert find_isomorphism(g, cyclic_group(6)) is not None


def test_infinite_presentation_exceeds_budget():
    p = parse_presentation("group ZZ { gens: a b; rels: a*b*a^-1*b^-1; }")
    with pytest.raises(EnumerationBudgetError):
        coset_enumerate(p, 64)


def test_dihedral_from_involutions():
    p = parse_presentation(
        "group D4 { gens: s t; rels: (s*t)^4; involutions: s t; }")
    g = coset_enumerate(p, 100)
    assert g.order == 8
    assert find_isomorphism(g, z4xz2_model()) is None  # D4 is not Z4xZ2


def test_eval_word_and_closure():
    g = a4_model()
    p = g.presentation
    for rel in p.all_relators():
        assert g.eval_word(rel) == g.identity
    assert len(g.closure([g.element("k"), g.element("r")])) == 12
    assert len(g.closure([g.element("r")])) == 3


def test_element_names_deterministic():
    a, b = a4_model(), a4_model()
    assert a.element_names == b.element_names
    assert a.mul_table == b.mul_table
