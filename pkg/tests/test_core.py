import pytest
from hypothesis import given

from eulercat import builders as B
from eulercat.core import (Arrow, DirectedGraph, adjoin_bounds, check_laws, collage, constant_profunctor,
                           free_category, full_subcategory, interval, is_poset, make_category, opposite,
                           product_categories, structural_profile, subcategory, sum_categories,
                           validate_category)
from eulercat.errors import CyclicGraph, InvalidCategory, SizeOverflow, SubcategoryNotClosed

from conftest import posets, small_categories


def test_identities_are_filled_in():
    C = make_category("C", ["a", "b"], [("f", "a", "b")], {})
    assert C.identity("a") == "id_a"
    assert C.compose("f", "id_a") == "f"
    assert C.compose("id_b", "f") == "f"


def test_violations_are_listed():
    # g . f declared with the wrong endpoints and a missing composite
    arrows = [Arrow("id_a", "a", "a"), Arrow("id_b", "b", "b"), Arrow("f", "a", "b"), Arrow("g", "b", "a")]
    vs = check_laws("bad", ["a", "b"], arrows, {"a": "id_a", "b": "id_b"},
                    {("g", "f"): "f", ("f", "id_a"): "f", ("id_b", "f"): "f", ("g", "id_b"): "g",
                     ("id_a", "g"): "g", ("id_a", "id_a"): "id_a", ("id_b", "id_b"): "id_b"})
    kinds = {v.kind for v in vs}
    assert "BadComposite" in kinds


def test_non_associative_table_rejected():
    # a monoid table that is not associative: x.x = y, y.x = x, x.y = id, y.y = id
    with pytest.raises(InvalidCategory) as e:
        B.monoid([[0, 1, 2], [1, 2, 0], [2, 1, 0]])
    assert any(v.kind == "NonAssociative" for v in e.value.violations)


def test_dangling_and_bad_ids():
    with pytest.raises(InvalidCategory):
        make_category("C", ["a"], [("f", "a", "zz")], {})
    with pytest.raises(InvalidCategory):
        make_category("C", ["a b"], [], {})


@given(small_categories())
def test_opposite_is_an_involution(C):
    D = opposite(opposite(C))
    assert D.name == C.name and D.same_table(C)
    validate_category(opposite(C))


@given(small_categories(), small_categories())
def test_sum_and_product_validate(C, D):
    S = sum_categories([C, D])
    validate_category(S)
    assert len(S.objects) == len(C.objects) + len(D.objects)
    if len(C.arrows) * len(D.arrows) <= 400:
        P = product_categories([C, D])
        validate_category(P)
        assert len(P.arrows) == len(C.arrows) * len(D.arrows)


def test_product_cap():
    with pytest.raises(SizeOverflow):
        product_categories([B.fin_sets(3), B.fin_sets(3)], arrow_cap=100)


@given(posets())
def test_adjoin_bounds_gives_bounded_poset(P):
    Q = adjoin_bounds(P)
    validate_category(Q)
    assert is_poset(Q)
    assert all(Q.hom("bot", x) and Q.hom(x, "top") for x in Q.objects)


@given(small_categories())
def test_collage_validates(C):
    D = collage(constant_profunctor(C, B.chain(2)))
    validate_category(D)


def test_interval_of_chain():
    C = B.chain(5)
    assert interval(C, "1", "3").objects == ("1", "2", "3")


def test_subcategory_closure():
    C = B.pushout_shape()
    with pytest.raises(SubcategoryNotClosed):
        subcategory(C, ["f1"])
    S = subcategory(C, list(C.identities.values()) + ["f1"])
    assert len(S.arrows) == 4


def test_free_category_counts_paths():
    G = DirectedGraph(("a", "b", "c"), (("e1", "a", "b"), ("e2", "b", "c"), ("e3", "a", "c")))
    F = free_category(G)
    assert len(F.hom("a", "c")) == 2
    assert F.compose("e2", "e1") == "e1;e2"


def test_free_category_rejects_cycles():
    G = DirectedGraph(("a", "b"), (("e1", "a", "b"), ("e2", "b", "a")))
    with pytest.raises(CyclicGraph):
        free_category(G)


def test_profile_of_split_epi():
    p = structural_profile(B.split_epi_category())
    assert p.is_cauchy_complete and not p.idempotents_are_identities


def test_profile_of_idempotent_monoid():
    p = structural_profile(B.idempotent_monoid())
    assert not p.is_cauchy_complete


def test_full_subcategory_keeps_composition():
    C = B.no_weighting_example()
    S = full_subcategory(C, ["a1", "a2"])
    validate_category(S)
    assert len(S.arrows) == 8
