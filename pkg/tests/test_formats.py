import pytest
from hypothesis import given

from eulercat import builders as B
from eulercat.core import adjoin_bounds, collage, constant_profunctor, free_category, product_categories
from eulercat.errors import InvalidCategory, ParseError
from eulercat.formats import (dump_category, dump_digraph, dump_endofunctor, dump_profunctor, dump_set_functor,
                              parse_category, parse_digraph, parse_endofunctor, parse_profunctor,
                              parse_set_functor)
from eulercat.lefschetz import endofunctor

from conftest import posets, small_categories


def roundtrip(C):
    D = parse_category(dump_category(C))
    return D.name == C.name and D.same_table(C)


@pytest.mark.parametrize("name", sorted(B.CATALOG))
def test_catalog_roundtrip(name):
    e = B.CATALOG[name]
    C = e.construct(*[max(lo, min(hi, 2)) for lo, hi in e.ranges])
    assert roundtrip(C)


@given(small_categories(), posets(max_size=4))
def test_combinator_roundtrip(C, P):
    assert roundtrip(adjoin_bounds(C))
    assert roundtrip(collage(constant_profunctor(C, P)))
    if len(C.arrows) * len(P.arrows) <= 400:
        assert roundtrip(product_categories([C, P]))


def test_dump_is_deterministic():
    assert dump_category(B.fin_sets(2)) == dump_category(B.fin_sets(2))


def test_minimal_file():
    C = parse_category("""
        # the walking arrow
        objects: a, b
        arrow f: a -> b
    """, "walk.fincat")
    assert C.name == "walk"
    assert len(C.arrows) == 3


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as e:
        parse_category("objects: a\narrow f a -> a\n", "bad.fincat")
    assert e.value.line == 2 and "bad.fincat:2" in str(e.value)
    with pytest.raises(ParseError):
        parse_category("arrow f: a -> a\n")


def test_law_violations_surface():
    text = "objects: a\narrow e: a -> a\ncompose e . e = id_a\ncompose e . e = e\n"
    with pytest.raises(ParseError):
        parse_category(text)
    with pytest.raises(InvalidCategory):
        parse_category("objects: a\narrow e: a -> a\n")


def test_digraph_roundtrip():
    text = "vertex a\nvertex b\nvertex c\nedge e1: a -> b\nedge e2: b -> c\n"
    G = parse_digraph(text)
    assert dump_digraph(G) == text
    assert len(free_category(G).arrows) == 6


def test_set_functor_roundtrip():
    for X in [B.symmetric_action(3), B.intersection_diagram([["1", "2"], ["2", "3"], ["3"]]), B.cyclic_action(4, 2)]:
        Y = parse_set_functor(dump_set_functor(X))
        assert Y.sets == X.sets and Y.actions == X.actions


def test_set_functor_catalog_domain():
    X = parse_set_functor("domain: @pushout_shape\nat a: x\nat b1: y\nat b2: z\n")
    assert X.sizes() == {"a": 1, "b1": 1, "b2": 1}


def test_set_functor_file_domain(tmp_path):
    (tmp_path / "L.fincat").write_text(dump_category(B.pushout_shape()))
    (tmp_path / "X.finfun").write_text("domain: L.fincat\nat a: x\nat b1: y, y2\nat b2: z\non f1: x -> y2\n")
    X = parse_set_functor((tmp_path / "X.finfun").read_text(), str(tmp_path / "X.finfun"))
    assert X.act("f1", "x") == "y2"


def test_endofunctor_roundtrip():
    F = endofunctor(B.chain(3), {"0": "1", "1": "1", "2": "2"})
    G = parse_endofunctor(dump_endofunctor(F))
    assert G.object_map == F.object_map and G.arrow_map == F.arrow_map


def test_profunctor_roundtrip():
    from eulercat.core import functor_from_object_map, functor_profunctor

    F = functor_from_object_map(B.chain(2), B.chain(3), {"0": "0", "1": "2"})
    P = functor_profunctor(F)
    Q = parse_profunctor(dump_profunctor(P))
    assert collage(Q).same_table(collage(P))
