import pytest
from hypothesis import given, strategies as st

from conftest import maps
from finord.core import (CompositionError, DomainError, MapLiteralError,
                         MonMap, OrdError, Tag, automorphisms, compose,
                         enumerate_hom, format_map, from_threshold, hom_count,
                         hom_leq, hom_poset, identity, is_member, op_map,
                         parse_map, threshold)
from finord.laws import brute_force_hom


def test_literal_examples():
    f = parse_map("3->2:[0 0 1]")
    assert f == MonMap(3, 2, (0, 0, 1))
    assert is_member(f, Tag.ORD_IT)
    assert parse_map("0->4:[]") == MonMap(0, 4, ())
    assert format_map(parse_map("  2 -> 3 : [ 0   2 ] ")) == "2->3:[0 2]"


@pytest.mark.parametrize("text, message", [
    ("2->2:[1 0]", "monotonicity error at index 1"),
    ("2->2:[0 2]", "range error at index 1"),
    ("2->2:[0 x]", "syntax error at index 1"),
    ("2->2 [0 1]", "syntax error"),
    ("2->2:[0]", "expected 2 values, got 1"),
])
def test_literal_errors(text, message):
    with pytest.raises(MapLiteralError, match=message):
        parse_map(text)


def test_constructor_validates():
    with pytest.raises(DomainError):
        MonMap(2, 2, (1, 0))
    with pytest.raises(DomainError):
        MonMap(1, 0, (0,))
    assert issubclass(DomainError, OrdError) and issubclass(OrdError, ValueError)


@given(maps())
def test_literal_round_trip(f):
    assert parse_map(format_map(f)) == f


@given(maps())
def test_identity_is_neutral(f):
    assert compose(identity(f.src), f) == f
    assert compose(f, identity(f.dst)) == f


@given(st.data())
def test_composition_order_and_associativity(data):
    f = data.draw(maps(max_size=4))
    g = data.draw(maps(src=f.dst, max_size=4))
    h = data.draw(maps(src=g.dst, max_size=4))
    fg = compose(f, g)
    assert all(fg(x) == g(f(x)) for x in range(f.src))
    assert compose(fg, h) == compose(f, compose(g, h))


def test_composition_mismatch():
    with pytest.raises(CompositionError):
        compose(identity(2), identity(3))


@given(maps())
def test_op_is_an_involution_that_reverses_order(f):
    g = op_map(f)
    assert op_map(g) == f
    assert all(g(x) == f.dst - 1 - f(f.src - 1 - x) for x in range(f.src))


@pytest.mark.parametrize("tag", list(Tag))
def test_enumeration_matches_brute_force_and_closed_form(tag):
    for m in range(tag.min_size, 6):
        for n in range(tag.min_size, 6):
            listed = [f.values for f in enumerate_hom(m, n, tag)]
            assert listed == sorted(set(listed))
            assert set(listed) == set(brute_force_hom(m, n, tag))
            assert len(listed) == hom_count(m, n, tag)


def test_small_counts():
    assert hom_count(4, 4) == 35
    assert hom_count(0, 0) == 1 and hom_count(3, 0) == 0
    assert hom_count(1, 1, Tag.ORD_IT) == 1
    assert hom_count(1, 2, Tag.ORD_IT) == 0
    assert hom_count(3, 2, Tag.ORD_IT) == 2
    with pytest.raises(DomainError):
        hom_count(0, 2, Tag.ORD_T)


@given(st.integers(0, 6), st.integers(0, 6))
def test_duality_count(m, n):
    assert hom_count(m, n) == hom_count(n + 1, m + 1, Tag.ORD_IT)


def test_rigidity():
    for tag in Tag:
        for n in range(tag.min_size, 7):
            assert automorphisms(n, tag) == [identity(n)]


def test_hom_posets_into_two_are_chains():
    for tag in Tag:
        for m in range(tag.min_size, 6):
            poset = hom_poset(m, 2, tag)
            assert poset.is_chain()
            thresholds = [threshold(f) for f in poset.sorted_chain()]
            # more zeros means smaller
            assert thresholds == sorted(thresholds, reverse=True)


def test_non_chain_poset_refuses_to_sort():
    poset = hom_poset(2, 3)
    assert not poset.is_chain()
    with pytest.raises(DomainError):
        poset.sorted_chain()


def test_threshold_round_trip():
    for n in range(6):
        for k in range(n + 1):
            assert threshold(from_threshold(n, k)) == k
    with pytest.raises(DomainError):
        threshold(identity(3))


def test_hom_leq_needs_parallel_maps():
    assert hom_leq(MonMap(2, 3, (0, 1)), MonMap(2, 3, (1, 1)))
    with pytest.raises(DomainError):
        hom_leq(identity(2), identity(3))


def test_tag_parsing():
    assert Tag.parse("ordit") is Tag.ORD_IT
    assert Tag.parse("ORD_T") is Tag.ORD_T
    with pytest.raises(OrdError):
        Tag.parse("Set")
