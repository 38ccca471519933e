"""Monomial graph adjacency and girth, cross-validated against brute force."""

import math

import pytest

from gfpp.errors import CapExceededError
from gfpp.field import Field
from gfpp.graphs import MonomialGraph, girth, girth_at_least, girth_scan, neighbors


@pytest.fixture(scope="module")
def f3():
    return Field(3, 1)


@pytest.fixture(scope="module")
def f5():
    return Field(5, 1)


def xy_xy2(field):
    return MonomialGraph(field, (1, 1), (1, 2))


def test_neighbors_of_origin(f3):
    g = xy_xy2(f3)
    assert neighbors(g, "P", (0, 0, 0)) == [(0, 0, 0), (1, 0, 0), (2, 0, 0)]


def test_neighbors_rejects_bad_side(f3):
    with pytest.raises(ValueError):
        neighbors(xy_xy2(f3), "Q", (0, 0, 0))


def all_vertices(q):
    return [(a, b, c) for a in range(q) for b in range(q) for c in range(q)]


@pytest.mark.parametrize("q_args,exps", [((3, 1), (1, 2)), ((3, 1), (2, 4)), ((5, 1), (1, 2))])
def test_regularity_and_symmetry(q_args, exps):
    field = Field(*q_args)
    q = field.q
    g = MonomialGraph(field, (1, 1), exps)
    edge_count = 0
    for v in all_vertices(q):
        nbrs = neighbors(g, "P", v)
        assert len(nbrs) == q
        assert len(set(nbrs)) == q
        edge_count += q
        for w in nbrs:
            assert v in neighbors(g, "L", w)
    assert edge_count == q**4
    for w in all_vertices(q):
        nbrs = neighbors(g, "L", w)
        assert len(set(nbrs)) == q


def test_regularity_q9():
    field = Field(3, 2)
    g = xy_xy2(field)
    for v in all_vertices(9):
        assert len(set(neighbors(g, "P", v))) == 9
        assert len(set(neighbors(g, "L", v))) == 9


def test_girth_of_flagship_graph(f3, f5):
    assert girth(xy_xy2(f3)) == 8
    assert girth(xy_xy2(f5)) == 8


def test_girth_of_non_pp_exponent_is_small(f3):
    g = MonomialGraph(f3, (1, 1), (2, 4))
    value = girth(g)
    brute = girth(g, all_sources=True)
    assert value == brute
    assert value < 8
    assert value in (4, 6)


@pytest.mark.parametrize("q_args", [(3, 1), (5, 1)])
def test_representative_shortcut_matches_all_sources(q_args):
    field = Field(*q_args)
    for k in range(1, field.q):
        g = MonomialGraph(field, (1, 1), (k, 2 * k))
        assert girth(g) == girth(g, all_sources=True), k


def test_girth_is_even(f3, f5):
    for field in (f3, f5):
        for k in range(1, field.q):
            value = girth(MonomialGraph(field, (1, 1), (k, 2 * k)))
            assert value == math.inf or value % 2 == 0


def test_girth_at_least_consistent_with_exact(f3, f5):
    for field in (f3, f5):
        for k in range(1, field.q):
            g = MonomialGraph(field, (1, 1), (k, 2 * k))
            exact = girth(g)
            for bound in (4, 6, 8):
                assert girth_at_least(g, bound) == (exact >= bound), (field.q, k, bound)


def test_girth_cap(f3):
    with pytest.raises(CapExceededError):
        girth(xy_xy2(Field(19, 1)))
    with pytest.raises(CapExceededError):
        girth(xy_xy2(Field(5, 1)), cap=3)
    assert girth(xy_xy2(f3), cap=3) == 8


@pytest.mark.parametrize("q_args,expected", [((3, 1), [1]), ((5, 1), [1]), ((3, 2), [1, 3])])
def test_girth_scan(q_args, expected):
    scan = girth_scan(Field(*q_args))
    assert scan.passing == expected
    assert scan.expected == expected
    assert scan.implication_ok
    assert scan.passed
