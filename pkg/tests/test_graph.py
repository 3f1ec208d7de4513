import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import coloured_graphs
from pcpaths.generators import rainbow_complete
from pcpaths.graph import (
    DuplicateEdgeError, EdgeColouredGraph, EdgeMissingError, EmptyGraphError, InvalidPathError, LoopError,
    VertexRangeError, add_edge, all_colour_neighbourhoods, check_pc_path, colour_degree, colour_neighbourhood,
    components, disjoint_union, eligible_endpoint_set, induced_subgraph, is_connected, min_colour_degree,
    remove_edge, remove_vertex,
)


def test_add_edge_rejects_loops_duplicates_and_range():
    g = EdgeColouredGraph(3)
    with pytest.raises(LoopError):
        g.add_edge(1, 1, 0)
    g.add_edge(0, 1, 0)
    with pytest.raises(DuplicateEdgeError):
        g.add_edge(1, 0, 5)
    with pytest.raises(VertexRangeError):
        g.add_edge(0, 3, 0)
    with pytest.raises(EdgeMissingError):
        g.colour(0, 2)


def test_functional_add_edge_leaves_input_alone():
    g = EdgeColouredGraph(3, [(0, 1, 0)])
    h = add_edge(g, 1, 2, 1)
    assert g.m == 1 and h.m == 2
    assert h.colour(2, 1) == 1


def test_colour_degree_examples():
    star = EdgeColouredGraph(4, [(0, 1, 0), (0, 2, 0), (0, 3, 1)])
    assert colour_degree(star, 0) == 2
    assert min_colour_degree(star) == 1
    assert min_colour_degree(rainbow_complete(4)) == 3
    assert min_colour_degree(EdgeColouredGraph(3, [(0, 1, 0)])) == 0
    with pytest.raises(EmptyGraphError):
        min_colour_degree(EdgeColouredGraph(0))


def test_check_pc_path():
    g = EdgeColouredGraph(4, [(0, 1, 0), (1, 2, 0), (2, 3, 1)])
    check_pc_path(g, (1, 2, 3))
    with pytest.raises(InvalidPathError):
        check_pc_path(g, (0, 1, 2))
    with pytest.raises(InvalidPathError):
        check_pc_path(g, (0, 2))
    with pytest.raises(InvalidPathError):
        check_pc_path(g, (1, 2, 1))


def test_eligible_set_rainbow_k4():
    g = rainbow_complete(4)
    assert eligible_endpoint_set(g, (0, 1, 2, 3), "last") == {0, 1, 2}
    assert eligible_endpoint_set(g, (0, 1, 2, 3), "first") == {1, 2, 3}


def test_colour_neighbourhood_forced_member():
    g = EdgeColouredGraph(4, [(0, 1, 0), (0, 2, 0), (0, 3, 1)])
    ch = colour_neighbourhood(g, 0, forced=[2])
    assert ch.members == {2, 3}
    assert ch.is_valid(g)
    assert colour_neighbourhood(g, 0).members == {1, 3}


@settings(max_examples=300, deadline=None)
@given(coloured_graphs(max_n=7, max_colours=3, min_n=2), st.data())
def test_eligible_set_is_union_of_choices(g, data):
    # every p.c. path through an edge: take a random walk-built path
    u, v = data.draw(st.sampled_from([(a, b) for a in g.vertices() for b in g.vertices() if g.has_edge(a, b)] or [None]))\
        if g.m else (None, None)
    if u is None:
        return
    path = [u, v]
    for _ in range(g.n):
        last = path[-1]
        opts = sorted(w for w, c in g.neighbours(last).items() if w not in path and c != g.colour(path[-2], last))
        if not opts or data.draw(st.booleans()):
            break
        path.append(data.draw(st.sampled_from(opts)))
    path = tuple(path)
    for end, e, nb in (("first", path[0], path[1]), ("last", path[-1], path[-2])):
        union = set()
        for ch in all_colour_neighbourhoods(g, e, forced=[nb]):
            assert ch.is_valid(g)
            union |= ch.members
        assert eligible_endpoint_set(g, path, end) == union


def test_induced_subgraph_relabels_in_order():
    g = rainbow_complete(5)
    sub, mapping = induced_subgraph(g, {4, 1, 3})
    assert mapping == {1: 0, 3: 1, 4: 2}
    assert sub.n == 3 and sub.m == 3
    assert sub.colour(0, 2) == g.colour(1, 4)


def test_remove_vertex_and_union():
    g = rainbow_complete(4)
    h, mapping = remove_vertex(g, 0)
    assert h.n == 3 and h.m == 3 and 0 not in mapping
    u = disjoint_union(g, h)
    assert u.n == 7 and u.m == 9
    assert not is_connected(u)
    assert [sorted(c) for c in components(u)] == [[0, 1, 2, 3], [4, 5, 6]]
    assert [sorted(c) for c in components(g, removed=[0])] == [[1, 2, 3]]


@settings(max_examples=200, deadline=None)
@given(coloured_graphs(max_n=7, max_colours=4, min_n=2))
def test_edge_removal_drops_colour_degree_by_at_most_one(g):
    if not g.m:
        return
    before = [colour_degree(g, v) for v in g.vertices()]
    for u, v, _ in list(g.edges()):
        h = remove_edge(g, u, v)
        after = [colour_degree(h, x) for x in h.vertices()]
        assert all(0 <= b - a <= 1 for a, b in zip(after, before))
        assert min_colour_degree(g) - min_colour_degree(h) in (0, 1)


@settings(max_examples=200, deadline=None)
@given(coloured_graphs(max_n=7, max_colours=4))
def test_colour_degree_bounds(g):
    for v in g.vertices():
        assert 0 <= colour_degree(g, v) <= g.degree(v) <= g.n - 1
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.m


def test_equality_is_label_sensitive():
    a = EdgeColouredGraph(3, [(0, 1, 0)])
    b = EdgeColouredGraph(3, [(1, 2, 0)])
    assert a != b
    assert a == EdgeColouredGraph(3, [(1, 0, 0)])
    assert hash(a) == hash(a.copy())
    assert list(itertools.islice(a.edges(), 5)) == [(0, 1, 0)]
