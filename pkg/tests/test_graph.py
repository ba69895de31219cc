import json

import pytest
from hypothesis import given, strategies as st

from safeset import Graph, InvalidInputError, VertexSet, build_product, components, has_edge_between, is_connected


@st.composite
def graphs(draw, max_order=9):
    order = draw(st.integers(1, max_order))
    pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(order, edges)


@st.composite
def graph_and_set(draw):
    g = draw(graphs())
    members = draw(st.sets(st.integers(0, g.order - 1)))
    return g, g.vertex_set(members)


def test_triangle_single_component():
    g = Graph.complete(3)
    comps = components(g, g.vertices())
    assert [len(c) for c in comps] == [3]


def test_path_endpoints_split():
    g = Graph.path(4)
    comps = components(g, g.vertex_set([0, 3]))
    assert [c.sorted() for c in comps] == [[0], [3]]


def test_product_block_is_one_component():
    p = build_product(3, 3)
    comps = components(p.graph, p.block([2, 3], [2, 3]))
    assert [len(c) for c in comps] == [4]


def test_components_empty():
    g = Graph.path(3)
    assert components(g, VertexSet.empty(3)) == []


def test_components_rejects_foreign_set():
    with pytest.raises(InvalidInputError):
        components(Graph.path(3), VertexSet.full(4))
    with pytest.raises(InvalidInputError):
        VertexSet.of(3, [3])


def test_is_connected_examples():
    assert is_connected(Graph.complete(5), VertexSet.full(5))
    assert not is_connected(Graph.complete(5), VertexSet.empty(5))
    g = Graph.path(3)
    assert not is_connected(g, g.vertex_set([0, 2]))


def test_has_edge_between_examples():
    k4 = Graph.complete(4)
    assert has_edge_between(k4, k4.vertex_set([0]), k4.vertex_set([1, 2]))
    p4 = Graph.path(4)
    assert not has_edge_between(p4, p4.vertex_set([0]), p4.vertex_set([3]))
    p = build_product(3, 3)
    assert not has_edge_between(p.graph, p.vertex_set([(1, 1)]), p.block([2, 3], [2, 3]))


def test_has_edge_between_rejects_overlap():
    g = Graph.complete(3)
    with pytest.raises(InvalidInputError):
        has_edge_between(g, g.vertex_set([0, 1]), g.vertex_set([1, 2]))


@pytest.mark.parametrize(
    "data",
    [
        {"order": 3, "edges": [[0, 0]]},
        {"order": 3, "edges": [[0, 1], [1, 0]]},
        {"order": 3, "edges": [[0, 3]]},
        {"order": 0, "edges": []},
        {"edges": []},
    ],
)
def test_graph_json_rejects_bad_input(data):
    with pytest.raises(InvalidInputError):
        Graph.from_json(data)


def test_graph_json_round_trip():
    g = Graph.cycle(5)
    assert Graph.from_json(json.dumps(g.to_json())) == g


def test_vertex_set_algebra():
    a = VertexSet.of(6, [0, 2, 4])
    b = VertexSet.of(6, [2, 3])
    assert (a | b).members == {0, 2, 3, 4}
    assert (a - b).members == {0, 4}
    assert (a & b).members == {2}
    assert a.complement().members == {1, 3, 5}
    assert 2 in a and 3 not in a and 7 not in a
    assert len(a) == 3


@given(graph_and_set())
def test_components_partition_within(gs):
    g, s = gs
    comps = components(g, s)
    union = 0
    for c in comps:
        assert not union & c.mask
        union |= c.mask
        assert is_connected(g, c)
    assert union == s.mask
    assert [c.min() for c in comps] == sorted(c.min() for c in comps)


@given(graph_and_set())
def test_components_are_maximal(gs):
    g, s = gs
    comps = components(g, s)
    for i, a in enumerate(comps):
        for b in comps[i + 1:]:
            assert not has_edge_between(g, a, b)


@given(graphs(), st.data())
def test_has_edge_between_symmetric(g, data):
    a = data.draw(st.sets(st.integers(0, g.order - 1)))
    b = data.draw(st.sets(st.integers(0, g.order - 1))) - a
    sa, sb = g.vertex_set(a), g.vertex_set(b)
    assert has_edge_between(g, sa, sb) == has_edge_between(g, sb, sa)


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_graphs_have_one_component(n):
    for g in (Graph.complete(n), Graph.path(n), Graph.star(n)):
        comps = components(g, g.vertices())
        assert len(comps) == 1 and len(comps[0]) == g.order
