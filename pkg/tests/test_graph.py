from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pedsolve import (
    EdgeWeightMap,
    Graph,
    GraphParseError,
    bipartition,
    connected_components,
    derive_vertex_weights,
    format_graph,
    induced_subgraph,
    is_dissociation_set,
    is_independent_set,
    parse_graph,
    parse_weighted_graph,
)

from helpers import cycle, complete, path


def test_parse_k2():
    g = parse_graph("2\n0 1")
    assert g.n == 2 and g.edges == ((0, 1),)


def test_parse_p4():
    g = parse_graph("4\n0 1\n1 2\n2 3")
    assert g.n == 4 and g.m == 3
    assert g.adjacency[1] == {0, 2}


def test_parse_rejects_loop():
    with pytest.raises(GraphParseError, match="loop"):
        parse_graph("3\n0 0")


def test_parse_rejects_duplicate_and_range():
    with pytest.raises(GraphParseError, match="duplicate"):
        parse_graph("3\n0 1\n1 0")
    with pytest.raises(GraphParseError, match="range"):
        parse_graph("2\n0 5")
    with pytest.raises(GraphParseError, match="malformed"):
        parse_graph("2\n0 x")


def test_parse_comments_and_weighted():
    g, w = parse_weighted_graph("# a header\n3\n0 1 2/3\n1 2 5")
    assert w[(0, 1)] == Fraction(2, 3)
    assert w[(2, 1)] == Fraction(5)


def test_roundtrip():
    g = cycle(6)
    again = parse_graph(format_graph(g))
    assert again == g


def test_induced_subgraph_examples():
    sub, back = induced_subgraph(cycle(6), {1, 2, 3})
    assert (sub.n, sub.m) == (3, 2) and back == [1, 2, 3]
    whole, _ = induced_subgraph(complete(4), range(4))
    assert whole == complete(4)
    pair, _ = induced_subgraph(path(4), {0, 2})
    assert pair.m == 0 and pair.n == 2


def test_connected_components_examples():
    assert connected_components(parse_graph("2\n0 1")) == [(0, 1)]
    p4_split = Graph(4, [(0, 1), (2, 3)])
    assert connected_components(p4_split) == [(0, 1), (2, 3)]
    assert connected_components(Graph(3, [])) == [(0,), (1,), (2,)]


def test_bipartition_examples():
    res = bipartition(cycle(6))
    assert res.sides == (frozenset({0, 2, 4}), frozenset({1, 3, 5}))
    tri = bipartition(cycle(3))
    assert tri.sides is None
    assert len(tri.odd_cycle) % 2 == 1 and len(tri.odd_cycle) >= 3
    res = bipartition(path(4))
    assert res.sides == (frozenset({0, 2}), frozenset({1, 3}))


def test_independent_and_dissociation():
    c6 = cycle(6)
    assert is_independent_set(c6, {0, 3})
    p4 = path(4)
    assert not is_independent_set(p4, {0, 1, 3})
    assert is_dissociation_set(p4, {0, 1, 3})
    assert not is_dissociation_set(p4, {0, 1, 2})


def test_vertex_weights_examples():
    k2 = parse_graph("2\n0 1")
    psi = derive_vertex_weights(k2, EdgeWeightMap(k2, {(0, 1): Fraction(5)}))
    assert psi[0] == psi[1] == 5
    c6 = cycle(6)
    psi = derive_vertex_weights(c6, EdgeWeightMap.unit(c6))
    assert all(psi[v] == 2 for v in range(6))
    p4 = path(4)
    w = EdgeWeightMap(p4, {(0, 1): 1, (1, 2): 2, (2, 3): 4})
    psi = derive_vertex_weights(p4, w)
    assert [psi[v] for v in range(4)] == [1, 3, 6, 4]


def test_weight_map_must_cover_edges():
    p4 = path(4)
    with pytest.raises(ValueError, match="missing"):
        EdgeWeightMap(p4, {(0, 1): 1})
    with pytest.raises(ValueError, match="non-edge"):
        EdgeWeightMap(p4, {(0, 1): 1, (1, 2): 1, (2, 3): 1, (0, 3): 1})


@st.composite
def random_graph(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    return Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


@given(random_graph())
@settings(max_examples=150, deadline=None)
def test_serialize_roundtrip_property(g):
    assert parse_graph(format_graph(g)).edges == g.edges


@given(random_graph(), st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_handshake_identity(g, rnd):
    w = EdgeWeightMap(
        g, {e: Fraction(rnd.randint(1, 30), rnd.randint(1, 7)) for e in g.edges}
    )
    psi = derive_vertex_weights(g, w)
    assert psi.total() == 2 * w.total()


def test_induced_subgraph_whole_is_identity():
    g = cycle(5)
    sub, back = induced_subgraph(g, range(5))
    assert sub == g and back == list(range(5))
