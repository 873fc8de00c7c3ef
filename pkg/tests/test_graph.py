import pytest

from idealgraph.graph import (
    Graph,
    complement,
    induced_subgraph,
    quotient_graph,
)


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(n=2, adj=(0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(n=1, adj=(0b1,))  # loop


def test_basic_accessors():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.edge_count() == 4
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert g.degree(1) == 2
    assert g.has_edge(0, 3) and not g.has_edge(0, 2)


def test_gamma_rz3_shape(rz3):
    _, _, g = rz3
    assert g.n == 6
    assert g.edge_count() == 9
    # singletons pairwise nonadjacent, pairs pairwise adjacent
    assert not g.has_edge(0, 1) and not g.has_edge(0, 2) and not g.has_edge(1, 2)
    assert g.has_edge(3, 4) and g.has_edge(3, 5) and g.has_edge(4, 5)
    # {0} meets exactly the two pairs containing 0
    assert g.adj[0] == (1 << 3) | (1 << 4)


def test_gamma_labels(rz3):
    _, _, g = rz3
    assert g.labels == ("{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}")


def test_gamma_zero_only_intersection_is_nonedge(z6):
    _, fam, g = z6
    # {0,2,4} and {0,3} share only the zero: no edge
    labels = dict(zip(g.labels, range(g.n)))
    a, b, c = labels["{0,3}"], labels["{0,2,4}"], labels["{0,2,3,4}"]
    assert not g.has_edge(a, b)
    assert g.has_edge(a, c) and g.has_edge(b, c)  # star on 3 vertices


def test_complement():
    g = path(4)
    cg = complement(g)
    assert cg.edge_count() == 6 - 3
    for u in range(4):
        for v in range(u + 1, 4):
            assert g.has_edge(u, v) != cg.has_edge(u, v)


def test_induced_subgraph(rz3):
    _, _, g = rz3
    h = induced_subgraph(g, [3, 4, 5])
    assert h.n == 3 and h.edge_count() == 3
    assert h.labels == ("{0,1}", "{0,2}", "{1,2}")


def test_quotient_graph_collapses_twins():
    # K4 collapses to a single class
    g = Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    q = quotient_graph(g)
    assert q.graph.n == 1
    assert q.classes == ((0, 1, 2, 3),)
    # a path has no closed twins
    q2 = quotient_graph(path(4))
    assert q2.graph.n == 4


def test_to_dot_and_json(rz3):
    _, _, g = rz3
    dot = g.to_dot("rz3")
    assert dot.startswith('graph "rz3"')
    assert dot.count("--") == 9
    doc = g.to_json_dict()
    assert doc["schema"] == 1
    assert len(doc["vertices"]) == 6 and len(doc["edges"]) == 9
