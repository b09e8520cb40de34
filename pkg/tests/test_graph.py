import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongdim import (
    DisconnectedGraphError,
    GenerationFailed,
    Graph,
    GraphParseError,
    apsp,
    complement,
    diameter,
    find_twins,
    gen_random_connected,
    graph_properties,
    parse_graph,
    serialize_graph,
)
from util import complete_graph, cycle_graph, path_graph


def random_graphs(max_n=8):
    """Arbitrary simple graphs (possibly disconnected) as a hypothesis strategy."""
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.builds(
            lambda picks: Graph.from_edges(
                n, [e for e, keep in zip(_all_pairs(n), picks) if keep]
            ),
            st.lists(
                st.booleans(),
                min_size=n * (n - 1) // 2,
                max_size=n * (n - 1) // 2,
            ),
        )
    )


def _all_pairs(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


# parsing and serialization


def test_parse_edgelist_path():
    g = parse_graph("3 2\n0 1\n1 2")
    assert g == path_graph(3)


def test_parse_edgelist_comments_and_blanks():
    g = parse_graph("# a path\n\n3 2\n# middle\n0 1\n\n1 2\n")
    assert g == path_graph(3)


def test_parse_dimacs_triangle():
    g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3", fmt="dimacs")
    assert g == complete_graph(3)


def test_parse_rejects_self_loop_with_line_number():
    with pytest.raises(GraphParseError) as info:
        parse_graph("2 1\n0 0")
    assert info.value.line == 2
    assert "self-loop" in str(info.value)


def test_parse_rejects_out_of_range_index():
    with pytest.raises(GraphParseError) as info:
        parse_graph("2 1\n0 5")
    assert info.value.line == 2


def test_parse_rejects_bad_header():
    with pytest.raises(GraphParseError):
        parse_graph("three two\n0 1")
    with pytest.raises(GraphParseError):
        parse_graph("")


def test_parse_rejects_edge_count_mismatch():
    with pytest.raises(GraphParseError):
        parse_graph("3 2\n0 1")
    with pytest.raises(GraphParseError):
        parse_graph("3 1\n0 1\n1 2")


def test_parse_dimacs_rejects_unknown_line():
    with pytest.raises(GraphParseError) as info:
        parse_graph("p edge 2 1\nx 1 2", fmt="dimacs")
    assert info.value.line == 2


def test_parse_dimacs_is_one_based():
    g = parse_graph("c comment\np edge 2 1\ne 1 2", fmt="dimacs")
    assert g.edges == ((0, 1),)
    with pytest.raises(GraphParseError):
        parse_graph("p edge 2 1\ne 0 1", fmt="dimacs")


def test_parse_deduplicates_edges():
    g = parse_graph("2 2\n0 1\n1 0")
    assert g.edges == ((0, 1),)


def test_serialize_canonical():
    assert serialize_graph(path_graph(3)) == "3 2\n0 1\n1 2\n"
    assert serialize_graph(Graph.from_edges(2, [])) == "2 0\n"
    assert (
        serialize_graph(complete_graph(3), fmt="dimacs")
        == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"
    )


@settings(max_examples=60, deadline=None)
@given(random_graphs(), st.sampled_from(["edgelist", "dimacs"]))
def test_serialize_parse_round_trip(g, fmt):
    text = serialize_graph(g, fmt)
    assert parse_graph(text, fmt) == g
    assert serialize_graph(parse_graph(text, fmt), fmt) == text


# structure


def test_graph_invariants():
    g = Graph.from_edges(4, [(3, 0), (1, 0), (0, 3)])
    assert g.edges == ((0, 1), (0, 3))
    assert g.adjacency == ((1, 3), (0,), (), (0,))
    assert g.has_edge(3, 0) and not g.has_edge(1, 2)


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


@settings(max_examples=60, deadline=None)
@given(random_graphs())
def test_adjacency_symmetric_and_sorted(g):
    for u in range(g.n):
        assert list(g.adjacency[u]) == sorted(set(g.adjacency[u]))
        for v in g.adjacency[u]:
            assert u in g.adjacency[v]
            assert u != v


def test_graph_properties_examples():
    assert graph_properties(cycle_graph(4)) == graph_properties(cycle_graph(4))
    c4 = graph_properties(cycle_graph(4))
    assert c4.connected and c4.bipartite
    k3 = graph_properties(complete_graph(3))
    assert k3.connected and not k3.bipartite
    isolated = graph_properties(Graph.from_edges(2, []))
    assert not isolated.connected and isolated.bipartite


def test_apsp_examples():
    d = apsp(path_graph(3))
    assert d.dist(0, 2) == 2 and d.dist(0, 1) == 1
    d = apsp(complete_graph(3))
    assert all(d.dist(u, v) == 1 for u in range(3) for v in range(3) if u != v)
    d = apsp(cycle_graph(4))
    assert d.dist(0, 2) == 2 and d.dist(1, 3) == 2 and d.dist(0, 1) == 1


def test_apsp_rejects_disconnected():
    with pytest.raises(DisconnectedGraphError):
        apsp(Graph.from_edges(3, [(0, 1)]))


def test_apsp_parallel_is_identical():
    g = gen_random_connected(30, 0.2, 7)
    assert apsp(g) == apsp(g, workers=4)


def test_diameter_examples():
    assert diameter(apsp(path_graph(3))) == 2
    assert diameter(apsp(complete_graph(3))) == 1
    assert diameter(apsp(cycle_graph(4))) == 2
    assert diameter(apsp(Graph.from_edges(1, []))) == 0


def test_apsp_metric_axioms_medium_graph():
    # d(u,v)=1 iff edge, plus the triangle inequality over every triple
    g = gen_random_connected(48, 0.12, 3)
    d = apsp(g)
    for u in range(g.n):
        assert d.dist(u, u) == 0
        for v in range(g.n):
            assert d.dist(u, v) == d.dist(v, u)
            assert (d.dist(u, v) == 1) == g.has_edge(u, v) if u != v else True
    for u in range(g.n):
        for v in range(g.n):
            for w in range(g.n):
                assert d.dist(u, w) <= d.dist(u, v) + d.dist(v, w)


def test_complement_examples():
    assert complement(complete_graph(3)).edges == ()
    assert complement(complement(cycle_graph(4))) == cycle_graph(4)
    assert complement(path_graph(3)).edges == ((0, 2),)


@settings(max_examples=60, deadline=None)
@given(random_graphs())
def test_complement_involution_and_edge_count(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


def test_find_twins_examples():
    c4 = find_twins(cycle_graph(4))
    assert c4.kappa == 4
    assert c4.classes == ((0, 2), (1, 3))
    p3 = find_twins(path_graph(3))
    assert p3.kappa == 2 and p3.twin_nodes == (0, 2)
    assert find_twins(complete_graph(3)).kappa == 0


@settings(max_examples=60, deadline=None)
@given(random_graphs())
def test_twins_have_equal_neighborhoods_and_no_edge(g):
    report = find_twins(g)
    assert report.kappa == len(report.twin_nodes)
    for u, v in report.partners:
        assert u != v
        assert g.adjacency[u] == g.adjacency[v]
        assert not g.has_edge(u, v)
    listed = {u for cls in report.classes if len(cls) >= 2 for u in cls}
    assert listed == set(report.twin_nodes)


# random generation


def test_gen_single_node():
    g = gen_random_connected(1, 0.5, 123)
    assert g.n == 1 and g.m == 0


def test_gen_p_one_is_complete():
    assert gen_random_connected(5, 1.0, 9) == complete_graph(5)


def test_gen_is_deterministic():
    a = gen_random_connected(8, 0.4, 42)
    b = gen_random_connected(8, 0.4, 42)
    assert a == b
    assert gen_random_connected(8, 0.4, 43) != a  # different stream


def test_gen_impossible_raises():
    with pytest.raises(GenerationFailed):
        gen_random_connected(3, 0.0, 0, max_retries=5)


def test_gen_validates_arguments():
    with pytest.raises(ValueError):
        gen_random_connected(0, 0.5, 0)
    with pytest.raises(ValueError):
        gen_random_connected(3, 1.5, 0)


@settings(max_examples=30, deadline=None)
@given(
    st.integers(min_value=1, max_value=12),
    st.sampled_from([0.3, 0.5, 0.8, 1.0]),
    st.integers(min_value=0, max_value=10_000),
)
def test_gen_outputs_are_connected(n, p, seed):
    try:
        g = gen_random_connected(n, p, seed, max_retries=200)
    except GenerationFailed:
        return
    assert graph_properties(g).connected
