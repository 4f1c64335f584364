"""Graph core: construction, families, degree profiles, I/O."""

import itertools

import pytest

from graphenergy import (
    EdgeListParseError,
    Graph,
    GraphError,
    ba_tree,
    complete,
    connected_components,
    cycle,
    degree_profile,
    double_star,
    er_graph,
    is_tree,
    load_edge_list,
    make_family,
    path,
    save_edge_list,
    star,
)


def test_graph_rejects_self_loop_and_duplicates():
    with pytest.raises(GraphError, match="self-loop"):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError, match="duplicate"):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError, match="out of range"):
        Graph(2, [(0, 2)])


def test_graph_is_immutable():
    g = path(3)
    with pytest.raises(AttributeError):
        g.n = 5


def test_degree_sum_equals_twice_edges():
    for g in [path(7), cycle(5), complete(6), double_star(2, 3)]:
        assert sum(g.degrees()) == 2 * g.m


def test_profile_p4():
    p = degree_profile(path(4))
    assert p.leaves == {0, 3}
    assert p.inner == {1, 2}
    assert p.e11 == 0
    assert p.l[1] == p.l[2] == 1
    assert p.delta[1] == p.delta[2] == 1


def test_profile_k2():
    p = degree_profile(path(2))
    assert p.leaves == {0, 1}
    assert p.inner == frozenset()
    assert p.e11 == 1
    assert p.hist_n1 == {1: 2}


def test_profile_s5():
    p = degree_profile(star(5))
    assert p.d[0] == 5 and p.l[0] == 5 and p.delta[0] == 0
    assert len(p.leaves) == 5 and p.e11 == 0
    assert p.hist_n == {1: 5, 5: 1}
    assert p.hist_n1 == {5: 5}


@pytest.mark.parametrize("g", [
    path(9),
    star(7),
    cycle(6),
    double_star(3, 4),
    ba_tree(60, 3),
    er_graph(60, 1.5, 4),
    er_graph(60, 3.0, 5),
])
def test_profile_invariants(g):
    p = degree_profile(g)
    for v in range(g.n):
        assert p.d[v] == p.l[v] + p.delta[v]
    assert sum(p.l[v] for v in p.inner) == len(p.leaves) - 2 * p.e11
    if not p.isolated:
        assert sum(p.d[v] for v in p.inner) == 2 * g.m - len(p.leaves)
        assert len(p.inner) == g.n - len(p.leaves)
    assert sum(p.hist_n.values()) == g.n
    assert sum(k * c for k, c in p.hist_n.items()) == 2 * g.m
    assert sum(p.hist_n1.values()) == len(p.leaves)


def test_families_basic():
    p3 = make_family("path", 3)
    assert p3.n == 3 and p3.m == 2 and sorted(p3.degrees()) == [1, 1, 2]
    assert make_family("cycle", 3) == complete(3)
    s = star(4)
    assert s.n == 5 and s.degree(0) == 4


def test_family_errors():
    with pytest.raises(GraphError):
        cycle(2)
    with pytest.raises(GraphError):
        star(0)
    with pytest.raises(GraphError):
        double_star(0, 2)
    with pytest.raises(GraphError):
        make_family("petersen", 10)


def _isomorphic_small(g1, g2):
    if (g1.n, g1.m) != (g2.n, g2.m):
        return False
    e2 = set(g2.edges)
    for perm in itertools.permutations(range(g1.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in e2 for u, v in g1.edges):
            return True
    return False


def test_double_star_1_1_is_p4():
    assert _isomorphic_small(double_star(1, 1), path(4))


def test_connected_components():
    two_k2 = Graph(4, [(0, 1), (2, 3)])
    comps = connected_components(two_k2)
    assert sorted(map(len, comps)) == [2, 2]
    assert len(connected_components(path(5))) == 1
    assert connected_components(Graph(3, [])) == [{0}, {1}, {2}]


def test_is_tree():
    assert is_tree(path(4))
    assert not is_tree(cycle(4))
    assert not is_tree(Graph(4, [(0, 1), (2, 3)]))
    for seed in range(5):
        assert is_tree(ba_tree(40, seed))


def test_load_simple_edge_list(tmp_path):
    f = tmp_path / "p3.txt"
    f.write_text("0 1\n1 2\n")
    g = load_edge_list(f)
    assert g == path(3)


def test_load_remaps_arbitrary_ids(tmp_path):
    f = tmp_path / "ids.txt"
    f.write_text("# comment\n\n10 20\n20 30\n")
    g = load_edge_list(f)
    assert g == path(3)


def test_round_trip_identity(tmp_path):
    for g in [complete(5), er_graph(30, 1.0, 9), ba_tree(25, 1)]:
        f = tmp_path / "g.txt"
        save_edge_list(g, f)
        assert load_edge_list(f) == g


def test_round_trip_preserves_isolated_vertices(tmp_path):
    g = Graph(5, [(0, 1)])  # vertices 2..4 isolated
    f = tmp_path / "iso.txt"
    save_edge_list(g, f)
    assert load_edge_list(f) == g


@pytest.mark.parametrize("content,match", [
    ("0 1\nx 2\n", "line 2"),
    ("0 1 2\n", "line 1"),
    ("0 0\n", "self-loop"),
    ("0 1\n1 0\n", "duplicate"),
    ("-1 2\n", "negative"),
])
def test_parse_errors(tmp_path, content, match):
    f = tmp_path / "bad.txt"
    f.write_text(content)
    with pytest.raises(EdgeListParseError, match=match):
        load_edge_list(f)
