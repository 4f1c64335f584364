"""Random graph generators: shapes, determinism, rough statistics."""

import math

import pytest

from graphenergy import GraphError, ba_tree, degree_profile, derive_seed, er_graph, is_tree
from graphenergy.random_graphs import _er_skip, rng_for


def test_ba_minimal_cases():
    g = ba_tree(2, seed=123)
    assert g.edges == ((0, 1),)
    for seed in range(10):
        g = ba_tree(3, seed=seed)
        assert sorted(g.degrees()) == [1, 1, 2]


def test_ba_rejects_small_n():
    with pytest.raises(GraphError):
        ba_tree(1, seed=0)


def test_ba_always_tree():
    for seed in range(20):
        assert is_tree(ba_tree(50, seed))


def test_ba_deterministic():
    assert ba_tree(200, 7).edges == ba_tree(200, 7).edges
    assert ba_tree(200, 7).edges != ba_tree(200, 8).edges


def test_er_parameter_validation():
    with pytest.raises(GraphError):
        er_graph(10, 0.0, 1)
    with pytest.raises(GraphError):
        er_graph(10, 10.0, 1)
    with pytest.raises(GraphError):
        er_graph(1, 0.5, 1)


def test_er_deterministic():
    assert er_graph(300, 1.5, 11).edges == er_graph(300, 1.5, 11).edges
    assert er_graph(300, 1.5, 11).edges != er_graph(300, 1.5, 12).edges


def test_er_edge_count_near_mean():
    # |E| ~ Binomial(C(n,2), lam/n); mean lam*(n-1)/2
    n, lam = 2000, 1.0
    counts = [er_graph(n, lam, seed).m for seed in range(5)]
    mean = sum(counts) / len(counts)
    assert abs(mean / n - lam / 2) < 0.1


def test_er_skip_path_statistics():
    # n above the dense cutoff exercises the geometric-skipping sampler
    n, lam = 5000, 1.0
    g = er_graph(n, lam, 3)
    assert abs(g.m / n - lam / 2) < 0.1
    p = degree_profile(g)
    assert abs(len(p.leaves) / n - math.exp(-lam)) < 0.05


def test_er_skip_edges_valid():
    rng = rng_for(0)
    edges = _er_skip(100, 0.05, rng)
    assert len(edges) == len(set(edges))
    assert all(0 <= u < v < 100 for u, v in edges)


def test_derive_seed_stable_and_distinct():
    a = derive_seed(42, 0)
    assert a == derive_seed(42, 0)
    streams = {derive_seed(42, i) for i in range(100)}
    assert len(streams) == 100
    assert derive_seed(43, 0) != a
