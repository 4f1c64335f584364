"""Seeded random graph generators: Barabási–Albert trees and Erdős–Rényi
G(n, lambda/n) graphs.

Every generator is a pure function of (parameters, seed).  Sub-streams for
Monte Carlo trials are derived with :func:`derive_seed`, so serial and
parallel runs produce identical graphs.
"""

from __future__ import annotations

import math

import numpy as np

from .graph import Graph, GraphError

__all__ = ["ba_tree", "er_graph", "random_weighted_graph", "derive_seed", "rng_for"]

# Per-pair Bernoulli sampling below this size, geometric edge skipping above.
_ER_DENSE_CUTOFF = 4096


def rng_for(seed: int, stream: int | None = None) -> np.random.Generator:
    """PCG64 generator for ``seed``, optionally split into sub-stream ``stream``."""
    if stream is None:
        ss = np.random.SeedSequence(seed)
    else:
        ss = np.random.SeedSequence(seed, spawn_key=(stream,))
    return np.random.Generator(np.random.PCG64(ss))


def derive_seed(seed: int, stream: int) -> int:
    """Stable 64-bit sub-seed for trial ``stream`` of an experiment."""
    state = np.random.SeedSequence(seed, spawn_key=(stream,)).generate_state(2, np.uint64)
    return int(state[0])


def ba_tree(n: int, seed: int) -> Graph:
    """Barabási–Albert tree on ``n`` vertices.

    Starts from the single edge {0,1}; each new vertex t attaches to one
    existing vertex chosen proportionally to its current degree, via the
    repeated-endpoint list (each edge contributes both endpoints, so a
    uniform pick from the list is a degree-proportional pick).
    """
    if n < 2:
        raise GraphError(f"ba_tree needs n >= 2, got {n}")
    rng = rng_for(seed)
    edges = [(0, 1)]
    repeated = np.empty(2 * (n - 1), dtype=np.int64)
    repeated[0], repeated[1] = 0, 1
    size = 2
    u = rng.random(n - 2)
    for t in range(2, n):
        target = int(repeated[int(u[t - 2] * size)])
        edges.append((target, t))
        repeated[size] = target
        repeated[size + 1] = t
        size += 2
    return Graph(n, edges)


def er_graph(n: int, lam: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) with p = lam/n; each pair independent."""
    if n < 2:
        raise GraphError(f"er_graph needs n >= 2, got {n}")
    if not (0 < lam < n):
        raise GraphError(f"er_graph needs 0 < lambda < n, got lambda={lam}")
    p = lam / n
    rng = rng_for(seed)
    if n <= _ER_DENSE_CUTOFF:
        edges = []
        for u in range(n - 1):
            hits = np.nonzero(rng.random(n - 1 - u) < p)[0]
            edges.extend((u, u + 1 + int(j)) for j in hits)
    else:
        edges = _er_skip(n, p, rng)
    return Graph(n, edges)


def random_weighted_graph(n: int, seed: int, p: float = 0.5):
    """Random symmetric-weight graph: each pair kept with probability ``p``,
    weights uniform on [-1, 1] excluding zero.  Used by the Sachs self-checks.
    """
    from .spectral import WeightedGraph

    if n < 1:
        raise GraphError(f"need n >= 1, got {n}")
    rng = rng_for(seed)
    weights = {}
    for u in range(n - 1):
        for v in range(u + 1, n):
            if rng.random() < p:
                w = 0.0
                while w == 0.0:
                    w = rng.uniform(-1.0, 1.0)
                weights[(u, v)] = w
    return WeightedGraph(n, weights)


def _er_skip(n: int, p: float, rng: np.random.Generator) -> list[tuple[int, int]]:
    # Batagelj-Brandes geometric skipping: O(|E|) expected draws.
    log1p = math.log(1.0 - p)
    edges = []
    v, w = 1, -1
    while v < n:
        r = rng.random()
        w += 1 + int(math.log(1.0 - r) / log1p)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            edges.append((w, v))
    return edges
