"""Spectra, graph energy, and the weighted Sachs characteristic-polynomial
oracle for small graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eigensolver import symmetric_eigvals
from .graph import Graph, GraphError

__all__ = [
    "WeightedGraph",
    "Spectrum",
    "CharPoly",
    "symmetric_eigenvalues",
    "spectrum",
    "energy",
    "energy_weighted",
    "star_energy_closed_form",
    "weighted_star",
    "sachs_char_poly",
    "char_poly_from_spectrum",
    "SACHS_MAX_VERTICES",
]

SACHS_MAX_VERTICES = 14


class WeightedGraph:
    """Symmetric real edge weights on vertices ``0..n-1``; zero means non-edge.

    Weights may be floats or exact :class:`fractions.Fraction` values (the
    star decomposition uses halves and relies on exact superposition).
    """

    __slots__ = ("n", "weights")

    def __init__(self, n: int, weights):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        canon = {}
        items = weights.items() if isinstance(weights, dict) else weights
        for (u, v), w in items:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            if (u, v) in canon:
                raise GraphError(f"duplicate edge ({u},{v})")
            if w != 0:
                canon[(u, v)] = w
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "weights", canon)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedGraph is immutable")

    @classmethod
    def from_graph(cls, g: Graph, weight=1.0) -> "WeightedGraph":
        return cls(g.n, {e: weight for e in g.edges})

    def support(self) -> Graph:
        return Graph(self.n, list(self.weights))

    def matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for (u, v), w in self.weights.items():
            a[u, v] = a[v, u] = float(w)
        return a


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, plus the energy (sum of |lambda|)."""

    eigenvalues: tuple[float, ...]
    energy: float


@dataclass(frozen=True)
class CharPoly:
    """Coefficients b_0..b_n of phi(x) = sum_k b_k x^(n-k), b_0 = 1."""

    coefficients: tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def _as_weighted(g) -> WeightedGraph:
    return g if isinstance(g, WeightedGraph) else WeightedGraph.from_graph(g)


def symmetric_eigenvalues(wg) -> Spectrum:
    """Spectrum of a Graph or WeightedGraph via the in-repo eigensolver."""
    vals = symmetric_eigvals(_as_weighted(wg).matrix())
    return Spectrum(tuple(float(x) for x in vals), float(np.abs(vals).sum()))


spectrum = symmetric_eigenvalues


def energy(g: Graph) -> float:
    """Graph energy: sum of absolute adjacency eigenvalues."""
    return symmetric_eigenvalues(g).energy


def energy_weighted(wg: WeightedGraph) -> float:
    return symmetric_eigenvalues(wg).energy


def star_energy_closed_form(weights) -> float:
    """Energy of a weighted star: 2 * sqrt(sum of squared edge weights)."""
    ws = list(weights)
    if not ws:
        raise GraphError("weighted star needs at least one edge")
    return 2.0 * math.sqrt(math.fsum(float(w) * float(w) for w in ws))


def weighted_star(weights) -> WeightedGraph:
    """Explicit weighted star with center 0 and the given edge weights."""
    ws = list(weights)
    if not ws:
        raise GraphError("weighted star needs at least one edge")
    return WeightedGraph(len(ws) + 1, {(0, i + 1): w for i, w in enumerate(ws)})


# ---------------------------------------------------------------------------
# Sachs characteristic polynomial (combinatorial oracle, small graphs only)


def _simple_cycles(adj: list[list[int]], n: int) -> list[list[int]]:
    # Each cycle once: smallest vertex first, second neighbor < last neighbor.
    cycles: list[list[int]] = []
    path: list[int] = []
    on_path = [False] * n

    def dfs(start: int):
        last = path[-1]
        for w in adj[last]:
            if w == start and len(path) >= 3 and path[1] < path[-1]:
                cycles.append(path.copy())
            elif w > start and not on_path[w]:
                on_path[w] = True
                path.append(w)
                dfs(start)
                path.pop()
                on_path[w] = False

    for s in range(n):
        path = [s]
        on_path = [False] * n
        on_path[s] = True
        dfs(s)
    return cycles


def sachs_char_poly(wg) -> CharPoly:
    """Characteristic polynomial via enumeration of Sachs sub-graphs.

    Components are single edges (contributing w^2) or cycles (contributing
    the product of their edge weights); a sub-graph with r components of
    which c are cycles contributes (-1)^r 2^c times its weight to b_k.
    """
    wg = _as_weighted(wg)
    n = wg.n
    if n > SACHS_MAX_VERTICES:
        raise GraphError(f"Sachs enumeration capped at n <= {SACHS_MAX_VERTICES}, got {n}")

    adj: list[list[int]] = [[] for _ in range(n)]
    wmat: dict[tuple[int, int], float] = {}
    for (u, v), w in wg.weights.items():
        adj[u].append(v)
        adj[v].append(u)
        wmat[(u, v)] = wmat[(v, u)] = float(w)
    for a in adj:
        a.sort()

    # (vertex bitmask, vertex count, weight, is_cycle)
    comps: list[tuple[int, int, float, int]] = []
    for (u, v), w in wg.weights.items():
        comps.append((1 << u | 1 << v, 2, float(w) * float(w), 0))
    for cyc in _simple_cycles(adj, n):
        mask = 0
        weight = 1.0
        for i, u in enumerate(cyc):
            mask |= 1 << u
            weight *= wmat[(u, cyc[(i + 1) % len(cyc)])]
        comps.append((mask, len(cyc), weight, 1))

    b = [0.0] * (n + 1)
    b[0] = 1.0

    def extend(start: int, used: int, k: int, r: int, c: int, w: float):
        for i in range(start, len(comps)):
            mask, cnt, cw, isc = comps[i]
            if mask & used or k + cnt > n:
                continue
            k2, r2, c2, w2 = k + cnt, r + 1, c + isc, w * cw
            b[k2] += (-1.0) ** r2 * (2.0 ** c2) * w2
            extend(i + 1, used | mask, k2, r2, c2, w2)

    extend(0, 0, 0, 0, 0, 1.0)
    return CharPoly(tuple(b))


def char_poly_from_spectrum(s: Spectrum) -> CharPoly:
    """Expand prod_i (x - lambda_i) into coefficients b_0..b_n."""
    coef = [1.0]
    for lam in s.eigenvalues:
        nxt = [0.0] * (len(coef) + 1)
        for i, ci in enumerate(coef):
            nxt[i] += ci
            nxt[i + 1] -= lam * ci
        coef = nxt
    return CharPoly(tuple(coef))
