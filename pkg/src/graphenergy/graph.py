"""Simple undirected graphs: representation, standard families, degree/leaf
statistics and edge-list file I/O.

Vertices are dense integer ids ``0..n-1``.  Graphs are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Graph",
    "DegreeProfile",
    "GraphError",
    "EdgeListParseError",
    "degree_profile",
    "make_family",
    "path",
    "star",
    "cycle",
    "complete",
    "double_star",
    "connected_components",
    "is_tree",
    "load_edge_list",
    "save_edge_list",
]


class GraphError(ValueError):
    """Invalid graph construction or family parameters."""


class EdgeListParseError(GraphError):
    """Malformed edge-list file; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Rejects self-loops and duplicate edges.  Adjacency lists are sorted.
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        canonical = []
        seen = set()
        adj = [[] for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
            canonical.append((u, v))
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(canonical)))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degree/leaf statistics plus the global histograms.

    ``d[v] = l[v] + delta[v]`` always holds: every neighbor of ``v`` is
    either a leaf or an inner vertex.
    """

    d: tuple[int, ...]            # degree
    l: tuple[int, ...]            # number of leaf neighbors
    delta: tuple[int, ...]        # number of inner (degree >= 2) neighbors
    leaves: frozenset[int]        # L: vertices of degree 1
    inner: frozenset[int]         # V': vertices of degree >= 2
    isolated: frozenset[int]      # I: vertices of degree 0
    e11: int                      # edges with both endpoints leaves
    hist_n: dict[int, int]        # k -> |N_k|, vertices of degree k
    hist_n1: dict[int, int]       # k -> |N_{k,1}|, leaves whose neighbor has degree k


def degree_profile(g: Graph) -> DegreeProfile:
    """Compute the full degree/leaf profile of ``g``."""
    d = g.degrees()
    leaves = frozenset(v for v in range(g.n) if d[v] == 1)
    inner = frozenset(v for v in range(g.n) if d[v] >= 2)
    isolated = frozenset(v for v in range(g.n) if d[v] == 0)
    l = [0] * g.n
    delta = [0] * g.n
    for v in range(g.n):
        for w in g.adj[v]:
            if d[w] == 1:
                l[v] += 1
            else:
                delta[v] += 1
    e11 = sum(1 for u, v in g.edges if d[u] == 1 and d[v] == 1)
    hist_n: dict[int, int] = {}
    for v in range(g.n):
        hist_n[d[v]] = hist_n.get(d[v], 0) + 1
    hist_n1: dict[int, int] = {}
    for v in leaves:
        k = d[g.adj[v][0]]
        hist_n1[k] = hist_n1.get(k, 0) + 1
    return DegreeProfile(
        d=tuple(d),
        l=tuple(l),
        delta=tuple(delta),
        leaves=leaves,
        inner=inner,
        isolated=isolated,
        e11=e11,
        hist_n=hist_n,
        hist_n1=hist_n1,
    )


# ---------------------------------------------------------------------------
# Standard families


def path(n: int) -> Graph:
    """Path P_n on ``n`` vertices."""
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Graph:
    """Star S_k: center 0 joined to ``k`` leaves (k edges, k+1 vertices)."""
    if k < 1:
        raise GraphError(f"star needs k >= 1, got {k}")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def cycle(n: int) -> Graph:
    """Cycle C_n on ``n`` vertices."""
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 1:
        raise GraphError(f"complete needs n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def double_star(p: int, q: int) -> Graph:
    """Double star S_{p,q}: centers of S_p and S_q joined by one edge.

    Vertex 0 is the S_p center with leaves 1..p; vertex p+1 is the S_q
    center with leaves p+2..p+q+1.
    """
    if p < 1 or q < 1:
        raise GraphError(f"double star needs p,q >= 1, got ({p},{q})")
    c0, c1 = 0, p + 1
    edges = [(c0, i) for i in range(1, p + 1)]
    edges.append((c0, c1))
    edges += [(c1, i) for i in range(p + 2, p + q + 2)]
    return Graph(p + q + 2, edges)


_FAMILIES = {
    "path": path,
    "star": star,
    "cycle": cycle,
    "complete": complete,
    "double_star": double_star,
}


def make_family(kind: str, *params: int) -> Graph:
    """Build a named family graph: path, star, cycle, complete or double_star."""
    try:
        ctor = _FAMILIES[kind]
    except KeyError:
        raise GraphError(f"unknown family {kind!r}") from None
    return ctor(*params)


# ---------------------------------------------------------------------------
# Connectivity


def connected_components(g: Graph) -> list[set[int]]:
    """Partition the vertex set into connected components (BFS)."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        frontier = [s]
        while frontier:
            v = frontier.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    frontier.append(w)
        comps.append(comp)
    return comps


def is_tree(g: Graph) -> bool:
    """True iff ``g`` is connected with exactly n-1 edges."""
    return g.m == g.n - 1 and len(connected_components(g)) == 1


# ---------------------------------------------------------------------------
# Edge-list I/O
#
# Format: one edge per line, two whitespace-separated nonnegative integers;
# '#' starts a comment line; blank lines are ignored.  save_edge_list emits a
# "# n <count>" comment so isolated vertices survive a round trip; when that
# directive is present, ids are taken verbatim, otherwise arbitrary ids are
# remapped (in sorted order) to 0..n-1.

_N_DIRECTIVE = re.compile(r"#\s*n\s*[= ]\s*(\d+)\s*$")


def load_edge_list(path_str) -> Graph:
    """Parse an edge-list file into a Graph."""
    raw_edges: list[tuple[int, int]] = []
    declared_n = None
    seen: set[tuple[int, int]] = set()
    with open(path_str) as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                m = _N_DIRECTIVE.match(line)
                if m:
                    declared_n = int(m.group(1))
                continue
            parts = line.split()
            if len(parts) != 2:
                raise EdgeListParseError(line_no, f"expected two vertex ids, got {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListParseError(line_no, f"non-integer token in {line!r}") from None
            if u < 0 or v < 0:
                raise EdgeListParseError(line_no, f"negative vertex id in {line!r}")
            if u == v:
                raise EdgeListParseError(line_no, f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise EdgeListParseError(line_no, f"duplicate edge ({u},{v})")
            seen.add(key)
            raw_edges.append((u, v))
    if declared_n is not None:
        for u, v in raw_edges:
            if u >= declared_n or v >= declared_n:
                raise GraphError(f"vertex id {max(u, v)} exceeds declared n={declared_n}")
        return Graph(declared_n, raw_edges)
    ids = sorted({x for e in raw_edges for x in e})
    remap = {old: new for new, old in enumerate(ids)}
    return Graph(len(ids), [(remap[u], remap[v]) for u, v in raw_edges])


def save_edge_list(g: Graph, path_str) -> None:
    """Write ``g`` in edge-list format (with a vertex-count comment)."""
    with open(path_str, "w") as fh:
        fh.write(f"# n {g.n}\n")
        for u, v in g.edges:
            fh.write(f"{u} {v}\n")
