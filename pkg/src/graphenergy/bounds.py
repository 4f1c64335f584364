"""Closed-form upper bounds on graph energy, the weighted-star decomposition
behind the leaf-aware bounds, and the comparison machinery between the
leaf-aware and degree-based tree bounds.

Bounds that do not apply to a given graph (wrong shape, too few vertices,
isolated vertices) are reported as ``None`` rather than raised, so a report
row serializes uniformly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import (
    Graph,
    GraphError,
    DegreeProfile,
    connected_components,
    degree_profile,
    is_tree,
)
from .spectral import WeightedGraph, star_energy_closed_form

__all__ = [
    "BoundReport",
    "StarDecomposition",
    "AdTpComparison",
    "mcclelland",
    "koolen_moulton",
    "aj_bound",
    "ad_bound",
    "tp_bound",
    "tpg_bound",
    "global_bound",
    "global_bound_isolated",
    "degree_hist_bound",
    "star_decomposition",
    "ad_tp_comparison",
    "double_star_improvement_check",
    "equality_condition_check",
    "bound_report",
]


def mcclelland(g: Graph) -> float:
    """sqrt(2mn)."""
    return math.sqrt(2.0 * g.m * g.n)


def koolen_moulton(g: Graph) -> float | None:
    """2m/n + sqrt((n-1)(2m - (2m/n)^2)); defined only when 2m >= n."""
    n, m2 = g.n, 2 * g.m
    if m2 < n:
        return None
    avg = m2 / n
    return avg + math.sqrt((n - 1) * (m2 - avg * avg))


def aj_bound(g: Graph) -> float:
    """Sum of sqrt(degree) over all vertices."""
    return math.fsum(math.sqrt(d) for d in g.degrees())


def ad_bound(t: Graph) -> float | None:
    """Tree bound sum_{i>=2} 2*sqrt(d_i - 1) + 2*sqrt(max degree).

    Degrees sorted descending; applies to trees with n >= 3 only.
    """
    if t.n < 3 or not is_tree(t):
        return None
    degs = sorted(t.degrees(), reverse=True)
    return math.fsum(2.0 * math.sqrt(d - 1) for d in degs[1:]) + 2.0 * math.sqrt(degs[0])


def _tp_sum(profile: DegreeProfile) -> float:
    return math.fsum(
        math.sqrt(3 * profile.l[v] + profile.d[v]) for v in sorted(profile.inner)
    )


def tp_bound(g: Graph, profile: DegreeProfile | None = None) -> float | None:
    """Leaf-aware local bound sum_{inner v} sqrt(3 l(v) + d(v)).

    Equivalently sum sqrt(4 l(v) + delta(v)); connected graphs with
    n >= 3 only, with equality exactly for stars.
    """
    if g.n < 3 or len(connected_components(g)) != 1:
        return None
    return _tp_sum(profile or degree_profile(g))


def tpg_bound(g: Graph, profile: DegreeProfile | None = None) -> float:
    """General form 2*e11 + sum_{inner v} sqrt(3 l(v) + d(v)); any graph."""
    profile = profile or degree_profile(g)
    return 2.0 * profile.e11 + _tp_sum(profile)


def global_bound(g: Graph, profile: DegreeProfile | None = None) -> float:
    """2*e11 + sqrt(2(|V|-|L|)(|E|+|L|-3*e11)); no isolated vertices allowed."""
    profile = profile or degree_profile(g)
    if profile.isolated:
        raise GraphError(
            f"global bound needs a graph without isolated vertices "
            f"({len(profile.isolated)} present); use global_bound_isolated"
        )
    return _global(g, profile, isolated=0)


def global_bound_isolated(g: Graph, profile: DegreeProfile | None = None) -> float:
    """Variant of the global bound discounting the isolated-vertex count."""
    profile = profile or degree_profile(g)
    return _global(g, profile, isolated=len(profile.isolated))


def _global(g: Graph, profile: DegreeProfile, isolated: int) -> float:
    e11 = profile.e11
    inner_count = g.n - len(profile.leaves) - isolated
    return 2.0 * e11 + math.sqrt(2.0 * inner_count * (g.m + len(profile.leaves) - 3 * e11))


def degree_hist_bound(profile: DegreeProfile) -> float:
    """Histogram form 2*e11 + sum_k |N_k| sqrt(3 |N_{k,1}|/|N_k| + k), k >= 2."""
    total = 2.0 * profile.e11
    for k in sorted(profile.hist_n):
        if k < 2:
            continue
        nk = profile.hist_n[k]
        nk1 = profile.hist_n1.get(k, 0)
        total += nk * math.sqrt(3.0 * nk1 / nk + k)
    return total


# ---------------------------------------------------------------------------
# Star decomposition (the construction behind the leaf-aware bound)


@dataclass(frozen=True)
class StarDecomposition:
    """Weighted stars S(v), one per inner vertex v, covering the graph.

    Edges to leaves carry weight 1, edges between inner vertices weight 1/2
    (stored as exact Fractions), so the weight matrices superpose to the
    adjacency matrix exactly.
    """

    n: int
    stars: tuple[tuple[int, WeightedGraph], ...]

    def superposition(self) -> dict[tuple[int, int], Fraction]:
        total: dict[tuple[int, int], Fraction] = {}
        for _, star in self.stars:
            for e, w in star.weights.items():
                total[e] = total.get(e, Fraction(0)) + w
        return total

    def total_energy(self) -> float:
        """Sum of closed-form star energies; equals the local leaf-aware bound."""
        return math.fsum(
            star_energy_closed_form(star.weights.values()) for _, star in self.stars
        )


def star_decomposition(g: Graph, profile: DegreeProfile | None = None) -> StarDecomposition:
    """Decompose a connected graph (n >= 3) into weighted stars."""
    if g.n < 3 or len(connected_components(g)) != 1:
        raise GraphError("star decomposition needs a connected graph with n >= 3")
    profile = profile or degree_profile(g)
    half = Fraction(1, 2)
    one = Fraction(1)
    stars = []
    for v in sorted(profile.inner):
        weights = {}
        for w in g.adj[v]:
            weights[(v, w)] = one if profile.d[w] == 1 else half
        stars.append((v, WeightedGraph(g.n, weights)))
    return StarDecomposition(n=g.n, stars=tuple(stars))


# ---------------------------------------------------------------------------
# Comparison between the leaf-aware bound and the degree-based tree bound


def _f(x: float, y: float) -> float:
    return math.sqrt(4 * x + 4 * (y - 1)) - math.sqrt(4 * x + y)


@dataclass(frozen=True)
class AdTpComparison:
    """Sufficient conditions for the leaf-aware bound to beat the tree bound.

    The conditions form an implication chain iv => iii => ii => i, and i
    guarantees tp_bound <= ad_bound.  Inner vertices split into V1
    (exactly one inner neighbor) and V2 (two or more); a star's center has
    no inner neighbors and contributes to neither set.
    """

    f_values: dict[int, float]
    v1: frozenset[int]
    v2: frozenset[int]
    l1: int | None  # min leaf count over V1
    l2: int | None  # max leaf count over V2
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    cond_iv: bool


def ad_tp_comparison(t: Graph, profile: DegreeProfile | None = None) -> AdTpComparison | None:
    """Evaluate the comparison conditions on a tree with n >= 3."""
    if t.n < 3 or not is_tree(t):
        return None
    profile = profile or degree_profile(t)
    v1 = frozenset(v for v in profile.inner if profile.delta[v] == 1)
    v2 = frozenset(v for v in profile.inner if profile.delta[v] >= 2)
    f_values = {v: _f(profile.l[v], profile.delta[v]) for v in sorted(v1 | v2)}

    cond_i = math.fsum(f_values.values()) >= 0.0
    cond_ii = (
        math.fsum(_f(profile.l[v], 1) for v in v1)
        + math.fsum(_f(profile.l[v], 2) for v in v2)
    ) >= 0.0

    l1 = min((profile.l[v] for v in v1), default=None)
    l2 = max((profile.l[v] for v in v2), default=None)
    lhs = (math.sqrt(l2 + 1) - math.sqrt(l2 + 0.5)) * len(v2) if v2 else 0.0
    rhs = (math.sqrt(l1 + 0.25) - math.sqrt(l1)) * len(v1) if v1 else 0.0
    cond_iii = lhs >= rhs
    n = t.n
    cond_iv = 2.0 * (math.sqrt(n) - math.sqrt(n - 0.5)) * len(v2) >= len(v1)
    return AdTpComparison(
        f_values=f_values,
        v1=v1,
        v2=v2,
        l1=l1,
        l2=l2,
        cond_i=cond_i,
        cond_ii=cond_ii,
        cond_iii=cond_iii,
        cond_iv=cond_iv,
    )


def double_star_improvement_check(p: int, q: int) -> bool:
    """True iff the leaf-aware bound beats the degree bound on S_{p,q}.

    That is, sqrt(4p+1) + sqrt(4q+1) <= 2(sqrt(p) + sqrt(q+1)); guaranteed
    whenever q <= 3p - 1.
    """
    if not (1 <= p <= q):
        raise GraphError(f"double star comparison needs 1 <= p <= q, got ({p},{q})")
    return math.sqrt(4 * p + 1) + math.sqrt(4 * q + 1) <= 2.0 * (
        math.sqrt(p) + math.sqrt(q + 1)
    )


def equality_condition_check(g: Graph, profile: DegreeProfile | None = None) -> int | None:
    """Constant k with 4 l(v) + delta(v) = k over all inner vertices, if any.

    When such a k exists the local and global bounds coincide.  Connected
    graphs with n >= 3 only.
    """
    if g.n < 3 or len(connected_components(g)) != 1:
        raise GraphError("equality condition needs a connected graph with n >= 3")
    profile = profile or degree_profile(g)
    values = {4 * profile.l[v] + profile.delta[v] for v in profile.inner}
    if len(values) == 1:
        return values.pop()
    return None


# ---------------------------------------------------------------------------
# Combined report


@dataclass(frozen=True)
class BoundReport:
    """All upper bounds evaluated on one graph; None marks an inapplicable bound."""

    mcclelland: float
    koolen_moulton: float | None
    aj: float
    ad: float | None
    tp: float | None
    tpg: float
    global_: float | None
    global_isolated: float
    degree_hist: float

    _FIELDS = (
        "mcclelland",
        "koolen_moulton",
        "aj",
        "ad",
        "tp",
        "tpg",
        "global_",
        "global_isolated",
        "degree_hist",
    )

    def as_dict(self) -> dict[str, float | None]:
        return {name.rstrip("_"): getattr(self, name) for name in self._FIELDS}

    def applicable(self) -> dict[str, float]:
        return {k: v for k, v in self.as_dict().items() if v is not None}


def bound_report(g: Graph, profile: DegreeProfile | None = None) -> BoundReport:
    """Evaluate every bound on ``g``, flagging the inapplicable ones."""
    profile = profile or degree_profile(g)
    return BoundReport(
        mcclelland=mcclelland(g),
        koolen_moulton=koolen_moulton(g),
        aj=aj_bound(g),
        ad=ad_bound(g),
        tp=tp_bound(g, profile),
        tpg=tpg_bound(g, profile),
        global_=None if profile.isolated else global_bound(g, profile),
        global_isolated=global_bound_isolated(g, profile),
        degree_hist=degree_hist_bound(profile),
    )
