"""Edge and vertex connectivity, and membership in minimally connected classes.

Connectivity values come from unit-capacity max-flow (Menger), with early
termination after k augmenting paths for the threshold variants.  The vertex
version runs over a reduced pair schedule: fix a minimum-degree vertex v, then
it is enough to probe v against its non-neighbours plus every non-adjacent
pair inside N(v).  Any minimum cut either misses v (so it separates v from one
of its non-neighbours) or contains v, in which case v has neighbours in two
different components of the cut and those two are a non-adjacent pair in N(v).

A graph is minimally k-(edge-)connected when it is k-(edge-)connected and
deleting any single edge destroys that property.  Those predicates are the
direct definition, one edge deletion at a time.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _flow
from .graph import Graph, bits

_BIG = 1 << 20


def _require_multi_vertex(g: Graph) -> None:
    if g.n < 2:
        raise ValueError("connectivity is undefined for a single-vertex graph")


def edge_connectivity(g: Graph) -> int:
    """Smallest number of edges whose deletion disconnects g."""
    _require_multi_vertex(g)
    if not g.is_connected():
        return 0
    adj = g.adjacency_rows()
    best = _BIG
    for t in range(1, g.n):
        best = min(best, _flow.edge_disjoint_paths(adj, 0, t, limit=best))
    return best


def is_k_edge_connected(g: Graph, k: int) -> bool:
    """Threshold test lambda(g) >= k; flows stop after k augmentations."""
    _require_multi_vertex(g)
    if k <= 0:
        return True
    if g.min_degree() < k:
        return False  # lambda <= delta always
    if not g.is_connected():
        return False
    adj = g.adjacency_rows()
    return all(
        _flow.edge_disjoint_paths(adj, 0, t, limit=k) >= k for t in range(1, g.n)
    )


def _vertex_pair_schedule(g: Graph) -> list[tuple[int, int]]:
    """Non-adjacent probe pairs that are guaranteed to witness a minimum cut."""
    n = g.n
    v = min(range(n), key=g.degree)
    full = (1 << n) - 1
    pairs = [(v, t) for t in bits(full & ~g.closed_neighbors_mask(v))]
    nbrs = g.neighbors(v)
    for a_pos, a in enumerate(nbrs):
        for b in nbrs[a_pos + 1:]:
            if not g.has_edge(a, b):
                pairs.append((a, b))
    return pairs

def vertex_connectivity(g: Graph) -> int:
    """Smallest number of vertices whose deletion disconnects g (n-1 if complete)."""
    _require_multi_vertex(g)
    if not g.is_connected():
        return 0
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    adj = g.adjacency_rows()
    best = _BIG
    for s, t in _vertex_pair_schedule(g):
        best = min(best, _flow.vertex_disjoint_paths(adj, s, t, limit=best))
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    """Threshold test kappa(g) >= k."""
    _require_multi_vertex(g)
    if k <= 0:
        return True
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1 >= k
    if g.min_degree() < k or not g.is_connected():
        return False
    adj = g.adjacency_rows()
    return all(
        _flow.vertex_disjoint_paths(adj, s, t, limit=k) >= k
        for s, t in _vertex_pair_schedule(g)
    )


def bridges(g: Graph) -> list[tuple[int, int]]:
    """Edges whose deletion disconnects their endpoints."""
    out = []
    adj = g.adjacency_rows()
    for u, v in g.edges():
        reduced = g.delete_edge(u, v).adjacency_rows()
        if _flow.edge_disjoint_paths(reduced, u, v, limit=1) == 0:
            out.append((u, v))
    return out


def cut_vertices(g: Graph) -> list[int]:
    """Vertices whose deletion increases the number of components."""
    _require_multi_vertex(g)
    base = len(g.component_masks())
    out = []
    full = (1 << g.n) - 1
    for v in range(g.n):
        rest = full & ~(1 << v)
        if rest.bit_count() >= 1:
            sub = g.induced_subgraph(rest)
            if len(sub.component_masks()) > base:
                out.append(v)
    return out


def is_minimally_k_edge_connected(g: Graph, k: int) -> bool:
    """lambda(g) >= k and every single edge deletion drops lambda below k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if not is_k_edge_connected(g, k):
        return False
    return all(
        not is_k_edge_connected(g.delete_edge(u, v), k) for u, v in g.edges()
    )


def is_minimally_k_connected(g: Graph, k: int) -> bool:
    """kappa(g) >= k and every single edge deletion drops kappa below k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if not is_k_connected(g, k):
        return False
    return all(not is_k_connected(g.delete_edge(u, v), k) for u, v in g.edges())


@dataclass(frozen=True)
class ClassMembership:
    """Connectivity profile of a graph relative to a target k."""

    n: int
    m: int
    k: int
    vertex_connectivity: int
    edge_connectivity: int
    is_k_connected: bool
    is_k_edge_connected: bool
    is_minimally_k_connected: bool
    is_minimally_k_edge_connected: bool


def classify(g: Graph, k: int) -> ClassMembership:
    if k < 1:
        raise ValueError("k must be at least 1")
    _require_multi_vertex(g)
    return ClassMembership(
        n=g.n,
        m=g.m,
        k=k,
        vertex_connectivity=vertex_connectivity(g),
        edge_connectivity=edge_connectivity(g),
        is_k_connected=is_k_connected(g, k),
        is_k_edge_connected=is_k_edge_connected(g, k),
        is_minimally_k_connected=is_minimally_k_connected(g, k),
        is_minimally_k_edge_connected=is_minimally_k_edge_connected(g, k),
    )
