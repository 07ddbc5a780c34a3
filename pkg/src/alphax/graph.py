"""Small simple graphs on at most 64 vertices, stored as bitset adjacency rows.

A :class:`Graph` is an immutable value: every mutating operation returns a new
instance.  Vertices are integers 0..n-1.  Row ``u`` is a Python int whose bit
``v`` says whether uv is an edge, which makes neighbourhood algebra (unions,
intersections, differences of vertex sets) single integer operations.

Vertex sets are plain ints used as bitmasks, or any iterable of vertex
indices; helpers below convert between the two.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from . import _flow

MAX_VERTICES = 64


def mask_of(vertices: Iterable[int] | int) -> int:
    """Bitmask for a vertex collection (ints pass through unchanged)."""
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def pair_index(i: int, j: int) -> int:
    """Rank of the vertex pair i<j in column order: (0,1),(0,2),(1,2),(0,3),..."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_list(n: int) -> list[tuple[int, int]]:
    """All vertex pairs of an n-vertex graph in column order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


class Graph:
    """Immutable simple graph with bitset adjacency rows."""

    __slots__ = ("n", "m", "_adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside supported range 1..{MAX_VERTICES}")
        if len(adj) != n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << n) - 1
        deg_total = 0
        for u, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"row {u} references vertices >= n")
            if (row >> u) & 1:
                raise ValueError(f"loop at vertex {u}")
            deg_total += row.bit_count()
        for u, row in enumerate(adj):
            for v in bits(row):
                if not (adj[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", deg_total // 2)
        object.__setattr__(self, "_adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph instances are immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (_rebuild, (self.n, self._adj))

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from (u, v) pairs; duplicates collapse, loops are errors."""
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u}, {v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) references a vertex >= n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Build from a bitmask over the column-ordered vertex pairs."""
        adj = [0] * n
        for idx, (i, j) in enumerate(pair_list(n)):
            if (mask >> idx) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        return cls(n, tuple(adj))

    def edge_mask(self) -> int:
        mask = 0
        for i, j in self.edges():
            mask |= 1 << pair_index(i, j)
        return mask

    # -- basic queries -----------------------------------------------------

    def adjacency_rows(self) -> tuple[int, ...]:
        return self._adj

    def neighbors_mask(self, u: int) -> int:
        return self._adj[u]

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self._adj[u]))

    def closed_neighbors_mask(self, u: int) -> int:
        return self._adj[u] | (1 << u)

    def degree(self, u: int) -> int:
        return self._adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._adj]

    def min_degree(self) -> int:
        return min(self.degrees())

    def max_degree(self) -> int:
        return max(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, sorted."""
        out = []
        for u, row in enumerate(self._adj):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def is_regular(self) -> bool:
        degs = self.degrees()
        return min(degs) == max(degs)

    # -- edge surgery ------------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("cannot add a loop")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) already present")
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present")
        adj = list(self._adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def induced_subgraph(self, vertices: Iterable[int] | int) -> "Graph":
        """Subgraph induced on the given vertices, relabelled 0..k-1 in sorted order."""
        keep = mask_of(vertices)
        if keep == 0:
            raise ValueError("induced subgraph on the empty vertex set is not defined")
        if keep & ~((1 << self.n) - 1):
            raise ValueError("vertex set references vertices >= n")
        kept = list(bits(keep))
        relabel = {v: i for i, v in enumerate(kept)}
        adj = [0] * len(kept)
        for v in kept:
            for w in bits(self._adj[v] & keep):
                adj[relabel[v]] |= 1 << relabel[w]
        return Graph(len(kept), tuple(adj))

    def switch_edges(self, u: int, v: int, nset: Iterable[int] | int) -> "Graph":
        """Move the edges from v to a set N of its neighbours over to u.

        N must be a non-empty subset of N(v) avoiding u and all of u's
        neighbours, so the result is again simple with the same edge count.
        """
        nm = mask_of(nset)
        if nm == 0:
            raise ValueError("switch set must be non-empty")
        if nm & ~self._adj[v]:
            raise ValueError("switch set must be a subset of N(v)")
        if nm & self.closed_neighbors_mask(u):
            raise ValueError("switch set must avoid u and its neighbourhood")
        adj = list(self._adj)
        for w in bits(nm):
            adj[v] &= ~(1 << w)
            adj[w] &= ~(1 << v)
            adj[u] |= 1 << w
            adj[w] |= 1 << u
        return Graph(self.n, tuple(adj))

    # -- connectivity-free structure --------------------------------------

    def component_masks(self) -> list[int]:
        """Vertex masks of the connected components, ordered by least vertex."""
        seen = 0
        comps = []
        full = (1 << self.n) - 1
        while seen != full:
            start = (~seen & full) & -(~seen & full)
            reach = start
            while True:
                ext = reach
                for v in bits(reach):
                    ext |= self._adj[v]
                if ext == reach:
                    break
                reach = ext
            comps.append(reach)
            seen |= reach
        return comps

    def is_connected(self) -> bool:
        return len(self.component_masks()) == 1

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges():
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a


def _rebuild(n: int, adj: tuple[int, ...]) -> Graph:
    return Graph(n, adj)


def neighbor_degree_sum(g: Graph, u: int) -> int:
    """Sum of deg(v) over neighbours v of u (0 for an isolated vertex)."""
    return sum(g.degree(v) for v in bits(g.neighbors_mask(u)))


def avg_neighbor_degree(g: Graph, u: int) -> float:
    """Average neighbour degree m(u); undefined for isolated vertices."""
    d = g.degree(u)
    if d == 0:
        raise ValueError(f"average neighbour degree undefined for isolated vertex {u}")
    return neighbor_degree_sum(g, u) / d


def all_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every simple cycle, once, as a vertex tuple starting at its least vertex.

    Exhaustive search: only intended for small graphs.  A cycle (s, v1, ..., vk)
    is emitted with s minimal and v1 < vk so each cycle appears in exactly one
    orientation.
    """
    out: list[tuple[int, ...]] = []
    n = g.n
    adj = g.adjacency_rows()

    def extend(start: int, path: list[int], used: int) -> None:
        last = path[-1]
        for w in bits(adj[last]):
            if w == start and len(path) >= 3:
                if path[1] < path[-1]:
                    out.append(tuple(path))
            elif w > start and not (used >> w) & 1:
                path.append(w)
                extend(start, path, used | (1 << w))
                path.pop()

    for s in range(n):
        extend(s, [s], 1 << s)
    return out


def chords_of_cycle(g: Graph, cycle: tuple[int, ...]) -> list[tuple[int, int]]:
    """Edges of g joining two non-consecutive vertices of the given cycle."""
    k = len(cycle)
    on_cycle = {(cycle[i], cycle[(i + 1) % k]) for i in range(k)}
    on_cycle |= {(b, a) for a, b in on_cycle}
    found = []
    for i in range(k):
        for j in range(i + 1, k):
            a, b = cycle[i], cycle[j]
            if g.has_edge(a, b) and (a, b) not in on_cycle:
                found.append((min(a, b), max(a, b)))
    return found


def has_chorded_cycle(g: Graph) -> bool:
    """True iff some cycle of g has a chord.

    An edge xy is a chord of some cycle exactly when g minus xy still has two
    internally vertex-disjoint x-y paths, so each edge is tested with a
    two-unit max-flow on the vertex-split network.
    """
    for x, y in g.edges():
        reduced = g.delete_edge(x, y)
        if _flow.vertex_disjoint_paths(reduced.adjacency_rows(), x, y, limit=2) >= 2:
            return True
    return False


# -- edge-list text format -------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Read the plain text format: first line "n m", then one "u v" line per edge."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header declares {m} edges but {len(lines) - 1} lines follow")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
