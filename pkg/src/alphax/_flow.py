"""Unit-capacity max-flow on tiny graphs, used for local connectivity queries.

Works directly on adjacency bitmask rows (tuple of ints, one per vertex) so it
can be shared by modules that should not depend on each other.  All networks
built here are small (at most 2n+2 nodes), so a plain Edmonds-Karp with BFS
augmenting paths is more than enough.  Every query takes an optional ``limit``
and stops as soon as that many augmenting paths have been found, which is what
threshold tests (is the connectivity at least k?) need.
"""

from collections import deque

_BIG = 1 << 20


class _FlowNet:
    """Adjacency-list flow network with paired forward/backward arcs."""

    __slots__ = ("heads", "arcs")

    def __init__(self, num_nodes: int):
        self.heads: list[list[int]] = [[] for _ in range(num_nodes)]
        self.arcs: list[list[int]] = []  # each arc is [to, cap]

    def add_arc(self, u: int, v: int, cap: int) -> None:
        self.heads[u].append(len(self.arcs))
        self.arcs.append([v, cap])
        self.heads[v].append(len(self.arcs))
        self.arcs.append([u, 0])

    def max_flow(self, s: int, t: int, limit: int) -> int:
        flow = 0
        arcs = self.arcs
        heads = self.heads
        while flow < limit:
            # BFS for a shortest augmenting path
            prev_arc = [-1] * len(heads)
            prev_arc[s] = -2
            queue = deque([s])
            while queue:
                u = queue.popleft()
                if u == t:
                    break
                for a in heads[u]:
                    v, cap = arcs[a]
                    if cap > 0 and prev_arc[v] == -1:
                        prev_arc[v] = a
                        queue.append(v)
            if prev_arc[t] == -1:
                break
            # all arcs carry capacity >= 1 along the path; push one unit
            v = t
            while v != s:
                a = prev_arc[v]
                arcs[a][1] -= 1
                arcs[a ^ 1][1] += 1
                v = arcs[a ^ 1][0]
            flow += 1
        return flow


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def edge_disjoint_paths(adj: tuple[int, ...], s: int, t: int, limit: int = _BIG) -> int:
    """Number of pairwise edge-disjoint s-t paths, capped at ``limit``.

    Each undirected edge becomes a pair of opposite unit-capacity arcs.
    """
    n = len(adj)
    net = _FlowNet(n)
    for u in range(n):
        for v in _bits(adj[u]):
            if v > u:
                net.add_arc(u, v, 1)
                net.add_arc(v, u, 1)
    return net.max_flow(s, t, limit)


def vertex_disjoint_paths(adj: tuple[int, ...], s: int, t: int, limit: int = _BIG) -> int:
    """Number of internally vertex-disjoint s-t paths, capped at ``limit``.

    Standard vertex splitting: v becomes v_in -> v_out with capacity 1
    (unbounded for s and t), and edge uv becomes arcs u_out -> v_in and
    v_out -> u_in.  Requires s and t non-adjacent, otherwise the count the
    caller wants is not bounded by a vertex cut.
    """
    if (adj[s] >> t) & 1:
        raise ValueError("vertex_disjoint_paths requires non-adjacent endpoints")
    n = len(adj)
    net = _FlowNet(2 * n)
    for v in range(n):
        cap = _BIG if v in (s, t) else 1
        net.add_arc(2 * v, 2 * v + 1, cap)  # v_in -> v_out
    for u in range(n):
        for v in _bits(adj[u]):
            if v > u:
                net.add_arc(2 * u + 1, 2 * v, _BIG)
                net.add_arc(2 * v + 1, 2 * u, _BIG)
    return net.max_flow(2 * s + 1, 2 * t, limit)
