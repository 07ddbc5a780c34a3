"""Canonical labelling for small graphs, and isomorphism testing built on it.

The canonical form of a graph is the lexicographically smallest upper-triangle
adjacency bitstring (in graph6 column order) over all vertex orderings the
search below generates.  The search respects iterated degree refinement: at
each position the next vertex must come from the lowest refinement colour
among unplaced vertices, the chosen vertex is individualized and the colouring
re-refined.  Because colours are computed from isomorphism-invariant data,
isomorphic graphs induce identical search trees and therefore identical
minimal bitstrings.

Two prunings keep the search small without touching correctness: branches are
cut as soon as their bit prefix exceeds the best known one, and at any node
only one candidate per twin class is tried (swapping two twins is an
automorphism that fixes every other vertex, so their subtrees are equal).

Intended for n <= 12; larger inputs are refused up front.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, pair_count, pair_list
from .graph6 import write_graph6

MAX_CANONICAL_VERTICES = 12


class CapabilityError(ValueError):
    """The requested size is beyond what this implementation supports."""


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Order-comparable fingerprint: vertex count plus canonical adjacency bits.

    ``bits`` packs the column-ordered upper triangle with the first pair in
    the most significant position, so integer order equals lexicographic
    order on bitstrings of equal length.
    """

    n: int
    bits: int

    def graph(self) -> Graph:
        npairs = pair_count(self.n)
        mask = 0
        for idx in range(npairs):
            if (self.bits >> (npairs - 1 - idx)) & 1:
                mask |= 1 << idx
        return Graph.from_edge_mask(self.n, mask)

    def graph6(self) -> str:
        return write_graph6(self.graph())


def _refine(n: int, adj: tuple[int, ...], colors: list[int]) -> list[int]:
    """Iterate colour refinement to a fixpoint; colour ids are rank-normalized."""
    while True:
        sigs = []
        for v in range(n):
            nbr = tuple(sorted(colors[u] for u in bits(adj[v])))
            sigs.append((colors[v], nbr))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return new
        colors = new


def _twin_reps(n: int, adj: tuple[int, ...]) -> list[int]:
    """rep[v] = least vertex whose swap with v is an automorphism (possibly v)."""
    rep = list(range(n))
    for x in range(n):
        if rep[x] != x:
            continue
        for y in range(x + 1, n):
            if rep[y] != y:
                continue
            if adj[x] & ~(1 << y) == adj[y] & ~(1 << x):
                rep[y] = x
    return rep


def canonical_form(g: Graph) -> CanonicalForm:
    n = g.n
    if n > MAX_CANONICAL_VERTICES:
        raise CapabilityError(
            f"canonical form supports at most {MAX_CANONICAL_VERTICES} vertices, got {n}"
        )
    if n == 1:
        return CanonicalForm(1, 0)
    adj = g.adjacency_rows()
    rep = _twin_reps(n, adj)

    degs = g.degrees()
    degree_rank = {d: i for i, d in enumerate(sorted(set(degs)))}
    colors0 = _refine(n, adj, [degree_rank[d] for d in degs])

    best: list[int] | None = None

    def dfs(colors: list[int], order: list[int], codes: list[int]) -> None:
        nonlocal best
        pos = len(order)
        if pos == n:
            if best is None or codes < best:
                best = codes.copy()
            return
        unplaced = [v for v in range(n) if v not in order]
        low = min(colors[v] for v in unplaced)
        tried: set[int] = set()
        branches = []
        for v in unplaced:
            if colors[v] != low or rep[v] in tried:
                continue
            tried.add(rep[v])
            code = 0
            for w in order:
                code = (code << 1) | ((adj[v] >> w) & 1)
            branches.append((code, v))
        branches.sort()
        for code, v in branches:
            if best is not None and codes == best[:pos] and code > best[pos]:
                break  # branches are sorted, everything after is worse
            new_colors = [2 * c for c in colors]
            new_colors[v] -= 1
            order.append(v)
            codes.append(code)
            dfs(_refine(n, adj, new_colors), order, codes)
            order.pop()
            codes.pop()

    dfs(colors0, [], [])
    assert best is not None
    packed = 0
    for pos, code in enumerate(best):
        packed = (packed << pos) | code
    return CanonicalForm(n, packed)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test; a size mismatch is just a negative answer."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
