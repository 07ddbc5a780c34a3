"""graph6 reader/writer for graphs on up to 62 vertices.

The format: one printable ASCII line per graph.  The first byte is n+63, the
rest pack the upper triangle of the adjacency matrix in column order
x(0,1), x(0,2), x(1,2), x(0,3), ... into 6-bit groups, most significant bit
first, each group offset by 63.  The optional ">>graph6<<" header is accepted
and skipped.  Multi-byte vertex counts (n > 62) are rejected explicitly.
"""

from __future__ import annotations

from .graph import Graph, pair_count, pair_list

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def write_graph6(g: Graph) -> str:
    if g.n > 62:
        raise Graph6Error(f"graph6 output supports at most 62 vertices, got {g.n}", 0)
    out = [chr(g.n + 63)]
    bit_buf = 0
    bit_len = 0
    adj = g.adjacency_rows()
    for i, j in pair_list(g.n):
        bit_buf = (bit_buf << 1) | ((adj[i] >> j) & 1)
        bit_len += 1
        if bit_len == 6:
            out.append(chr(bit_buf + 63))
            bit_buf = 0
            bit_len = 0
    if bit_len:
        out.append(chr((bit_buf << (6 - bit_len)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (header tolerated, surrounding whitespace ignored)."""
    s = line.strip()
    base = 0
    if s.startswith(HEADER):
        base = len(HEADER)
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 line", base)
    first = ord(s[0])
    if first == 126:
        raise Graph6Error("multi-byte vertex counts (n > 62) not supported", base)
    if not 63 <= first <= 126:
        raise Graph6Error(f"invalid byte {first}", base)
    n = first - 63
    if n == 0:
        raise Graph6Error("graphs must have at least one vertex", base)
    need_bits = pair_count(n)
    need_bytes = (need_bits + 5) // 6
    payload = s[1:]
    if len(payload) < need_bytes:
        raise Graph6Error(
            f"truncated payload: need {need_bytes} bytes for n={n}, got {len(payload)}",
            base + 1 + len(payload),
        )
    if len(payload) > need_bytes:
        raise Graph6Error("trailing bytes after payload", base + 1 + need_bytes)
    adj = [0] * n
    pairs = pair_list(n)
    idx = 0
    for k, ch in enumerate(payload):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"invalid byte {ord(ch)}", base + 1 + k)
        for b in range(5, -1, -1):
            if idx >= need_bits:
                if (val >> b) & 1:
                    raise Graph6Error("nonzero padding bits", base + 1 + k)
                continue
            if (val >> b) & 1:
                i, j = pairs[idx]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(adj))


def parse_graph6_lines(text: str) -> list[Graph]:
    """Decode every non-empty line of a graph6 file."""
    graphs = []
    for ln in text.splitlines():
        if ln.strip():
            graphs.append(parse_graph6(ln))
    return graphs


def write_graph6_lines(graphs) -> str:
    return "".join(write_graph6(g) + "\n" for g in graphs)
