"""graph6, plain edge-list and DOT serialisation.

graph6 layout: a size header (byte n+63 for n <= 62, '~' plus three 6-bit
bytes up to n = 258047, '~~' plus six 6-bit bytes beyond), followed by the
upper-triangle adjacency bits in column-major order -- for every column
j = 1..n-1 the bits (0,j), (1,j), ..., (j-1,j) -- packed big-endian into
6-bit groups, each group offset by 63.  Padding bits must be zero.
"""

from __future__ import annotations

from .graph import Graph, build_graph

__all__ = [
    "graph6_bytes",
    "from_graph6",
    "to_edgelist_text",
    "from_edgelist_text",
    "to_dot",
]

_HEADER = b">>graph6<<"


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise ValueError("graph6 cannot encode a negative vertex count")
    if n <= 62:
        return bytes((n + 63,))
    if n <= 258047:
        return bytes((126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63))
    if n <= 68719476735:
        return bytes((126, 126)) + bytes(((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"vertex count {n} too large for graph6")


def _size_byte(b: int) -> int:
    if not 63 <= b <= 126:
        raise ValueError(f"invalid graph6 size byte {b!r}")
    return b - 63


def _decode_size(data: bytes) -> tuple:
    if not data:
        raise ValueError("empty graph6 data")
    if data[0] != 126:
        return _size_byte(data[0]), 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise ValueError("truncated graph6 size field")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | _size_byte(b)
        return n, 4
    if len(data) < 8:
        raise ValueError("truncated graph6 size field")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | _size_byte(b)
    return n, 8


def _pack_bits(n: int, bit) -> bytes:
    """Pack bit(i, j) over the column-major upper triangle into 6-bit bytes."""
    out = bytearray()
    acc = 0
    fill = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if bit(i, j) else 0)
            fill += 1
            if fill == 6:
                out.append(acc + 63)
                acc = 0
                fill = 0
    if fill:
        out.append((acc << (6 - fill)) + 63)
    return bytes(out)


def graph6_bytes(G: Graph) -> bytes:
    """Bit-exact graph6 encoding of G (no header, no trailing newline)."""
    adj = G.adj
    return _encode_size(G.n) + _pack_bits(G.n, lambda i, j: j in adj[i])


def graph6_bytes_from_rows(n: int, rows) -> bytes:
    """graph6 encoding from adjacency bitmask rows (used by the search)."""
    return _encode_size(n) + _pack_bits(n, lambda i, j: (rows[i] >> j) & 1)


def from_graph6(data) -> Graph:
    """Decode one graph6 value (accepts str or bytes, optional format header)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    n, pos = _decode_size(data)
    body = data[pos:]
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise ValueError(
            f"graph6 body has {len(body)} bytes, expected {expect} for n={n}"
        )
    for b in body:
        if not 63 <= b <= 126:
            raise ValueError(f"invalid graph6 byte {b!r}")
    edges = []
    idx = 0
    bits = 0
    acc = 0
    for j in range(1, n):
        for i in range(j):
            if bits == 0:
                acc = body[idx] - 63
                idx += 1
                bits = 6
            bits -= 1
            if (acc >> bits) & 1:
                edges.append((i, j))
    # padding bits must be zero for a bit-exact round trip
    if bits and acc & ((1 << bits) - 1):
        raise ValueError("non-zero padding bits in graph6 data")
    return build_graph(n, edges)


def to_edgelist_text(G: Graph) -> str:
    """Plain text form: first line "n m", then one "u v" line per edge."""
    lines = [f"{G.n} {G.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def from_edgelist_text(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad edge-list header {lines[0]!r}, expected 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"edge-list declares {m} edges but has {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)


def to_dot(G: Graph) -> str:
    """DOT text for visualisation (write-only format)."""
    body = []
    isolated = [v for v in range(G.n) if not G.adj[v]]
    body.extend(f"  {v};" for v in isolated)
    body.extend(f"  {u} -- {v};" for u, v in G.edges())
    return "graph G {\n" + "\n".join(body) + ("\n" if body else "") + "}\n"
