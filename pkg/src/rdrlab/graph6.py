"""graph6 codec: compact single-line text encoding of undirected graphs.

Order <= 62 uses one header byte (order + 63); larger orders use the
standard '~' extended headers.  Edge bits run over the upper triangle
column by column -- (0,1), (0,2), (1,2), (0,3), ... -- packed big-endian
into 6-bit groups, each offset by 63.
"""

from __future__ import annotations

from .graphs import Graph, build_graph


def _encode_order(n: int) -> bytes:
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes(
            [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
        )
    if n <= 68719476735:
        return bytes([126, 126] + [(n >> s & 63) + 63 for s in range(30, -1, -6)])
    raise ValueError("order too large for graph6")


def _decode_order(data: bytes) -> tuple[int, int]:
    """Returns (order, header length)."""
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise ValueError("truncated graph6 order")
        vals = [b - 63 for b in data[1:4]]
        return (vals[0] << 12) | (vals[1] << 6) | vals[2], 4
    if len(data) < 8:
        raise ValueError("truncated graph6 order")
    vals = [b - 63 for b in data[2:8]]
    n = 0
    for v in vals:
        n = n << 6 | v
    return n, 8


def encode_graph6(g: Graph) -> str:
    header = _encode_order(g.n)
    bits = []
    masks = g.adj_masks
    for j in range(1, g.n):
        col = masks[j]
        for i in range(j):
            bits.append(col >> i & 1)
    out = bytearray(header)
    for i in range(0, len(bits), 6):
        group = 0
        for k in range(6):
            group <<= 1
            if i + k < len(bits):
                group |= bits[i + k]
        out.append(group + 63)
    return out.decode("ascii")


def decode_graph6(line: str) -> Graph:
    data = line.strip().encode("ascii")
    if any(b < 63 or b > 126 for b in data):
        raise ValueError("graph6 byte out of range 63..126")
    n, off = _decode_order(data)
    nbits = n * (n - 1) // 2
    body = data[off:]
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ValueError(
            f"graph6 body length {len(body)} does not match order {n} (need {need})"
        )
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[idx // 6] - 63
            if byte >> (5 - idx % 6) & 1:
                edges.append((i, j))
            idx += 1
    # padding bits must be zero
    if nbits % 6:
        last = body[-1] - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise ValueError("nonzero padding bits in graph6 body")
    return build_graph(n, edges)
