"""graph6 encoding and decoding.

Upper-triangle adjacency bits are taken column by column,
(0,1), (0,2), (1,2), (0,3), ..., packed big-endian into 6-bit groups with
zero padding, each group offset by 63.  Sizes up to 62 use a single header
byte; sizes up to 258047 use ``~`` followed by three bytes.
"""

from __future__ import annotations

from .graph import Graph

HEADER = ">>graph6<<"
MAX_N = 258047


class Graph6Error(ValueError):
    pass


def _encode_size(n: int) -> str:
    if n < 0 or n > MAX_N:
        raise Graph6Error(f"graph6 size out of range: {n}")
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))


def graph6_encode(g: Graph) -> str:
    edges = set(g.edges)
    bits = [
        1 if (i, j) in edges else 0 for j in range(1, g.n) for i in range(j)
    ]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        body.append(chr(63 + v))
    return _encode_size(g.n) + "".join(body)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = []
    for ch in s:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {ch!r} out of graph6 range")
        vals.append(c - 63)

    if vals[0] != 63:
        n, pos = vals[0], 1
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated long size header")
        if vals[1] == 63:
            raise Graph6Error("8-byte size headers (n > 258047) are not supported")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        if n <= 62:
            raise Graph6Error("long size header used for n <= 62")
        pos = 4

    nbits = n * (n - 1) // 2
    body = vals[pos:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(edges))


def read_graph6_lines(lines):
    """Yield graphs from graph6 lines, skipping blanks and '#' comments."""
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield line, graph6_decode(line)
