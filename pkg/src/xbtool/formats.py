"""graph6 and weighted edge-list text formats.

graph6 (n <= 62): one size byte ``chr(63 + n)`` followed by the upper
triangle of the adjacency matrix in column order x(0,1), x(0,2), x(1,2),
x(0,3), ... packed six bits per byte, most significant bit first, each byte
offset by 63, the last byte zero-padded.

Edge-list: first line ``n m``, second line the n weights, then m lines
``u v`` with 0-based endpoints.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import GraphError, VWGraph

MAX_GRAPH6_N = 62


class FormatError(ValueError):
    pass


def parse_graph6(line: str | bytes) -> VWGraph:
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string")
    vals = []
    for ch in s:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise FormatError(f"graph6 byte out of range: {ch!r}")
        vals.append(o - 63)
    n = vals[0]
    if n > MAX_GRAPH6_N:
        raise FormatError("graph6 sizes above 62 are not supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = vals[1:]
    if len(payload) != nbytes:
        raise FormatError(f"graph6 payload has {len(payload)} bytes, expected {nbytes}")
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte, bit = divmod(k, 6)
            if (payload[byte] >> (5 - bit)) & 1:
                pairs.append((i, j))
            k += 1
    return VWGraph.from_edges(n, pairs)


def write_graph6(g: VWGraph) -> str:
    if not g.is_simple():
        raise FormatError("graph6 encodes simple graphs only")
    n = g.n
    if n > MAX_GRAPH6_N:
        raise FormatError("graph6 sizes above 62 are not supported")
    adj = {(e.u, e.v) for e in g.edges}
    bits = [1 if (i, j) in adj else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(63 + v))
    return "".join(out)


def read_graph6_lines(stream: Iterable[str]) -> Iterator[tuple]:
    """Yield ``(line_number, text, graph_or_error)`` for each non-blank line."""
    for lineno, raw in enumerate(stream, 1):
        text = raw.strip()
        if not text:
            continue
        try:
            yield lineno, text, parse_graph6(text)
        except (FormatError, GraphError) as exc:
            yield lineno, text, exc


def write_edgelist(g: VWGraph) -> str:
    lines = [f"{g.n} {g.m}", " ".join(map(str, g.weights))]
    lines += [f"{e.u} {e.v}" for e in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> VWGraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise FormatError("empty edge-list")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        if n == 0:
            weights, body = [], rows[1:]
            if body and not body[0]:
                body = body[1:]
        else:
            weights = [int(x) for x in rows[1]]
            body = rows[2:]
        pairs = [(int(r[0]), int(r[1])) for r in body]
    except (IndexError, ValueError) as exc:
        raise FormatError(f"malformed edge-list: {exc}") from None
    if len(weights) != n:
        raise FormatError(f"expected {n} weights, got {len(weights)}")
    if len(pairs) != m:
        raise FormatError(f"expected {m} edges, got {len(pairs)}")
    return VWGraph(tuple(weights), tuple((i, a, b) for i, (a, b) in enumerate(pairs)))


def read_edgelist(fh: TextIO) -> VWGraph:
    return parse_edgelist(fh.read())
