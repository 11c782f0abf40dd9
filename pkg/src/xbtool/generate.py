"""Generate every simple graph on n vertices up to isomorphism.

Graphs on n vertices are obtained from those on n-1 by adding a vertex joined
to each possible subset of the old vertices, keeping one representative per
canonical form.  The representatives are the canonically relabelled graphs,
written in graph6 and sorted by (edge count, graph6) so output is stable.

Known counts for n = 1..8: 1, 2, 4, 11, 34, 156, 1044, 12346.
"""

from __future__ import annotations

from typing import Iterator

from .canon import canonical_key_raw
from .formats import write_graph6
from .graph import VWGraph

KNOWN_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}


def _graph_from_code(n: int, code: tuple) -> VWGraph:
    cells = code[n:]
    pairs = []
    k = 0
    for i in range(n):
        for j in range(i, n):
            if cells[k] and i != j:
                pairs.append((i, j))
            k += 1
    return VWGraph.from_edges(n, pairs)


def _extend(n: int, M: list) -> Iterator[tuple]:
    ones = [1] * (n + 1)
    for mask in range(1 << n):
        big = [row + [(mask >> i) & 1] for i, row in enumerate(M)]
        big.append([(mask >> i) & 1 for i in range(n)] + [0])
        yield canonical_key_raw(ones, big)


def graphs_of_order(n: int, previous: list | None = None) -> list:
    """All graphs on n vertices as canonical VWGraphs, sorted by (m, graph6)."""
    if n == 0:
        return [VWGraph(())]
    if previous is None:
        previous = graphs_of_order(n - 1)
    seen = set()
    for g in previous:
        M = [[0] * g.n for _ in range(g.n)]
        for e in g.edges:
            M[e.u][e.v] = M[e.v][e.u] = 1
        seen.update(_extend(g.n, M))
    out = [_graph_from_code(n, code) for code in seen]
    out.sort(key=lambda g: (g.m, write_graph6(g)))
    return out


def all_graphs(max_n: int, min_n: int = 1) -> Iterator[VWGraph]:
    prev = None
    for n in range(0, max_n + 1):
        prev = graphs_of_order(n, prev)
        if n >= min_n:
            yield from prev
