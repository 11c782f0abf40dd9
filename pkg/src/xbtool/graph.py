"""Vertex-weighted multigraphs and the edge operations used by the invariants.

Vertices are dense ints ``0..n-1``.  Every edge carries a stable integer id;
deletion and contraction keep the ids of the surviving edges, so an edge order
chosen on a graph remains meaningful on its minors.

Contraction of a non-loop edge ``uv`` (``u < v``) keeps vertex ``u`` as the
merged vertex (weight ``w(u) + w(v)``), removes ``v``, and shifts the ids of
the vertices above ``v`` down by one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

from .symfunc import make_partition


class GraphError(ValueError):
    pass


class Edge(NamedTuple):
    id: int
    u: int
    v: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class VWGraph:
    weights: tuple
    edges: tuple = ()

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        edges = []
        for e in self.edges:
            eid, a, b = (int(x) for x in e)
            if a > b:
                a, b = b, a
            edges.append(Edge(eid, a, b))
        object.__setattr__(self, "edges", tuple(edges))
        n = len(w)
        for x in w:
            if x < 1:
                raise GraphError(f"vertex weights must be >= 1, got {x}")
        seen = set()
        for e in self.edges:
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise GraphError(f"edge {e.id} has endpoint outside 0..{n - 1}")
            if e.id in seen:
                raise GraphError(f"duplicate edge id {e.id}")
            seen.add(e.id)

    # -- construction ----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]] = (), weights=None) -> "VWGraph":
        """Build a graph, numbering edges by their sorted endpoint pairs."""
        norm = sorted((min(a, b), max(a, b)) for a, b in pairs)
        if weights is None:
            weights = (1,) * n
        if len(weights) != n:
            raise GraphError(f"expected {n} weights, got {len(weights)}")
        return cls(tuple(weights), tuple(Edge(i, a, b) for i, (a, b) in enumerate(norm)))

    # -- basic queries -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    @cached_property
    def _by_id(self) -> dict:
        return {e.id: e for e in self.edges}

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise GraphError(f"unknown edge id {eid}") from None

    def edge_ids(self) -> list:
        return sorted(self._by_id)

    def find_edge(self, u: int, v: int) -> int:
        """Smallest id of an edge joining u and v."""
        a, b = min(u, v), max(u, v)
        ids = [e.id for e in self.edges if (e.u, e.v) == (a, b)]
        if not ids:
            raise GraphError(f"no edge {u}-{v}")
        return min(ids)

    def multiplicity(self, u: int, v: int) -> int:
        a, b = min(u, v), max(u, v)
        return sum(1 for e in self.edges if (e.u, e.v) == (a, b))

    def has_edge(self, u: int, v: int) -> bool:
        return self.multiplicity(u, v) > 0

    def is_simple(self) -> bool:
        pairs = [(e.u, e.v) for e in self.edges]
        return all(a != b for a, b in pairs) and len(set(pairs)) == len(pairs)

    def is_unweighted(self) -> bool:
        return all(w == 1 for w in self.weights)

    @cached_property
    def adjacency(self) -> tuple:
        """Neighbour sets (loops and multiplicities ignored)."""
        adj = [set() for _ in range(self.n)]
        for e in self.edges:
            if e.u != e.v:
                adj[e.u].add(e.v)
                adj[e.v].add(e.u)
        return tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        """Degree counting multi-edges, a loop counting twice."""
        return sum((e.u == v) + (e.v == v) for e in self.edges)

    def simple_pairs(self) -> list:
        return sorted({(e.u, e.v) for e in self.edges if e.u != e.v})

    def has_triangle(self) -> bool:
        adj = self.adjacency
        for a, b in self.simple_pairs():
            if adj[a] & adj[b]:
                return True
        return False

    def __repr__(self):
        es = ", ".join(f"{e.u}-{e.v}" for e in self.edges)
        return f"VWGraph(n={self.n}, w={list(self.weights)}, edges=[{es}])"


# --------------------------------------------------------------------------
# union-find

class UnionFind:
    """Disjoint sets with union by size and an undo log (no path compression)."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n
        self._log: list = []

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            self._log.append(None)
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        self._log.append(rb)
        return True

    def undo(self) -> None:
        rb = self._log.pop()
        if rb is None:
            return
        ra = self.parent[rb]
        self.parent[rb] = rb
        self.size[ra] -= self.size[rb]
        self.count += 1

    def groups(self) -> dict:
        out: dict = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return out


def _uf_for(g: VWGraph, s: Iterable[int]) -> UnionFind:
    uf = UnionFind(g.n)
    for eid in s:
        e = g.edge(eid)
        uf.union(e.u, e.v)
    return uf


def components(g: VWGraph, s: Iterable[int] | None = None) -> list:
    """Vertex lists of the components of (V(g), s); s defaults to all edges."""
    uf = _uf_for(g, g.edge_ids() if s is None else s)
    return sorted(uf.groups().values())


def num_components(g: VWGraph, s: Iterable[int] | None = None) -> int:
    return _uf_for(g, g.edge_ids() if s is None else s).count


def is_connected(g: VWGraph) -> bool:
    return num_components(g) <= 1


def component_partition(g: VWGraph, s: Iterable[int] = ()) -> tuple:
    """Total weights of the components of (V(g), s) as a partition."""
    uf = _uf_for(g, s)
    tot: dict = {}
    for v in range(g.n):
        r = uf.find(v)
        tot[r] = tot.get(r, 0) + g.weights[v]
    return make_partition(tot.values())


def is_acyclic(g: VWGraph, s: Iterable[int]) -> bool:
    uf = UnionFind(g.n)
    for eid in s:
        e = g.edge(eid)
        if not uf.union(e.u, e.v):
            return False
    return True


# --------------------------------------------------------------------------
# edge operations

def delete_edge(g: VWGraph, eid: int) -> VWGraph:
    g.edge(eid)
    return VWGraph(g.weights, tuple(e for e in g.edges if e.id != eid))


def delete_edges(g: VWGraph, eids: Iterable[int]) -> VWGraph:
    drop = set(eids)
    for eid in drop:
        g.edge(eid)
    return VWGraph(g.weights, tuple(e for e in g.edges if e.id not in drop))


def _merge(g: VWGraph, keep: int, gone: int, skip_id=None) -> VWGraph:
    def rel(x):
        if x == gone:
            x = keep
        return x - 1 if x > gone else x

    weights = list(g.weights)
    weights[keep] += weights[gone]
    del weights[gone]
    edges = tuple(Edge(e.id, rel(e.u), rel(e.v)) for e in g.edges if e.id != skip_id)
    return VWGraph(tuple(weights), edges)


def contract_edge(g: VWGraph, eid: int) -> VWGraph:
    """Contract edge ``eid``; a loop is simply deleted, weights unchanged."""
    e = g.edge(eid)
    if e.is_loop:
        return delete_edge(g, eid)
    return _merge(g, e.u, e.v, skip_id=eid)


def contract_edges(g: VWGraph, eids: Iterable[int]) -> VWGraph:
    for eid in eids:
        g = contract_edge(g, eid)
    return g


def _simplify(g: VWGraph) -> VWGraph:
    best: dict = {}
    for e in g.edges:
        if e.is_loop:
            continue
        key = (e.u, e.v)
        if key not in best or e.id < best[key].id:
            best[key] = e
    return VWGraph(g.weights, tuple(sorted(best.values())))


def simple_contract(g: VWGraph, eid: int) -> VWGraph:
    """Contract, then drop loops and keep one (smallest-id) edge per pair."""
    if not g.is_simple():
        raise GraphError("simple contraction requires a simple graph")
    return _simplify(contract_edge(g, eid))


def merge_vertices(g: VWGraph, u: int, v: int) -> VWGraph:
    """Identify u and v as a contraction of the non-edge uv would."""
    if u == v:
        raise GraphError("cannot merge a vertex with itself")
    return _merge(g, min(u, v), max(u, v))


def add_edge(g: VWGraph, u: int, v: int) -> VWGraph:
    """G ∪ uv, the new edge taking the next free id."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex out of range: {u}, {v}")
    nid = max((e.id for e in g.edges), default=-1) + 1
    return VWGraph(g.weights, g.edges + (Edge(nid, u, v),))


def remove_vertex(g: VWGraph, v: int) -> VWGraph:
    def rel(x):
        return x - 1 if x > v else x

    weights = g.weights[:v] + g.weights[v + 1:]
    edges = tuple(Edge(e.id, rel(e.u), rel(e.v)) for e in g.edges if v not in (e.u, e.v))
    return VWGraph(weights, edges)


def relabel(g: VWGraph, perm: Sequence[int]) -> VWGraph:
    """Move vertex i to position perm[i]; edge ids are kept."""
    weights = [0] * g.n
    for i, p in enumerate(perm):
        weights[p] = g.weights[i]
    return VWGraph(tuple(weights), tuple(Edge(e.id, perm[e.u], perm[e.v]) for e in g.edges))


def disjoint_union(g: VWGraph, h: VWGraph) -> VWGraph:
    off = max((e.id for e in g.edges), default=-1) + 1
    base = min((e.id for e in h.edges), default=0)
    edges = g.edges + tuple(Edge(e.id - base + off, e.u + g.n, e.v + g.n) for e in h.edges)
    return VWGraph(g.weights + h.weights, edges)


def with_weights(g: VWGraph, weights) -> VWGraph:
    return VWGraph(tuple(weights), g.edges)


def edge_subgraph(g: VWGraph, eids: Iterable[int]) -> VWGraph:
    keep = set(eids)
    return VWGraph(g.weights, tuple(e for e in g.edges if e.id in keep))


def split_graph(g: VWGraph) -> VWGraph:
    """Clique on V(g) plus one degree-two "hat" vertex per edge of g."""
    if not g.is_unweighted():
        raise GraphError("split graph is defined for unweighted graphs only")
    n = g.n
    pairs = list(combinations(range(n), 2))
    for j, e in enumerate(sorted(g.edges)):
        for end in {e.u, e.v}:
            pairs.append((end, n + j))
    return VWGraph.from_edges(n + g.m, pairs)


# --------------------------------------------------------------------------
# spanning forests, activities and the subset-to-tree map

def edge_rank(g: VWGraph, order: Sequence[int] | None = None) -> dict:
    """Map edge id -> position in ``order`` (ascending ids by default)."""
    ids = g.edge_ids()
    if order is None:
        return {eid: i for i, eid in enumerate(ids)}
    order = list(order)
    if sorted(order) != ids:
        raise GraphError("edge order must be a permutation of the edge ids")
    return {eid: i for i, eid in enumerate(order)}


def spanning_forests(g: VWGraph) -> Iterator[frozenset]:
    """Every acyclic edge subset (the empty set included)."""
    edges = [g.edge(i) for i in g.edge_ids()]
    uf = UnionFind(g.n)
    chosen: list = []

    def rec(i):
        if i == len(edges):
            yield frozenset(chosen)
            return
        yield from rec(i + 1)
        e = edges[i]
        if uf.union(e.u, e.v):
            chosen.append(e.id)
            yield from rec(i + 1)
            chosen.pop()
        uf.undo()

    yield from rec(0)


def spanning_trees(g: VWGraph) -> Iterator[frozenset]:
    size = g.n - num_components(g)
    for f in spanning_forests(g):
        if len(f) == size:
            yield f


@dataclass(frozen=True)
class ActivityRecord:
    tree: frozenset
    II: frozenset
    IA: frozenset
    EI: frozenset
    EA: frozenset = field(default_factory=frozenset)

    @property
    def ii(self) -> int:
        return len(self.II)

    @property
    def ia(self) -> int:
        return len(self.IA)

    @property
    def ei(self) -> int:
        return len(self.EI)

    @property
    def ea(self) -> int:
        return len(self.EA)


def _forest_path(g: VWGraph, tree: Iterable[int], a: int, b: int):
    """Edge ids on the tree path between a and b, or None."""
    adj: dict = {}
    for eid in tree:
        e = g.edge(eid)
        adj.setdefault(e.u, []).append((e.v, eid))
        adj.setdefault(e.v, []).append((e.u, eid))
    prev = {a: None}
    stack = [a]
    while stack:
        x = stack.pop()
        if x == b:
            break
        for y, eid in adj.get(x, ()):
            if y not in prev:
                prev[y] = (x, eid)
                stack.append(y)
    if b not in prev:
        return None
    path = []
    while prev[b] is not None:
        b, eid = prev[b]
        path.append(eid)
    return path


def activities(g: VWGraph, tree: Iterable[int], order: Sequence[int] | None = None) -> ActivityRecord:
    """Classify every edge of g relative to a spanning tree or forest.

    A tree edge f is internally active when it is the smallest edge that can
    replace it (the edges crossing the cut that removing f opens, f included).
    A non-tree edge f is externally active when it closes a cycle with the
    forest and is the smallest edge of that cycle; when it closes no cycle it
    is externally inactive.
    """
    rank = edge_rank(g, order)
    tree = frozenset(tree)
    for eid in tree:
        g.edge(eid)
    if not is_acyclic(g, tree):
        raise GraphError("edge set is not acyclic")

    II, IA, EI, EA = set(), set(), set(), set()
    for f in tree:
        fe = g.edge(f)
        uf = _uf_for(g, tree - {f})
        ends = {uf.find(fe.u), uf.find(fe.v)}
        cut = [e.id for e in g.edges
               if not e.is_loop and {uf.find(e.u), uf.find(e.v)} == ends]
        (IA if min(cut, key=rank.__getitem__) == f else II).add(f)
    for e in g.edges:
        if e.id in tree:
            continue
        if e.is_loop:
            EA.add(e.id)
            continue
        path = _forest_path(g, tree, e.u, e.v)
        if path is None:
            EI.add(e.id)
        elif min(path + [e.id], key=rank.__getitem__) == e.id:
            EA.add(e.id)
        else:
            EI.add(e.id)
    return ActivityRecord(tree, frozenset(II), frozenset(IA), frozenset(EI), frozenset(EA))


def _in_cycle(g: VWGraph, current: set, eid: int) -> bool:
    e = g.edge(eid)
    if e.is_loop:
        return True
    uf = _uf_for(g, current - {eid})
    return uf.find(e.u) == uf.find(e.v)


def subset_to_tree(g: VWGraph, s: Iterable[int], order: Sequence[int] | None = None) -> frozenset:
    """Map an edge subset to a spanning tree.

    Walk the edges of ``s`` in order, dropping each one that currently lies on
    a cycle; then walk the remaining edges of g in order, adding each one that
    closes no cycle.
    """
    if not is_connected(g):
        raise GraphError("subset_to_tree requires a connected graph")
    rank = edge_rank(g, order)
    s = set(s)
    for eid in s:
        g.edge(eid)
    current = set(s)
    for eid in sorted(s, key=rank.__getitem__):
        if _in_cycle(g, current, eid):
            current.discard(eid)
    uf = _uf_for(g, current)
    for eid in sorted(set(rank) - s, key=rank.__getitem__):
        e = g.edge(eid)
        if uf.union(e.u, e.v):
            current.add(eid)
    return frozenset(current)


def tree_fiber(record: ActivityRecord, s: Iterable[int]) -> bool:
    """Whether ``s`` maps to ``record.tree``: contains II and avoids EI."""
    s = set(s)
    return record.II <= s and not (record.EI & s)
