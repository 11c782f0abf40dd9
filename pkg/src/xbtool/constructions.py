"""Pairs of graphs with equal chromatic (or Tutte) symmetric function.

Every generator checks its hypotheses eagerly and raises ``HypothesisError``
naming the failed condition.  Every emitted pair is then recomputed, and a
pair with unequal X aborts with ``SoundnessError``: the constructions
guarantee equality, so that would mean a bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .canon import canonical_form, find_automorphism
from .graph import (
    GraphError,
    VWGraph,
    add_edge,
    delete_edge,
    disjoint_union,
    is_connected,
    remove_vertex,
    split_graph,
)
from .invariants import stable_partition_counts, x_csf, xb

METHODS = ("split", "path_swap", "neighborhood", "double_graph", "fixture")


class HypothesisError(ValueError):
    pass


class SoundnessError(RuntimeError):
    pass


@dataclass(frozen=True)
class PairCandidate:
    g1: VWGraph
    g2: VWGraph
    method: str
    witnesses: dict = field(default_factory=dict)

    def isomorphic(self) -> bool:
        return canonical_form(self.g1, 64) == canonical_form(self.g2, 64)


# above this many vertices X is compared in the augmented monomial basis,
# which is much cheaper for the dense graphs the constructions produce
GATE_P_BASIS_VERTICES = 12


def equal_x(g1: VWGraph, g2: VWGraph) -> bool:
    if max(g1.n, g2.n) <= GATE_P_BASIS_VERTICES:
        return x_csf(g1) == x_csf(g2)
    return stable_partition_counts(g1) == stable_partition_counts(g2)


def _gate(pair: PairCandidate, check_xb: bool = False) -> PairCandidate:
    if pair.g1.total_weight != pair.g2.total_weight:
        raise SoundnessError(f"{pair.method}: total weights differ")
    if not equal_x(pair.g1, pair.g2):
        raise SoundnessError(f"{pair.method}: emitted pair has unequal X {pair.witnesses}")
    if check_xb and xb(pair.g1) != xb(pair.g2):
        raise SoundnessError(f"{pair.method}: emitted pair has unequal XB {pair.witnesses}")
    return pair


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise HypothesisError(msg)


def _check_vertices(g: VWGraph, *vs: int) -> None:
    for v in vs:
        _require(0 <= v < g.n, f"vertex {v} not in graph on {g.n} vertices")


# --------------------------------------------------------------------------
# split graphs

def split_pair(g: VWGraph, u: int, u2: int, v: int, v2: int, *, method: str = "split") -> PairCandidate:
    """sp(G + uv) and sp(G + u'v') given automorphisms u -> u' and v -> v'."""
    _require(g.is_simple(), "G must be simple")
    _require(g.is_unweighted(), "G must be unweighted")
    _check_vertices(g, u, u2, v, v2)
    _require(u != v and u2 != v2, "uv and u'v' must join distinct vertices")
    _require(not g.has_edge(u, v), f"uv = {u}{v} is already an edge")
    _require(not g.has_edge(u2, v2), f"u'v' = {u2}{v2} is already an edge")
    fu = find_automorphism(g, {u: u2}, max_vertices=64)
    _require(fu is not None, f"no automorphism maps u={u} to u'={u2}")
    fv = find_automorphism(g, {v: v2}, max_vertices=64)
    _require(fv is not None, f"no automorphism maps v={v} to v'={v2}")
    pair = PairCandidate(
        split_graph(add_edge(g, u, v)),
        split_graph(add_edge(g, u2, v2)),
        method,
        {"u": u, "u'": u2, "v": v, "v'": v2, "aut_u": fu, "aut_v": fv},
    )
    return _gate(pair)


def double_graph_pair(g: VWGraph, a: int, b: int) -> PairCandidate:
    """Split pair on 2G = G + G*: one graph connected, the other not."""
    _require(is_connected(g), "G must be connected")
    _check_vertices(g, a, b)
    _require(a != b and not g.has_edge(a, b), "ab must be a non-edge of G")
    two = disjoint_union(g, g)
    pair = split_pair(two, a, a, b, b + g.n, method="double_graph")
    pair.witnesses.update({"a": a, "b": b})
    return pair


# --------------------------------------------------------------------------
# path swap: chord v1v3 against chord v2v4

def path_swap_pair(g: VWGraph, v1: int, v2: int, v3: int, v4: int) -> PairCandidate:
    """G + v1v3 and G + v2v4 for a path v1 v2 v3 v4 with the swap symmetry."""
    _require(g.is_simple(), "G must be simple")
    _check_vertices(g, v1, v2, v3, v4)
    _require(len({v1, v2, v3, v4}) == 4, "v1..v4 must be distinct")
    for a, b in ((v1, v2), (v2, v3), (v3, v4)):
        _require(g.has_edge(a, b), f"{a}{b} must be an edge")
    for a, b in ((v1, v3), (v1, v4), (v2, v4)):
        _require(not g.has_edge(a, b), f"{a}{b} must not be an edge")
    h = delete_edge(g, g.find_edge(v2, v3))
    f = find_automorphism(h, {v1: {v2, v4}, v3: {v2, v4}, v2: {v1, v3}, v4: {v1, v3}}, max_vertices=64)
    _require(f is not None, "no w-automorphism of G - v2v3 exchanges {v1,v3} and {v2,v4}")
    pair = PairCandidate(add_edge(g, v1, v3), add_edge(g, v2, v4), "path_swap",
                         {"v1": v1, "v2": v2, "v3": v3, "v4": v4, "aut": f})
    return _gate(pair)


# --------------------------------------------------------------------------
# neighbourhood construction

def neighborhood_pair(g: VWGraph, v1: int, v2: int, v3: int) -> PairCandidate:
    """G + v1v3 and G + v2v3 when N(v3) lies in N(v1) and N(v2)."""
    _require(g.is_simple(), "G must be simple")
    _check_vertices(g, v1, v2, v3)
    _require(len({v1, v2, v3}) == 3, "v1, v2, v3 must be distinct")
    _require(g.has_edge(v1, v2), "v1v2 must be an edge")
    _require(not g.has_edge(v1, v3), "v1v3 must not be an edge")
    _require(not g.has_edge(v2, v3), "v2v3 must not be an edge")
    n3 = g.neighbors(v3)
    _require(n3 <= (g.neighbors(v1) & g.neighbors(v2)), "N(v3) must lie in N(v1) ∩ N(v2)")
    h = remove_vertex(g, v3)
    a, b = (x - (x > v3) for x in (v1, v2))
    f = find_automorphism(h, {a: b, b: a}, max_vertices=64)
    _require(f is not None, "no w-automorphism of G - v3 swaps v1 and v2")
    pair = PairCandidate(add_edge(g, v1, v3), add_edge(g, v2, v3), "neighborhood",
                         {"v1": v1, "v2": v2, "v3": v3, "aut": f, "degenerate": not n3})
    return _gate(pair)


# --------------------------------------------------------------------------
# seed scanners

def automorphism_orbits(g: VWGraph) -> list:
    """Orbit id per vertex (smallest vertex of its orbit)."""
    orbit = list(range(g.n))
    for a in range(g.n):
        if orbit[a] != a:
            continue
        for b in range(a + 1, g.n):
            if orbit[b] == b and find_automorphism(g, {a: b}, max_vertices=64) is not None:
                orbit[b] = a
    return orbit


def split_seeds(g: VWGraph):
    """Tuples (u, u', v, v') meeting the split-pair hypotheses."""
    if not (g.is_simple() and g.is_unweighted()):
        return
    orb = automorphism_orbits(g)
    verts = range(g.n)
    for u in verts:
        for v in verts:
            if u == v or g.has_edge(u, v):
                continue
            for u2 in verts:
                if orb[u2] != orb[u]:
                    continue
                for v2 in verts:
                    if orb[v2] == orb[v] and u2 != v2 and not g.has_edge(u2, v2):
                        yield (u, u2, v, v2)


def path_swap_seeds(g: VWGraph):
    if not g.is_simple():
        return
    for v1, v2, v3, v4 in permutations(range(g.n), 4):
        if not (g.has_edge(v1, v2) and g.has_edge(v2, v3) and g.has_edge(v3, v4)):
            continue
        if g.has_edge(v1, v3) or g.has_edge(v1, v4) or g.has_edge(v2, v4):
            continue
        h = delete_edge(g, g.find_edge(v2, v3))
        cons = {v1: {v2, v4}, v3: {v2, v4}, v2: {v1, v3}, v4: {v1, v3}}
        if find_automorphism(h, cons, max_vertices=64) is not None:
            yield (v1, v2, v3, v4)


def neighborhood_seeds(g: VWGraph):
    if not g.is_simple():
        return
    for v1, v2, v3 in permutations(range(g.n), 3):
        if not g.has_edge(v1, v2) or g.has_edge(v1, v3) or g.has_edge(v2, v3):
            continue
        if not g.neighbors(v3) <= (g.neighbors(v1) & g.neighbors(v2)):
            continue
        h = remove_vertex(g, v3)
        a, b = (x - (x > v3) for x in (v1, v2))
        if find_automorphism(h, {a: b, b: a}, max_vertices=64) is not None:
            yield (v1, v2, v3)


# --------------------------------------------------------------------------
# explicit graphs

def _labelled(pairs, n=8, weights=None) -> VWGraph:
    return VWGraph.from_edges(n, [(a - 1, b - 1) for a, b in pairs], weights)


SPLIT_SEED_EDGES = [(1, 2), (1, 3), (2, 4), (3, 4), (3, 5), (4, 6), (5, 6)]
XB_PAIR_A1 = [(1, 2), (2, 3), (3, 4), (4, 5), (4, 8), (5, 8), (6, 2), (6, 3), (7, 1), (7, 3), (7, 4),
           (7, 5), (7, 6)]
XB_PAIR_A2 = [(1, 2), (2, 3), (3, 4), (4, 5), (4, 8), (5, 8), (6, 1), (6, 2), (6, 3), (6, 4), (7, 3),
           (7, 5), (7, 6)]
XB_PAIR_B1 = [(1, 2), (2, 3), (3, 4), (4, 5), (8, 2), (8, 3), (8, 1), (8, 5), (6, 2), (6, 3), (6, 1),
           (6, 4), (7, 6), (7, 3)]
XB_PAIR_B2 = [(1, 2), (2, 3), (3, 4), (4, 5), (8, 2), (8, 3), (8, 1), (8, 5), (6, 2), (6, 3), (6, 4),
           (7, 6), (7, 3), (7, 8)]


def _weighted_tree(path_weights, leaf_spots) -> VWGraph:
    # path 1-2-3-4-5 with a weight-1 leaf hung on each listed path vertex
    pairs = [(i, i + 1) for i in range(1, 5)]
    pairs += [(spot, 6 + k) for k, spot in enumerate(leaf_spots)]
    return _labelled(pairs, 8, tuple(path_weights) + (1, 1, 1))


def split_seed_graph() -> VWGraph:
    return _labelled(SPLIT_SEED_EDGES, 6)


def xb_pair_a() -> tuple:
    return _labelled(XB_PAIR_A1), _labelled(XB_PAIR_A2)


def xb_pair_b() -> tuple:
    return _labelled(XB_PAIR_B1), _labelled(XB_PAIR_B2)


def weighted_tree_pair() -> tuple:
    return (_weighted_tree((1, 2, 1, 3, 2), (1, 3, 4)),
            _weighted_tree((1, 3, 2, 1, 2), (1, 2, 4)))


FIXTURE_NAMES = ("split-example", "equal-xb-a", "equal-xb-b", "weighted-trees")


def fixture(name: str) -> PairCandidate:
    if name == "split-example":
        # u = u' = vertex 1, v = vertex 5, v' = vertex 6 (labels 1-based)
        pair = split_pair(split_seed_graph(), 0, 0, 4, 5)
        return PairCandidate(pair.g1, pair.g2, "fixture", {"name": name, **pair.witnesses})
    if name == "equal-xb-a":
        g1, g2 = xb_pair_a()
        return _gate(PairCandidate(g1, g2, "fixture", {"name": name}), check_xb=True)
    if name == "equal-xb-b":
        g1, g2 = xb_pair_b()
        return _gate(PairCandidate(g1, g2, "fixture", {"name": name}), check_xb=True)
    if name == "weighted-trees":
        g1, g2 = weighted_tree_pair()
        return _gate(PairCandidate(g1, g2, "fixture", {"name": name}))
    raise KeyError(f"unknown fixture {name!r}; choose from {FIXTURE_NAMES}")


def fixtures() -> list:
    return [fixture(name) for name in FIXTURE_NAMES]


def construct(method: str, g: VWGraph, vertices) -> PairCandidate:
    """Dispatch by method tag; ``vertices`` are the construction's witnesses."""
    vertices = list(vertices)
    arity = {"split": 4, "path_swap": 4, "neighborhood": 3, "double_graph": 2}
    if method not in arity:
        raise ValueError(f"unknown method {method!r}")
    if len(vertices) != arity[method]:
        raise HypothesisError(f"{method} needs {arity[method]} vertices, got {len(vertices)}")
    fn = {"split": split_pair, "path_swap": path_swap_pair,
          "neighborhood": neighborhood_pair, "double_graph": double_graph_pair}[method]
    try:
        return fn(g, *vertices)
    except GraphError as exc:
        raise HypothesisError(str(exc)) from None
