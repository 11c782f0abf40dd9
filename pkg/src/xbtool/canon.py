"""Canonical forms and constrained automorphism search for small graphs.

Both work on the multiplicity matrix plus the weight vector, so two graphs
get equal keys exactly when they are w-isomorphic (weights, loops and edge
multiplicities respected).

The canonical key is the minimum serialization over all vertex orders that
respect an isomorphism-invariant ordered partition of the vertices.  The
partition starts from (weight, loop count) classes and is refined by
neighbour-colour counts; where refinement stalls, each vertex of the
smallest open cell is individualized in turn.  Interchangeable twin vertices
and orbits of automorphisms found along the way are explored only once.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .graph import GraphError, VWGraph

DEFAULT_MAX_VERTICES = 12


def multiplicity_matrix(g: VWGraph) -> list:
    M = [[0] * g.n for _ in range(g.n)]
    for e in g.edges:
        M[e.u][e.v] += 1
        if e.u != e.v:
            M[e.v][e.u] += 1
    return M


def _rank(keys: list) -> list:
    idx = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [idx[k] for k in keys]


def _refine(nbrs: list, colors: list) -> list:
    ncol = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[u], m) for u, m in nbrs[v])))
            for v in range(len(colors))
        ]
        new = _rank(sigs)
        k = len(set(new))
        if k == ncol:
            return new
        colors, ncol = new, k


def _prepare(weights, M):
    n = len(weights)
    nbrs = [[(u, M[v][u]) for u in range(n) if u != v and M[v][u]] for v in range(n)]
    colors = _rank([(weights[v], M[v][v]) for v in range(n)])
    return nbrs, colors


def _twin_classes(weights, M) -> list:
    """Twin class id per vertex: swapping two twins is an automorphism."""
    n = len(weights)
    cls = list(range(n))
    for a in range(n):
        if cls[a] != a:
            continue
        for b in range(a + 1, n):
            if cls[b] != b or weights[a] != weights[b] or M[a][a] != M[b][b]:
                continue
            if all(M[a][x] == M[b][x] for x in range(n) if x != a and x != b):
                cls[b] = a
    return cls


class _Orbits:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def add_perm(self, perm):
        for x, y in enumerate(perm):
            a, b = self.find(x), self.find(y)
            if a != b:
                self.p[a] = b


def canonical_key_raw(weights, M) -> tuple:
    """Minimum serialization tuple for a weight vector and symmetric matrix."""
    n = len(weights)
    if n == 0:
        return ()
    nbrs, colors = _prepare(weights, M)
    twins = _twin_classes(weights, M)
    best = [None]
    leaves: dict = {}
    orbits = _Orbits(n)

    def encode(order):
        w = tuple(weights[v] for v in order)
        cells = []
        for i, a in enumerate(order):
            row = M[a]
            for b in order[i:]:
                cells.append(row[b])
        return w + tuple(cells)

    def search(colors, depth):
        colors = _refine(nbrs, colors)
        cells: dict = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            order = sorted(range(n), key=colors.__getitem__)
            code = encode(order)
            prev = leaves.get(code)
            if prev is not None:
                # two leaves with equal code differ by an automorphism
                perm = [0] * n
                for i, v in enumerate(order):
                    perm[prev[i]] = v
                orbits.add_perm(perm)
            else:
                leaves[code] = order
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        tc, cell = min(((c, vs) for c, vs in cells.items() if len(vs) > 1),
                       key=lambda item: (len(item[1]), item[0]))
        seen_twins = set()
        explored = []
        for v in cell:
            if twins[v] in seen_twins:
                continue
            if depth == 0 and any(orbits.find(v) == orbits.find(x) for x in explored):
                continue
            seen_twins.add(twins[v])
            explored.append(v)
            child = [2 * c + (1 if c == tc and u != v else 0) for u, c in enumerate(colors)]
            search(_rank(child), depth + 1)

    search(colors, 0)
    return best[0]


def canonical_form(g: VWGraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> bytes:
    """Byte key equal for two graphs iff they are w-isomorphic."""
    if g.n > max_vertices:
        raise GraphError(f"canonical_form limited to {max_vertices} vertices, got {g.n}")
    code = canonical_key_raw(g.weights, multiplicity_matrix(g))
    n = g.n
    w, cells = code[:n], code[n:]
    return f"{n}|{','.join(map(str, w))}|{','.join(map(str, cells))}".encode("ascii")


def canonical_order(g: VWGraph) -> list:
    """A vertex order realizing the canonical key (``order[i]`` = old vertex)."""
    weights, M = g.weights, multiplicity_matrix(g)
    target = canonical_key_raw(weights, M)
    n = g.n
    nbrs, colors = _prepare(weights, M)

    def search(colors):
        colors = _refine(nbrs, colors)
        cells: dict = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            order = sorted(range(n), key=colors.__getitem__)
            w = tuple(weights[v] for v in order)
            rows = tuple(M[a][b] for i, a in enumerate(order) for b in order[i:])
            return order if w + rows == target else None
        tc, cell = min(((c, vs) for c, vs in cells.items() if len(vs) > 1),
                       key=lambda item: (len(item[1]), item[0]))
        for v in cell:
            child = [2 * c + (1 if c == tc and u != v else 0) for u, c in enumerate(colors)]
            found = search(_rank(child))
            if found is not None:
                return found
        return None

    return search(colors) if n else []


def isomorphic(g: VWGraph, h: VWGraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.weights) != sorted(h.weights):
        return False
    return canonical_form(g, max_vertices) == canonical_form(h, max_vertices)


def find_automorphism(
    g: VWGraph,
    constraints: Mapping[int, int | Iterable[int]] | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
):
    """A w-automorphism (as a list ``f[v]``) meeting the constraints, or None.

    ``constraints`` maps a vertex to a single target or a set of allowed
    targets.  The search is exhaustive over colour-respecting assignments.
    """
    if g.n > max_vertices:
        raise GraphError(f"automorphism search limited to {max_vertices} vertices, got {g.n}")
    n = g.n
    M = multiplicity_matrix(g)
    nbrs, colors = _prepare(g.weights, M)
    colors = _refine(nbrs, colors)
    allowed = []
    for v in range(n):
        cand = {u for u in range(n) if colors[u] == colors[v]}
        if constraints and v in constraints:
            c = constraints[v]
            c = {c} if isinstance(c, int) else set(c)
            bad = [x for x in c if not 0 <= x < n]
            if bad:
                raise GraphError(f"constraint target out of range: {bad}")
            cand &= c
        if not cand:
            return None
        allowed.append(sorted(cand))
    order = sorted(range(n), key=lambda v: (len(allowed[v]), v))
    f = [-1] * n
    used = [False] * n

    def rec(i):
        if i == n:
            return True
        v = order[i]
        for y in allowed[v]:
            if used[y]:
                continue
            ok = True
            for j in range(i):
                x = order[j]
                if M[v][x] != M[y][f[x]]:
                    ok = False
                    break
            if not ok:
                continue
            f[v] = y
            used[y] = True
            if rec(i + 1):
                return True
            used[y] = False
            f[v] = -1
        return False

    return list(f) if rec(0) else None


def automorphism_exists(g: VWGraph, constraints=None, max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    return find_automorphism(g, constraints, max_vertices) is not None
