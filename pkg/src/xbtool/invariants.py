"""The Tutte symmetric function XB of a vertex-weighted graph and its relatives.

XB is computed by several independent routes that must agree exactly:

* ``xb_subset``           sum over all edge subsets S of t^|S| p_lambda(S)
* ``xb_delcon``           deletion-contraction down to edgeless graphs, memoized
* ``xb_spanning_tree``    sum over spanning trees with activity weights
* ``xb_spanning_forest``  sum over spanning forests with external activity
* ``xb_state_sum``        the subset sum, accumulated over component states
* ``xb_blocks``           sum over partitions of V into connected blocks

``xb`` dispatches to one of them (``blocks`` by default, the fastest).
The chromatic symmetric function X is XB at t = -1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .canon import canonical_key_raw
from .graph import (
    GraphError,
    UnionFind,
    VWGraph,
    activities,
    component_partition,
    contract_edges,
    edge_subgraph,
    is_connected,
    num_components,
    spanning_forests,
    spanning_trees,
)
from .symfunc import (
    BivarPoly,
    PPoly,
    make_partition,
    tp_add,
    tp_compose_linear,
    tp_norm,
    tp_one_plus_t_pow,
    tp_render,
    tp_shift,
    tp_sub,
)

DEFAULT_MAX_EDGES = 28
DEFAULT_CACHE_ENTRIES = 10 ** 6
COLORING_LIMIT = 10 ** 7


# --------------------------------------------------------------------------
# the subset sum, literally

def subset_counts(g: VWGraph, max_edges: int = DEFAULT_MAX_EDGES) -> dict:
    """Count edge subsets by (component-weight partition, subset size).

    Depth-first over include/exclude decisions with an undoable union-find,
    so each step costs one union instead of a connectivity recomputation.
    """
    if g.m > max_edges:
        raise GraphError(f"subset enumeration limited to {max_edges} edges, got {g.m}")
    n = g.n
    ends = [(e.u, e.v) for e in g.edges]
    uf = UnionFind(n)
    weight = list(g.weights)
    counts: dict = {}
    m = len(ends)

    def leaf(size):
        parent = uf.parent
        tot: dict = {}
        for v in range(n):
            r = v
            while parent[r] != r:
                r = parent[r]
            tot[r] = tot.get(r, 0) + weight[v]
        key = (tuple(sorted(tot.values(), reverse=True)), size)
        counts[key] = counts.get(key, 0) + 1

    def rec(i, size):
        if i == m:
            leaf(size)
            return
        rec(i + 1, size)
        a, b = ends[i]
        uf.union(a, b)
        rec(i + 1, size + 1)
        uf.undo()

    rec(0, 0)
    return counts


def xb_subset(g: VWGraph, max_edges: int = DEFAULT_MAX_EDGES) -> PPoly:
    """XB as the sum over all edge subsets S of t^|S| p_lambda(S)."""
    terms: dict = {}
    for (lam, size), c in subset_counts(g, max_edges).items():
        coeff = list(terms.get(lam, ()))
        coeff += [0] * (size + 1 - len(coeff))
        coeff[size] += c
        terms[lam] = tuple(coeff)
    return PPoly(terms)


def xb_state_sum(g: VWGraph) -> PPoly:
    """The subset sum, processed edge by edge over component-partition states.

    Two partial subsets whose components coincide contribute identically from
    then on, so they are merged; the number of live states is bounded by the
    Bell number of n rather than by 2^|E|.
    """
    n = g.n
    states = {tuple(range(n)): (1,)}
    for e in sorted(g.edges):
        new: dict = {}
        for lab, c in states.items():
            new[lab] = tp_add(new.get(lab, ()), c)
            a, b = lab[e.u], lab[e.v]
            if a == b:
                merged = lab
            else:
                lo, hi = min(a, b), max(a, b)
                merged = tuple(lo if x == hi else x for x in lab)
            new[merged] = tp_add(new.get(merged, ()), tp_shift(c, 1))
        states = new
    terms: dict = {}
    for lab, c in states.items():
        tot: dict = {}
        for v, r in enumerate(lab):
            tot[r] = tot.get(r, 0) + g.weights[v]
        lam = make_partition(tot.values())
        terms[lam] = tp_add(terms.get(lam, ()), c)
    return PPoly(terms)


# --------------------------------------------------------------------------
# deletion-contraction

class XBCache:
    """Memo of XB values keyed by canonical form; stops growing at the bound."""

    def __init__(self, max_entries: int = DEFAULT_CACHE_ENTRIES):
        self.max_entries = max_entries
        self.data: dict = {}
        self.hits = 0
        self.misses = 0

    def get(self, key):
        v = self.data.get(key)
        if v is None:
            self.misses += 1
        else:
            self.hits += 1
        return v

    def put(self, key, value) -> None:
        if len(self.data) < self.max_entries:
            self.data[key] = value

    def __len__(self):
        return len(self.data)


def _bundles(g: VWGraph):
    """Weights, non-loop multiplicities {(a, b): m} and the loop count."""
    mult: dict = {}
    loops = 0
    for e in g.edges:
        if e.is_loop:
            loops += 1
        else:
            mult[(e.u, e.v)] = mult.get((e.u, e.v), 0) + 1
    return list(g.weights), mult, loops


def _split_components(n: int, mult: dict) -> list:
    uf = UnionFind(n)
    for a, b in mult:
        uf.union(a, b)
    return list(uf.groups().values())


def _restrict(weights, mult, verts):
    idx = {v: i for i, v in enumerate(verts)}
    w = [weights[v] for v in verts]
    sub = {(idx[a], idx[b]): m for (a, b), m in mult.items() if a in idx}
    return w, sub


def _matrix(n, mult):
    M = [[0] * n for _ in range(n)]
    for (a, b), m in mult.items():
        M[a][b] = M[b][a] = m
    return M


def _contract_pair(weights, mult, a, b):
    """Merge b into a (a < b); the a-b bundle disappears."""
    def rel(x):
        if x == b:
            x = a
        return x - 1 if x > b else x

    w = list(weights)
    w[a] += w[b]
    del w[b]
    out: dict = {}
    for (x, y), m in mult.items():
        if (x, y) == (a, b):
            continue
        x, y = rel(x), rel(y)
        if x > y:
            x, y = y, x
        out[(x, y)] = out.get((x, y), 0) + m
    return w, out


def _pick_bundle(n, mult):
    deg = [0] * n
    for (a, b), m in mult.items():
        deg[a] += m
        deg[b] += m
    return max(mult, key=lambda ab: (deg[ab[0]] + deg[ab[1]], -ab[0], -ab[1]))


def _xb_dc(weights, mult, cache: XBCache) -> PPoly:
    if not mult:
        return PPoly.p(weights)
    n = len(weights)
    comps = _split_components(n, mult)
    if len(comps) > 1:
        out = PPoly.p([])
        for verts in comps:
            w, sub = _restrict(weights, mult, verts)
            out = out * _xb_dc(w, sub, cache)
        return out
    key = canonical_key_raw(weights, _matrix(n, mult))
    hit = cache.get(key)
    if hit is not None:
        return hit
    a, b = _pick_bundle(n, mult)
    m = mult[(a, b)]
    deleted = {k: v for k, v in mult.items() if k != (a, b)}
    cw, cm = _contract_pair(weights, mult, a, b)
    # a bundle of m parallel edges: each nonempty subset of it merges a and b
    res = _xb_dc(weights, deleted, cache) + _xb_dc(cw, cm, cache).scale(
        tp_sub(tp_one_plus_t_pow(m), (1,)))
    cache.put(key, res)
    return res


def xb_delcon(g: VWGraph, cache: XBCache | None = None) -> PPoly:
    """XB by deletion-contraction, down to edgeless graphs.

    Each loop contributes a factor (1+t).  Parallel edges are handled as a
    class: applying XB(G) = XB(G\\e) + t XB(G/e) to every copy of a class of
    m parallel edges gives XB(G - class) + ((1+t)^m - 1) XB(G / class).
    Subresults are memoized on the canonical form of each connected piece.
    """
    if cache is None:
        cache = XBCache()
    weights, mult, loops = _bundles(g)
    return _xb_dc(weights, mult, cache).scale(tp_one_plus_t_pow(loops))


# --------------------------------------------------------------------------
# connected-block expansion (fast path for census-sized graphs)

def _connected_masks(n, adjmask):
    conn = [False] * (1 << n)
    for A in range(1, 1 << n):
        low = A & -A
        seen = low
        frontier = low
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adjmask[v] & A & ~seen
            seen |= new
            frontier |= new
        conn[A] = seen == A
    return conn


def xb_blocks(g: VWGraph) -> PPoly:
    """XB grouped by the partition of V into components of S.

    For each vertex set A, C_A(t) sums t^|S| over edge sets S of the induced
    subgraph on A that connect A; it satisfies
    (1+t)^e(A) = sum over B containing min(A) of C_B (1+t)^e(A - B).
    XB is then the sum over partitions of V into blocks of the products of
    C_block times p of the block weights.  Polynomials in t are packed into
    integers (one slot per degree); all quantities are nonnegative counts of
    edge subsets, so slots of m+1 bits never overflow.
    """
    n = g.n
    if n == 0:
        return PPoly.p([])
    if n > 20:
        raise GraphError("xb_blocks is limited to 20 vertices")
    weights, mult, _ = _bundles(g)
    loops = [0] * n
    for e in g.edges:
        if e.is_loop:
            loops[e.u] += 1
    M = _matrix(n, mult)
    adjmask = [sum(1 << u for u in range(n) if M[v][u]) for v in range(n)]
    bits = g.m + 1
    one_plus_t = [sum(c << (bits * i) for i, c in enumerate(tp_one_plus_t_pow(k)))
                  for k in range(g.m + 1)]

    full = (1 << n) - 1
    ecount = [0] * (1 << n)
    wsum = [0] * (1 << n)
    for A in range(1, 1 << n):
        v = (A & -A).bit_length() - 1
        rest = A & (A - 1)
        ecount[A] = ecount[rest] + loops[v] + sum(M[v][u] for u in range(n) if rest >> u & 1)
        wsum[A] = wsum[rest] + weights[v]
    conn = _connected_masks(n, adjmask)

    C = [0] * (1 << n)
    for A in range(1, 1 << n):
        if not conn[A]:
            continue
        low = A & -A
        rest = A ^ low
        total = one_plus_t[ecount[A]]
        sub = rest
        while sub:
            # B = low | (rest - sub) ranges over proper subsets containing low
            B = low | (rest & ~sub)
            if conn[B]:
                total -= C[B] * one_plus_t[ecount[A ^ B]]
            sub = (sub - 1) & rest
        C[A] = total

    memo = {0: {(): 1}}

    def F(B):
        got = memo.get(B)
        if got is not None:
            return got
        low = B & -B
        rest = B ^ low
        out: dict = {}
        sub = rest
        while True:
            A = low | sub
            cA = C[A]
            if cA:
                part = wsum[A]
                for lam, val in F(B ^ A).items():
                    key = _insert_part(lam, part)
                    out[key] = out.get(key, 0) + cA * val
            if sub == 0:
                break
            sub = (sub - 1) & rest
        memo[B] = out
        return out

    mask = (1 << bits) - 1
    terms = {}
    for lam, packed in F(full).items():
        coeffs = []
        while packed:
            coeffs.append(packed & mask)
            packed >>= bits
        terms[lam] = tp_norm(coeffs)
    return PPoly(terms)


def _insert_part(lam: tuple, part: int) -> tuple:
    i = 0
    while i < len(lam) and lam[i] >= part:
        i += 1
    return lam[:i] + (part,) + lam[i:]


# --------------------------------------------------------------------------
# spanning tree and forest expansions

def xb_spanning_tree(g: VWGraph, order: Sequence[int] | None = None) -> PPoly:
    """Sum over spanning trees T of t^ii(T) (t+1)^ea(T) XB((T, w) / II(T))."""
    if not is_connected(g):
        raise GraphError("spanning-tree expansion requires a connected graph")
    total = PPoly()
    for tree in spanning_trees(g):
        rec = activities(g, tree, order)
        inner = xb_subset(contract_edges(edge_subgraph(g, tree), sorted(rec.II)))
        coeff = tp_shift(tp_one_plus_t_pow(rec.ea), rec.ii)
        total = total + inner.scale(coeff)
    return total


def xb_spanning_forest(g: VWGraph, order: Sequence[int] | None = None) -> PPoly:
    """Sum over spanning forests F of t^|F| (t+1)^ea(F) p_lambda(F)."""
    total: dict = {}
    for forest in spanning_forests(g):
        rec = activities(g, forest, order)
        lam = component_partition(g, forest)
        coeff = tp_shift(tp_one_plus_t_pow(rec.ea), len(forest))
        total[lam] = tp_add(total.get(lam, ()), coeff)
    return PPoly(total)


def x_spanning_tree(g: VWGraph, order: Sequence[int] | None = None) -> PPoly:
    """X as the signed sum over spanning trees with no external activity."""
    if not is_connected(g):
        raise GraphError("spanning-tree expansion requires a connected graph")
    total = PPoly()
    for tree in spanning_trees(g):
        rec = activities(g, tree, order)
        if rec.ea:
            continue
        inner = xb_subset(contract_edges(edge_subgraph(g, tree), sorted(rec.II))).at_t(-1)
        total = total + (inner if rec.ii % 2 == 0 else -inner)
    return total


def tree_contributions(g: VWGraph, order: Sequence[int] | None = None) -> dict:
    """Per spanning tree, its term t^ii (t+1)^ea XB((T, w) / II)."""
    out = {}
    for tree in spanning_trees(g):
        rec = activities(g, tree, order)
        inner = xb_subset(contract_edges(edge_subgraph(g, tree), sorted(rec.II)))
        out[tree] = inner.scale(tp_shift(tp_one_plus_t_pow(rec.ea), rec.ii))
    return out


# --------------------------------------------------------------------------
# dispatch and the chromatic symmetric function

XB_METHODS = ("blocks", "delcon", "subset", "states", "forest", "tree")


def xb(g: VWGraph, method: str = "blocks", order=None, cache: XBCache | None = None) -> PPoly:
    if method == "blocks":
        return xb_blocks(g)
    if method == "delcon":
        return xb_delcon(g, cache)
    if method == "subset":
        return xb_subset(g)
    if method == "states":
        return xb_state_sum(g)
    if method == "forest":
        return xb_spanning_forest(g, order)
    if method == "tree":
        return xb_spanning_tree(g, order)
    raise ValueError(f"unknown XB method {method!r}; choose from {XB_METHODS}")


def x_csf(g: VWGraph, method: str = "blocks", cache: XBCache | None = None) -> PPoly:
    """Chromatic symmetric function: XB with t = -1 (zero when g has a loop)."""
    return xb(g, method, cache=cache).at_t(-1)


# --------------------------------------------------------------------------
# Tutte polynomial (independent deletion-contraction)

def _tutte_rec(n, mult, memo) -> BivarPoly:
    if not mult:
        return BivarPoly.one()
    comps = _split_components(n, mult)
    if len(comps) > 1:
        out = BivarPoly.one()
        for verts in comps:
            if len(verts) > 1:
                w, sub = _restrict([1] * n, mult, verts)
                out = out * _tutte_rec(len(w), sub, memo)
        return out
    key = canonical_key_raw([1] * n, _matrix(n, mult))
    if key in memo:
        return memo[key]
    a, b = _pick_bundle(n, mult)
    m = mult[(a, b)]
    _, cm = _contract_pair([1] * n, mult, a, b)
    # contracting one copy turns the other m-1 copies into loops
    contracted = _tutte_rec(n - 1, cm, memo) * BivarPoly.monomial(0, m - 1)
    rest = dict(mult)
    if m == 1:
        del rest[(a, b)]
    else:
        rest[(a, b)] = m - 1
    if m == 1 and len(_split_components(n, rest)) > 1:
        res = BivarPoly.monomial(1, 0) * contracted
    else:
        res = _tutte_rec(n, rest, memo) + contracted
    memo[key] = res
    return res


def tutte(g: VWGraph) -> BivarPoly:
    """Tutte polynomial T_G(x, y) by deletion-contraction (weights ignored)."""
    _, mult, loops = _bundles(g)
    return _tutte_rec(g.n, mult, {}) * BivarPoly.monomial(0, loops)


def tutte_from_activities(g: VWGraph, order: Sequence[int] | None = None) -> BivarPoly:
    """Sum over spanning trees of x^ia(T) y^ea(T)."""
    total = BivarPoly()
    for tree in spanning_trees(g):
        rec = activities(g, tree, order)
        total = total + BivarPoly.monomial(rec.ia, rec.ea)
    return total


def check_tutte_specialization(g: VWGraph, ncolors: int, t_val, divide_by_n: bool = False):
    """Both sides of the principal specialization of XB to the Tutte polynomial.

    lhs = XB(t; 1 x ncolors, 0, ...), rhs = n^c t^(|V|-c) T((t+n)/t, t+1).
    ``divide_by_n=True`` uses (t+n)/n as the first Tutte argument instead, the form
    that does not agree with the left side.
    """
    if not g.is_unweighted():
        raise GraphError("Tutte specialization needs an unweighted graph")
    t_val = Fraction(t_val)
    if t_val == 0:
        raise ValueError("t = 0 leaves the right-hand side undefined")
    if ncolors < 1:
        raise ValueError("ncolors must be positive")
    lhs = xb(g).evaluate(t_val, [1] * ncolors)
    c = num_components(g)
    first = (t_val + ncolors) / (ncolors if divide_by_n else t_val)
    rhs = Fraction(ncolors) ** c * t_val ** (g.n - c) * tutte(g).evaluate(first, t_val + 1)
    return lhs, rhs


# --------------------------------------------------------------------------
# W-polynomial

@dataclass(frozen=True)
class WPoly:
    """W as a map weight-partition -> polynomial in u = (y - 1)."""

    terms: tuple  # sorted ((partition, TPoly in u), ...)

    @classmethod
    def from_dict(cls, d: dict) -> "WPoly":
        return cls(tuple(sorted(((k, tp_norm(v)) for k, v in d.items() if tp_norm(v)),
                                key=lambda kv: (sum(kv[0]), kv[0]))))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def in_y(self) -> dict:
        """Coefficients expanded as polynomials in y."""
        return {lam: tp_compose_linear(c, -1) for lam, c in self.terms}

    def render(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for lam, c in sorted(self.in_y().items(), key=lambda kv: (sum(kv[0]), kv[0])):
            mono = "x[" + ",".join(map(str, lam)) + "]"
            nz = [(k, a) for k, a in enumerate(c) if a]
            if len(nz) == 1:
                k, a = nz[0]
                neg = a < 0
                body = tp_render(tp_shift((abs(a),), k), "y")
                text = mono if body == "1" else f"{body} {mono}"
            else:
                neg = False
                text = f"({tp_render(c, 'y')}) {mono}"
            if not out:
                out.append(("-" if neg else "") + text)
            else:
                out.append((" - " if neg else " + ") + text)
        return "".join(out)


def w_polynomial(g: VWGraph, max_edges: int = DEFAULT_MAX_EDGES) -> WPoly:
    """Sum over S of x_c1...x_ck (y-1)^(|S| + k - |V|), k = number of components."""
    out: dict = {}
    for (lam, size), cnt in subset_counts(g, max_edges).items():
        j = size + len(lam) - g.n
        if j < 0:
            raise AssertionError("negative (y-1) exponent")
        coeff = list(out.get(lam, ()))
        coeff += [0] * (j + 1 - len(coeff))
        coeff[j] += cnt
        out[lam] = tuple(coeff)
    return WPoly.from_dict(out)


def w_recursive(g: VWGraph) -> dict:
    """W in the y basis straight from its recurrence: edgeless -> product of
    x_w, loop -> y W(G\\e), other edge -> W(G\\e) + W(G/e)."""

    def rec(weights, mult):
        if not mult:
            return {make_partition(weights): (1,)}
        (a, b), m = next(iter(sorted(mult.items())))
        rest = dict(mult)
        if m == 1:
            del rest[(a, b)]
        else:
            rest[(a, b)] = m - 1
        cw, cm = _contract_pair(weights, mult, a, b)
        left = rec(weights, rest)
        right = rec(cw, cm)
        # the other m-1 copies became loops, each a factor y
        out = dict(left)
        for lam, c in right.items():
            out[lam] = tp_add(out.get(lam, ()), tp_shift(c, m - 1))
        return {k: v for k, v in out.items() if v}

    weights, mult, loops = _bundles(g)
    return {lam: tp_shift(c, loops) for lam, c in rec(weights, mult).items()}


def xb_from_w(w: WPoly, nverts: int) -> PPoly:
    """XB = t^|V| W(t+1, p_1/t, p_2/t, ...)."""
    terms = {}
    for lam, c in w.terms:
        shift = nverts - len(lam)
        if shift < 0:
            raise ValueError("partition longer than the vertex count")
        terms[lam] = tp_shift(c, shift)
    return PPoly(terms)


def w_from_xb(a: PPoly, nverts: int) -> WPoly:
    """Inverse substitution: divide by t^|V|, set t = y-1, p_k -> t x_k."""
    out = {}
    for lam, c in a.terms.items():
        drop = nverts - len(lam)
        if drop < 0 or any(c[:drop]):
            raise ValueError("input is not the XB of a graph on nverts vertices")
        out[lam] = c[drop:]
    return WPoly.from_dict(out)


# --------------------------------------------------------------------------
# (r, q)-chromatic extension

def _rq_sum(weight: int, r: int, q: int, n: int) -> int:
    return sum(r ** (weight * q ** i) for i in range(n))


def b_function(g: VWGraph, r: int, q: int, t_val: int, max_edges: int = DEFAULT_MAX_EDGES) -> int:
    """Sum over S of t^|S| times, per component c, sum_{i<n} r^(w(c) q^i)."""
    if r <= 0:
        raise ValueError("r must be positive")
    if q < 0:
        raise ValueError("q must be nonnegative")
    n = g.n
    total = 0
    for (lam, size), cnt in subset_counts(g, max_edges).items():
        prod = 1
        for part in lam:
            prod *= _rq_sum(part, r, q, n)
        total += cnt * t_val ** size * prod
    return total


def b_from_xb(a: PPoly, nverts: int, r: int, q: int, t_val: int) -> int:
    """Evaluate an XB expansion with p_k -> sum_{i<n} r^(k q^i)."""
    val = a.substitute(t_val, lambda k: _rq_sum(k, r, q, nverts))
    if val.denominator != 1:
        raise AssertionError("non-integral B value")
    return int(val)


# --------------------------------------------------------------------------
# colouring oracle

def coloring_oracle_xb(g: VWGraph, ncolors: int, t_val, xs: Sequence) -> Fraction:
    """Brute force over all colourings of the XB defining sum."""
    if len(xs) != ncolors:
        raise ValueError("need one variable value per colour")
    if ncolors ** g.n > COLORING_LIMIT:
        raise ValueError("too many colourings to enumerate")
    t1 = 1 + Fraction(t_val)
    xs = [Fraction(x) for x in xs]
    total = Fraction(0)
    for kappa in itertools.product(range(ncolors), repeat=g.n):
        mono = sum(1 for e in g.edges if kappa[e.u] == kappa[e.v])
        term = t1 ** mono
        for v, col in enumerate(kappa):
            term *= xs[col] ** g.weights[v]
        total += term
    return total


def proper_colorings(g: VWGraph, ncolors: int) -> int:
    """Number of proper colourings with ncolors colours (brute force)."""
    count = 0
    for kappa in itertools.product(range(ncolors), repeat=g.n):
        if all(kappa[e.u] != kappa[e.v] for e in g.edges):
            count += 1
    return count



# --------------------------------------------------------------------------
# X in the augmented monomial basis

def stable_partition_counts(g: VWGraph) -> dict:
    """X as {lambda: c} meaning sum of c * m~_lambda (augmented monomials).

    A proper colouring groups the vertices into a stable set partition, and
    the colourings with a given partition sum to m~ of its block weights.  The
    count per block-weight type is found by a memoized recursion on the set
    of unplaced vertices, always placing the first one; high-degree vertices
    go first so dense graphs branch little.  A loop gives zero.
    """
    if any(e.is_loop for e in g.edges):
        return {}
    n = g.n
    order = sorted(range(n), key=lambda v: (-len(g.neighbors(v)), v))
    pos = {v: i for i, v in enumerate(order)}
    adj = [0] * n
    for v in range(n):
        for u in g.neighbors(v):
            adj[pos[v]] |= 1 << pos[u]
    weight = [g.weights[v] for v in order]
    memo: dict = {0: {(): 1}}

    def stable_sets(v, cand):
        # stable sets {v} + T with T inside cand (cand has no neighbour of v)
        out = []

        def rec(avail, mask, w):
            out.append((mask, w))
            while avail:
                low = avail & -avail
                avail ^= low
                i = low.bit_length() - 1
                rec(avail & ~adj[i], mask | low, w + weight[i])

        rec(cand, 1 << v, weight[v])
        return out

    def f(U):
        got = memo.get(U)
        if got is not None:
            return got
        low = U & -U
        v = low.bit_length() - 1
        rest = U ^ low
        out: dict = {}
        for S, w in stable_sets(v, rest & ~adj[v]):
            for lam, c in f(U & ~S).items():
                key = _insert_part(lam, w)
                out[key] = out.get(key, 0) + c
        memo[U] = out
        return out

    return f((1 << n) - 1)


def _set_partitions(items: list):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def augmented_monomial_to_p(lam: tuple) -> PPoly:
    """m~_lambda in the p basis: a sum over set partitions of the parts, each
    block of j parts merged into one p with Moebius weight (-1)^(j-1) (j-1)!."""
    terms: dict = {}
    for part in _set_partitions(list(lam)):
        coeff = 1
        for block in part:
            j = len(block)
            coeff *= (-1) ** (j - 1) * math.factorial(j - 1)
        key = make_partition(sum(block) for block in part)
        terms[key] = terms.get(key, 0) + coeff
    return PPoly({k: (v,) for k, v in terms.items()})


def x_from_stable(g: VWGraph) -> PPoly:
    """X in the p basis via stable partitions (cost grows with Bell(parts))."""
    total = PPoly()
    for lam, c in stable_partition_counts(g).items():
        total = total + augmented_monomial_to_p(lam).scale(c)
    return total
