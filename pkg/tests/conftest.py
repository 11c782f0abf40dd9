import functools
import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from xbtool.generate import all_graphs
from xbtool.graph import VWGraph, is_connected


@functools.lru_cache(maxsize=None)
def graphs_upto(n):
    return tuple(all_graphs(n, min_n=1))


@functools.lru_cache(maxsize=None)
def connected_upto(n):
    return tuple(g for g in graphs_upto(n) if is_connected(g))


def K(n):
    return VWGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path(n, weights=None):
    return VWGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)], weights)


def cycle(n):
    return VWGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((e.u, e.v) for e in g.edges)
    return h


def random_multigraph(rng, max_n=5, max_w=3, max_m=8, loops=True):
    n = rng.randint(1, max_n)
    weights = [rng.randint(1, max_w) for _ in range(n)]
    pairs = []
    for _ in range(rng.randint(0, max_m)):
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b and not loops:
            continue
        pairs.append((a, b))
    return VWGraph.from_edges(n, pairs, weights)


def random_order(rng, g):
    ids = g.edge_ids()
    rng.shuffle(ids)
    return ids


@st.composite
def multigraphs(draw, max_n=5, max_w=3, max_m=7, loops=True, connected=False):
    n = draw(st.integers(1, max_n))
    weights = draw(st.lists(st.integers(1, max_w), min_size=n, max_size=n))
    v = st.integers(0, n - 1)
    pairs = draw(st.lists(st.tuples(v, v), max_size=max_m))
    if not loops:
        pairs = [(a, b) for a, b in pairs if a != b]
    if connected:
        # a spanning path keeps the graph connected
        perm = draw(st.permutations(range(n)))
        pairs = pairs + [(perm[i], perm[i + 1]) for i in range(n - 1)]
    return VWGraph.from_edges(n, pairs, weights)


@pytest.fixture
def rng():
    return random.Random(20240611)


# -- acceptance reporting -----------------------------------------------------

_CRITERIA: dict = {}


@pytest.fixture
def note(request):
    """Attach a line of detail to the acceptance report of this test."""
    def add(text):
        request.node.user_properties.append(("note", text))
    return add


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    entry = _CRITERIA.setdefault(number, {"title": title, "ok": True, "ran": False, "notes": []})
    if rep.when == "call" or rep.failed:
        entry["ran"] = True
        entry["ok"] = entry["ok"] and rep.passed
    if rep.when == "teardown":
        entry["notes"] += [v for k, v in item.user_properties if k == "note"]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        e = _CRITERIA[number]
        verdict = ("PASS" if e["ok"] else "FAIL") if e["ran"] else "NOT RUN"
        tr.write_line(f"criterion {number:2d} {verdict}: {e['title']}")
        for text in e["notes"]:
            tr.write_line(f"    {text}")
