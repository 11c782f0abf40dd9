"""Census of graph6 collections: group graphs by equal X and equal XB.

XB is computed once per isomorphism class and serialized; the X fingerprint
is the serialization of XB at t = -1, so equal XB always implies equal X.
Grouping hashes each X fingerprint to a 64-bit digest and confirms bucket
mates by byte equality.  The map phase can run in worker processes; the
report does not depend on the number of workers.
"""

from __future__ import annotations

import hashlib
import json
import logging
import multiprocessing
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .canon import canonical_form
from .formats import read_graph6_lines, write_graph6
from .graph import VWGraph, is_connected
from .invariants import XBCache, xb, xb_state_sum, xb_subset
from .symfunc import PPoly

log = logging.getLogger(__name__)

CENSUS_MAX_VERTICES = 10
# pairs whose graphs have at most this many edges re-verify by the literal
# subset sum; larger ones by the state-merged subset sum
SUBSET_VERIFY_EDGES = 10


@dataclass(frozen=True)
class CensusRecord:
    graph6: str
    canonical_key: bytes
    x_fingerprint: bytes
    xb_fingerprint: bytes
    has_triangle: bool
    nvertices: int
    nedges: int
    connected: bool = True


@dataclass
class CensusReport:
    records: list = field(default_factory=list)
    pairs: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    flags: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"pairs": self.pairs, "counts": self.counts, "flags": self.flags,
                "skipped": self.skipped}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=1, sort_keys=True) + "\n"

    def xb_pairs(self) -> list:
        return [p for p in self.pairs if p["equal_xb"]]

    def summary(self) -> str:
        c = self.counts
        lines = [
            f"graphs read: {c['parsed']} ({c['skipped']} skipped, {c['duplicates']} duplicates)",
            f"isomorphism classes: {c['unique']} ({c['unique_connected']} connected)",
            f"equal-X nonisomorphic pairs: {c['equal_x_pairs']['all']} all, "
            f"{c['equal_x_pairs']['connected']} connected",
            f"equal-XB nonisomorphic pairs: {c['equal_xb_pairs']['all']} all, "
            f"{c['equal_xb_pairs']['connected']} connected",
            f"triangle-free flags: {c['triangle_free_flags']}",
            f"verification failures: {c['verification_failures']}",
        ]
        for n, k in sorted(c["equal_x_pairs_by_vertices"].items(), key=lambda kv: int(kv[0])):
            lines.append(f"  n={n}: {k} equal-X pairs among {c['graphs_by_vertices'][n]} graphs")
        for p in self.xb_pairs():
            lines.append(f"  equal XB: {p['g6_a']} {p['g6_b']}")
        return "\n".join(lines) + "\n"


def digest64(data: bytes) -> bytes:
    return hashlib.blake2b(data, digest_size=8).digest()


def fingerprint(g: VWGraph, graph6: str | None = None, method: str = "delcon",
                cache: XBCache | None = None, key: bytes | None = None,
                xb_bytes: bytes | None = None) -> CensusRecord:
    """Census record of g.  ``xb_bytes`` short-circuits the computation."""
    if key is None:
        key = canonical_form(g, CENSUS_MAX_VERTICES)
    if xb_bytes is None:
        value = xb(g, method, cache=cache)
        xb_bytes = value.serialize()
    else:
        value = PPoly.deserialize(xb_bytes)
    if graph6 is None:
        graph6 = write_graph6(g)
    return CensusRecord(
        graph6=graph6,
        canonical_key=key,
        x_fingerprint=value.at_t(-1).serialize(),
        xb_fingerprint=xb_bytes,
        has_triangle=g.has_triangle(),
        nvertices=g.n,
        nedges=g.m,
        connected=is_connected(g),
    )


# --------------------------------------------------------------------------
# persisted cache

def cache_load(path) -> dict:
    """Map canonical key (bytes) to XB serialization; bad lines are skipped."""
    out: dict = {}
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except FileNotFoundError:
        return out
    except OSError as exc:
        log.warning("cache %s unreadable (%s); starting empty", path, exc)
        return out
    lines = data.split(b"\n")
    for i, line in enumerate(lines):
        if not line:
            continue
        try:
            hexkey, ser = line.split(b"\t")
            key = bytes.fromhex(hexkey.decode("ascii"))
            PPoly.deserialize(ser)
        except ValueError:
            where = "final" if i >= len(lines) - 2 else f"line {i + 1}"
            log.warning("cache %s: skipping corrupt %s entry", path, where)
            continue
        out.setdefault(key, ser)
    return out


def cache_store(path, entries) -> None:
    """Append entries (key bytes, serialization bytes) to the cache file."""
    entries = list(entries)
    if not entries:
        return
    needs_newline = False
    try:
        with open(path, "rb") as fh:
            fh.seek(0, os.SEEK_END)
            if fh.tell():
                fh.seek(-1, os.SEEK_END)
                needs_newline = fh.read(1) != b"\n"
    except FileNotFoundError:
        pass
    with open(path, "ab") as fh:
        if needs_newline:
            fh.write(b"\n")
        for key, ser in entries:
            fh.write(key.hex().encode("ascii") + b"\t" + ser + b"\n")


# --------------------------------------------------------------------------
# the map phase

_worker_cache: XBCache | None = None
_worker_method = "delcon"


def _init_worker(method: str) -> None:
    global _worker_cache, _worker_method
    _worker_cache = XBCache()
    _worker_method = method


def _xb_chunk(graphs: list) -> list:
    return [xb(g, _worker_method, cache=_worker_cache).serialize() for g in graphs]


def _compute_xb(graphs: list, method: str, jobs: int) -> list:
    if not graphs:
        return []
    if jobs <= 1:
        cache = XBCache()
        return [xb(g, method, cache=cache).serialize() for g in graphs]
    # contiguous chunks keep similar graphs in the same worker memo
    size = max(1, min(256, len(graphs) // (jobs * 4) or 1))
    chunks = [graphs[i:i + size] for i in range(0, len(graphs), size)]
    ctx = multiprocessing.get_context("spawn" if os.name == "nt" else "fork")
    with ctx.Pool(jobs, initializer=_init_worker, initargs=(method,)) as pool:
        parts = pool.map(_xb_chunk, chunks)
    return [s for part in parts for s in part]


# --------------------------------------------------------------------------
# census

def _verify_x(g: VWGraph) -> bytes:
    value = xb_subset(g) if g.m <= SUBSET_VERIFY_EDGES else xb_state_sum(g)
    return value.at_t(-1).serialize()


def census(lines: Iterable[str], *, jobs: int = 1, method: str = "delcon",
           cache_path=None, verify: bool = True) -> CensusReport:
    report = CensusReport()
    classes: dict = {}  # canonical key -> (graph6 text, graph)
    parsed = 0
    for lineno, text, g in read_graph6_lines(lines):
        if isinstance(g, Exception):
            report.skipped.append({"line": lineno, "text": text, "error": str(g)})
            log.warning("line %d skipped: %s", lineno, g)
            continue
        if g.n > CENSUS_MAX_VERTICES:
            report.skipped.append({"line": lineno, "text": text,
                                   "error": f"more than {CENSUS_MAX_VERTICES} vertices"})
            log.warning("line %d skipped: graph too large", lineno)
            continue
        parsed += 1
        key = canonical_form(g, CENSUS_MAX_VERTICES)
        prev = classes.get(key)
        if prev is None or text < prev[0]:
            classes[key] = (text, g)

    keys = sorted(classes)
    stored = cache_load(cache_path) if cache_path else {}
    todo = [k for k in keys if k not in stored]
    fresh = _compute_xb([classes[k][1] for k in todo], method, jobs)
    known = dict(stored)
    known.update(zip(todo, fresh))
    if cache_path and todo:
        cache_store(cache_path, zip(todo, fresh))

    recs = [fingerprint(classes[k][1], classes[k][0], key=k, xb_bytes=known[k]) for k in keys]
    report.records = recs

    buckets: dict = {}
    for i, r in enumerate(recs):
        buckets.setdefault(digest64(r.x_fingerprint), []).append(i)
    groups = []
    for members in buckets.values():
        exact: dict = {}
        for i in members:
            exact.setdefault(recs[i].x_fingerprint, []).append(i)
        groups += [g for g in exact.values() if len(g) > 1]
    groups.sort()

    verified: dict = {}
    failures = 0
    for grp in groups:
        for i, j in combinations(grp, 2):
            a, b = recs[i], recs[j]
            pair = {
                "g6_a": a.graph6,
                "g6_b": b.graph6,
                "equal_xb": a.xb_fingerprint == b.xb_fingerprint,
                "triangles": [a.has_triangle, b.has_triangle],
                "connected": [a.connected, b.connected],
                "nvertices": a.nvertices,
            }
            report.pairs.append(pair)
            if not (a.has_triangle and b.has_triangle):
                report.flags.append({"kind": "triangle_free", "g6_a": a.graph6, "g6_b": b.graph6})
            if verify:
                for k in (i, j):
                    if k not in verified:
                        verified[k] = _verify_x(classes[recs[k].canonical_key][1])
                if verified[i] != verified[j] or verified[i] != a.x_fingerprint:
                    failures += 1
                    report.flags.append({"kind": "verification_failed",
                                         "g6_a": a.graph6, "g6_b": b.graph6})

    def scoped(pairs):
        return {"all": len(pairs), "connected": sum(1 for p in pairs if all(p["connected"]))}

    by_n: dict = {}
    for r in recs:
        by_n[str(r.nvertices)] = by_n.get(str(r.nvertices), 0) + 1
    pairs_by_n: dict = {}
    for p in report.pairs:
        pairs_by_n[str(p["nvertices"])] = pairs_by_n.get(str(p["nvertices"]), 0) + 1
    report.counts = {
        "lines": parsed + len(report.skipped),
        "parsed": parsed,
        "skipped": len(report.skipped),
        "duplicates": parsed - len(recs),
        "unique": len(recs),
        "unique_connected": sum(1 for r in recs if r.connected),
        "graphs_by_vertices": by_n,
        "equal_x_classes": len(groups),
        "equal_x_pairs": scoped(report.pairs),
        "equal_xb_pairs": scoped(report.xb_pairs()),
        "equal_x_pairs_by_vertices": pairs_by_n,
        "triangle_free_flags": sum(1 for f in report.flags if f["kind"] == "triangle_free"),
        "verification_failures": failures,
        "verified": verify,
    }
    return report
