"""Bounded backtracking search for labelings of a given IASI class.

Candidate labels are ``make_ap(a, d, n)`` for every first term, index and
length allowed by :class:`SearchBounds`.  Vertices are picked by smallest
remaining domain, ties broken by degeneracy order.  After every assignment
the domains are filtered for vertex-injectivity and the index condition, then
the index condition is propagated to arc consistency on (index, length)
pairs.  Any witness is re-checked with :func:`classify` before it is
returned.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional

from .graph import Graph, degeneracy_order, is_bipartite
from .labeling import CLASSES, classify
from .numeric_sets import SetLabel, index_multiplier, make_ap, sumset

DEFAULT_NODE_BUDGET = 200_000
FOUND, EXHAUSTED, BUDGET_EXCEEDED = "FOUND", "EXHAUSTED", "BUDGET_EXCEEDED"
SEARCH_CLASSES = tuple(c for c in CLASSES if c != "semi-arithmetic")


def default_node_budget() -> int:
    raw = os.environ.get("IASI_NODE_BUDGET")
    if raw:
        value = int(raw)
        if value < 1:
            raise ValueError("IASI_NODE_BUDGET must be positive")
        return value
    return DEFAULT_NODE_BUDGET


@dataclass(frozen=True)
class SearchBounds:
    max_first: int
    diffs: tuple[int, ...]
    lengths: tuple[int, ...]
    node_budget: int = field(default_factory=default_node_budget)

    def __post_init__(self):
        object.__setattr__(self, "diffs", tuple(sorted(set(self.diffs))))
        object.__setattr__(self, "lengths", tuple(sorted(set(self.lengths))))
        if self.max_first < 0:
            raise ValueError("max_first must be non-negative")
        if not self.diffs or not self.lengths:
            raise ValueError("empty candidate space: diffs and lengths must be nonempty")
        if min(self.diffs) < 1 or min(self.lengths) < 1:
            raise ValueError("diffs and lengths must be positive")
        if self.node_budget < 1:
            raise ValueError("node_budget must be positive")


@dataclass
class SearchResult:
    status: str
    witness: Optional[dict[str, SetLabel]]
    nodes_explored: int

    def to_json(self, G: Optional[Graph] = None) -> dict:
        witness = None
        if self.witness is not None:
            keys = G.vertices if G is not None else sorted(self.witness)
            witness = {v: list(self.witness[v]) for v in keys}
        return {"status": self.status, "witness": witness, "nodes_explored": self.nodes_explored}


class _BudgetExceeded(Exception):
    pass


def _edge_ok(target: str, k: Optional[int], s1: tuple[int, int], s2: tuple[int, int]) -> bool:
    """Index condition between two adjacent (index, length) shapes."""
    if target == "iasi":
        return True
    (d1, n1), (d2, n2) = s1, s2
    if d1 > d2:
        d1, n1, d2, n2 = d2, n2, d1, n1
    m = index_multiplier(d1, d2)
    if m is None or m > n1:
        return False
    if target == "identical-biarithmetic":
        return m == k
    if target == "isoarithmetic":
        return m == 1
    return True


class _Searcher:
    def __init__(self, G: Graph, target: str, k: Optional[int], bounds: SearchBounds):
        self.G = G
        self.target = target
        self.k = k
        self.bounds = bounds
        self.nodes = 0
        rank = {v: i for i, v in enumerate(degeneracy_order(G))}
        self.rank = rank
        self.compat_cache: dict = {}

    def compat(self, s1, s2) -> bool:
        key = (s1, s2)
        hit = self.compat_cache.get(key)
        if hit is None:
            hit = self.compat_cache[key] = _edge_ok(self.target, self.k, s1, s2)
        return hit

    def run(self, candidates: list[tuple[int, int, int]]) -> Optional[dict[str, SetLabel]]:
        domains = {v: list(candidates) for v in self.G.vertices}
        if not self._propagate(domains, set(self.G.vertices)):
            return None
        return self._extend({}, frozenset(), domains)

    def _propagate(self, domains, unassigned) -> bool:
        """Arc consistency of the index condition on (d, n) projections."""
        shapes = {v: {(d, n) for _, d, n in domains[v]} for v in unassigned}
        queue = [(u, w) for u in unassigned for w in self.G.neighbors(u) if w in unassigned]
        changed = set()
        while queue:
            u, w = queue.pop()
            keep = {s for s in shapes[u] if any(self.compat(s, t) for t in shapes[w])}
            if len(keep) != len(shapes[u]):
                if not keep:
                    return False
                shapes[u] = keep
                changed.add(u)
                queue.extend((x, u) for x in self.G.neighbors(u) if x in unassigned and x != w)
        for v in changed:
            domains[v] = [c for c in domains[v] if (c[1], c[2]) in shapes[v]]
        return True

    def _extend(self, labels, used_edges, domains) -> Optional[dict[str, SetLabel]]:
        self.nodes += 1
        if self.nodes > self.bounds.node_budget:
            raise _BudgetExceeded
        if not domains:
            f = {v: labels[v] for v in self.G.vertices}
            if classify(self.G, f).satisfies(self.target, self.k):
                return f
            return None
        v = min(domains, key=lambda x: (len(domains[x]), self.rank[x]))
        nbrs = self.G.neighbors(v)
        for cand in domains[v]:
            lab = make_ap(*cand)
            new_edges = set()
            for w in nbrs:
                if w in labels:
                    e = sumset(lab, labels[w])
                    if e in used_edges or e in new_edges:
                        break
                    new_edges.add(e)
            else:
                rest = self._narrow(v, cand, domains)
                if rest is None:
                    continue
                labels[v] = lab
                found = self._extend(labels, used_edges | new_edges, rest)
                del labels[v]
                if found is not None:
                    return found
        return None

    def _narrow(self, v, cand, domains):
        shape = (cand[1], cand[2])
        nbrs = self.G.neighbors(v)
        rest = {}
        for w, dom in domains.items():
            if w == v:
                continue
            if w in nbrs:
                dom = [c for c in dom if c != cand and self.compat(shape, (c[1], c[2]))]
            else:
                dom = [c for c in dom if c != cand]
            if not dom:
                return None
            rest[w] = dom
        if not self._propagate(rest, set(rest)):
            return None
        return rest


def search(G: Graph, target: str, bounds: SearchBounds, k: Optional[int] = None) -> SearchResult:
    """Look for a labeling of ``G`` in class ``target`` within ``bounds``.

    EXHAUSTED means no labeling exists inside the bounds; it says nothing
    about larger first terms, indices or lengths.
    """
    if target not in SEARCH_CLASSES:
        raise ValueError(f"unknown search class {target!r}; expected one of {', '.join(SEARCH_CLASSES)}")
    if target == "identical-biarithmetic":
        if k is None or k < 2:
            raise ValueError("identical-biarithmetic search needs k >= 2")
    else:
        k = None
    if target != "iasi" and min(bounds.lengths) < 2:
        raise ValueError("arithmetic-class searches need every allowed length >= 2")
    if target == "identical-biarithmetic" and G.m == 0:
        return SearchResult(EXHAUSTED, None, 0)

    searcher = _Searcher(G, target, k, bounds)
    firsts = range(bounds.max_first + 1)
    if target == "isoarithmetic":
        groups = [[(a, d, n) for a in firsts for n in bounds.lengths] for d in bounds.diffs]
    else:
        groups = [[(a, d, n) for a in firsts for d in bounds.diffs for n in bounds.lengths]]
    try:
        for cands in groups:
            if G.n == 0:
                return SearchResult(FOUND, {}, 0)
            found = searcher.run(cands)
            if found is not None:
                return SearchResult(FOUND, found, searcher.nodes)
    except _BudgetExceeded:
        return SearchResult(BUDGET_EXCEEDED, None, searcher.nodes - 1)
    return SearchResult(EXHAUSTED, None, searcher.nodes)


# -- census -----------------------------------------------------------------

@dataclass(frozen=True)
class CensusRow:
    graph_id: str
    n: int
    m: int
    bipartite: bool
    status: str
    nodes: int

    def as_dict(self) -> dict:
        return {"graph_id": self.graph_id, "n": self.n, "m": self.m,
                "bipartite": self.bipartite, "status": self.status, "nodes": self.nodes}


CENSUS_COLUMNS = ("graph_id", "n", "m", "bipartite", "status", "nodes")


def enumerate_graphs(n_max: int, n_min: int = 2) -> Iterator[tuple[str, Graph]]:
    """Every labeled graph on ``v1..vn`` (n <= n_max) with no isolated vertex.

    Graphs are deduplicated by edge set only, so isomorphic copies repeat.
    The id is ``n{n}-{mask}`` with bit i set for the i-th pair in
    lexicographic order.
    """
    for n in range(max(n_min, 1), n_max + 1):
        verts = [f"v{i}" for i in range(1, n + 1)]
        pairs = list(combinations(range(n), 2))
        for mask in range(1, 1 << len(pairs)):
            chosen = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            covered = {x for e in chosen for x in e}
            if len(covered) != n:
                continue
            yield f"n{n}-{mask:x}", Graph(verts, [(verts[a], verts[b]) for a, b in chosen])


def census(n_max: int, target: str, bounds: SearchBounds, k: Optional[int] = None) -> list[CensusRow]:
    rows = []
    for gid, G in enumerate_graphs(n_max):
        res = search(G, target, bounds, k=k)
        rows.append(CensusRow(gid, G.n, G.m, bool(is_bipartite(G)), res.status, res.nodes_explored))
    return rows


def census_csv(rows: list[CensusRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CENSUS_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        d = row.as_dict()
        d["bipartite"] = str(d["bipartite"]).lower()
        writer.writerow(d)
    return buf.getvalue()


def census_json(rows: list[CensusRow]) -> list[dict]:
    return [row.as_dict() for row in rows]
