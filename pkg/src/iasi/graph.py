"""Finite simple undirected graphs and the operations the labeling theory uses.

Vertex names are opaque strings.  Results of binary operations use
deterministic names so labelings can be carried across:

* union and join prefix the operands with ``A.`` and ``B.``;
* cartesian product names ``(u, v)`` as ``u|v``;
* corona keeps the base graph's names and names vertex ``v`` of the copy
  attached to the i-th base vertex (1-based) as ``i.v``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence


class GraphError(ValueError):
    pass


class GraphFormatError(GraphError):
    """Malformed graph input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ProductVertex(NamedTuple):
    left: str
    right: str

    @property
    def name(self) -> str:
        return f"{self.left}|{self.right}"


class Graph:
    """Immutable simple graph with an ordered vertex list.

    Edges are stored as pairs ``(u, v)`` with ``u`` before ``v`` in vertex
    order, and ``edges`` lists them sorted by that order.
    """

    __slots__ = ("_vertices", "_index", "_adj", "_edges")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Sequence[str]] = (), strict: bool = False):
        verts = [str(v) for v in vertices]
        index = {}
        for v in verts:
            if v in index:
                raise GraphError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        adj: dict[str, set[str]] = {v: set() for v in verts}
        pairs = set()
        for e in edges:
            u, v = (str(x) for x in e)
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            for w in (u, v):
                if w not in index:
                    raise GraphError(f"edge ({u!r}, {v!r}) uses undeclared vertex {w!r}")
            if index[u] > index[v]:
                u, v = v, u
            if (u, v) in pairs:
                raise GraphError(f"duplicate edge ({u!r}, {v!r})")
            pairs.add((u, v))
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = tuple(verts)
        self._index = index
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._edges = tuple(sorted(pairs, key=lambda e: (index[e[0]], index[e[1]])))
        if strict:
            check_strict(self)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def index(self, v: str) -> int:
        return self._index[v]

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_edge(self, u: str, v: str) -> bool:
        return u in self._adj and v in self._adj[u]

    def __contains__(self, v) -> bool:
        return v in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and set(self._edges) == set(other._edges)

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(self._edges)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def isolated_vertices(self) -> list[str]:
        return [v for v in self._vertices if not self._adj[v]]

    def relabel(self, mapping) -> "Graph":
        """Rename vertices through ``mapping`` (callable or dict)."""
        f = mapping if callable(mapping) else mapping.__getitem__
        return Graph([f(v) for v in self._vertices], [(f(u), f(v)) for u, v in self._edges])

    def to_json(self) -> dict:
        return {"vertices": list(self._vertices), "edges": [list(e) for e in self._edges]}

    @classmethod
    def from_json(cls, data, strict: bool = False) -> "Graph":
        if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
            raise GraphFormatError('graph JSON needs "vertices" and "edges" fields')
        verts, edges = data["vertices"], data["edges"]
        if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
            raise GraphFormatError('"vertices" must be a list of strings')
        for i, e in enumerate(edges if isinstance(edges, list) else [None]):
            if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)):
                raise GraphFormatError(f'"edges"[{i}] must be a pair of vertex names')
        try:
            return cls(verts, edges, strict=strict)
        except GraphFormatError:
            raise
        except GraphError as exc:
            raise GraphFormatError(str(exc)) from exc


def check_strict(G: Graph) -> None:
    iso = G.isolated_vertices()
    if iso:
        raise GraphError(f"isolated vertices not allowed: {', '.join(iso)}")


# -- text formats -----------------------------------------------------------

def parse_edge_list(text: str, strict: bool = False) -> Graph:
    """Parse the ``u v`` per line format (``#`` comments, ``vertex u`` lines)."""
    vertices: dict[str, None] = {}
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) != 2:
                raise GraphFormatError("expected 'vertex NAME'", lineno)
            vertices.setdefault(parts[1])
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        u, v = parts
        if u == v:
            raise GraphFormatError(f"self-loop at {u!r}", lineno)
        key = frozenset((u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
        vertices.setdefault(u)
        vertices.setdefault(v)
        edges.append((u, v))
    G = Graph(vertices, edges)
    if strict:
        try:
            check_strict(G)
        except GraphError as exc:
            raise GraphFormatError(str(exc)) from exc
    return G


def format_edge_list(G: Graph) -> str:
    for v in G.vertices:
        if not v or any(c.isspace() for c in v) or "#" in v:
            raise GraphError(f"vertex name {v!r} cannot be written as an edge list")
    lines = [f"vertex {v}" for v in G.vertices]
    lines += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def load_graph(path, strict: bool = False) -> Graph:
    """Read a graph file; ``.json`` selects the JSON format."""
    with open(path) as fh:
        text = fh.read()
    if str(path).endswith(".json"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from exc
        return Graph.from_json(data, strict=strict)
    return parse_edge_list(text, strict=strict)


def save_graph(G: Graph, path) -> None:
    with open(path, "w") as fh:
        if str(path).endswith(".json"):
            json.dump(G.to_json(), fh, indent=2)
            fh.write("\n")
        else:
            fh.write(format_edge_list(G))


# -- named families ---------------------------------------------------------

def _names(n: int) -> list[str]:
    return [f"v{i}" for i in range(1, n + 1)]


def path_graph(n: int) -> Graph:
    vs = _names(n)
    return Graph(vs, zip(vs, vs[1:]))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    vs = _names(n)
    return Graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre ``v1``."""
    vs = _names(leaves + 1)
    return Graph(vs, [(vs[0], v) for v in vs[1:]])


def complete_graph(n: int) -> Graph:
    vs = _names(n)
    return Graph(vs, combinations(vs, 2))


def empty_graph(n: int = 0) -> Graph:
    return Graph(_names(n))


# -- operations -------------------------------------------------------------

def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    a = G1.relabel(lambda v: f"A.{v}")
    b = G2.relabel(lambda v: f"B.{v}")
    return Graph(a.vertices + b.vertices, a.edges + b.edges)


def join(G1: Graph, G2: Graph) -> Graph:
    a = G1.relabel(lambda v: f"A.{v}")
    b = G2.relabel(lambda v: f"B.{v}")
    cross = [(u, v) for u in a.vertices for v in b.vertices]
    return Graph(a.vertices + b.vertices, a.edges + b.edges + tuple(cross))


def cartesian_product(G1: Graph, G2: Graph) -> Graph:
    verts = [ProductVertex(u, v).name for u in G1.vertices for v in G2.vertices]
    edges = []
    for u in G1.vertices:
        for v1, v2 in G2.edges:
            edges.append((ProductVertex(u, v1).name, ProductVertex(u, v2).name))
    for v in G2.vertices:
        for u1, u2 in G1.edges:
            edges.append((ProductVertex(u1, v).name, ProductVertex(u2, v).name))
    return Graph(verts, edges)


def corona_copy_name(i: int, v: str) -> str:
    return f"{i}.{v}"


def corona(G1: Graph, G2: Graph) -> Graph:
    verts = list(G1.vertices)
    edges = list(G1.edges)
    for i, u in enumerate(G1.vertices, 1):
        copy = [corona_copy_name(i, v) for v in G2.vertices]
        verts += copy
        edges += [(corona_copy_name(i, a), corona_copy_name(i, b)) for a, b in G2.edges]
        edges += [(u, w) for w in copy]
    try:
        return Graph(verts, edges)
    except GraphError as exc:
        raise GraphError(f"corona vertex names clash: {exc}") from exc


def complement(G: Graph) -> Graph:
    return Graph(G.vertices, [(u, v) for u, v in combinations(G.vertices, 2) if not G.has_edge(u, v)])


def induced_subgraph(G: Graph, S: Iterable[str]) -> Graph:
    keep = set(S)
    unknown = keep.difference(G.vertices)
    if unknown:
        raise GraphError(f"unknown vertices: {', '.join(sorted(unknown))}")
    return Graph([v for v in G.vertices if v in keep], [e for e in G.edges if e[0] in keep and e[1] in keep])


def delete_vertex(G: Graph, v: str) -> Graph:
    return induced_subgraph(G, [w for w in G.vertices if w != v])


def delete_edge(G: Graph, u: str, v: str) -> Graph:
    if not G.has_edge(u, v):
        raise GraphError(f"no edge ({u!r}, {v!r})")
    return Graph(G.vertices, [e for e in G.edges if set(e) != {u, v}])


# -- bipartiteness ----------------------------------------------------------

@dataclass(frozen=True)
class BipartiteCertificate:
    """Either a 2-colouring (``parts``) or an odd cycle (``odd_cycle``)."""

    bipartite: bool
    parts: Optional[tuple[tuple[str, ...], tuple[str, ...]]] = None
    odd_cycle: Optional[tuple[str, ...]] = None

    def __bool__(self) -> bool:
        return self.bipartite

    def verify(self, G: Graph) -> bool:
        if self.bipartite:
            x, y = (set(p) for p in self.parts)
            if x & y or (x | y) != set(G.vertices):
                return False
            return all((u in x) != (v in x) for u, v in G.edges)
        cyc = self.odd_cycle
        if len(cyc) % 2 == 0 or len(set(cyc)) != len(cyc):
            return False
        return all(G.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))

    def to_json(self) -> dict:
        if self.bipartite:
            return {"bipartite": True, "parts": [list(p) for p in self.parts]}
        return {"bipartite": False, "odd_cycle": list(self.odd_cycle)}


def is_bipartite(G: Graph) -> BipartiteCertificate:
    """BFS 2-colouring; on conflict returns the odd cycle through the bad edge."""
    color: dict[str, int] = {}
    parent: dict[str, Optional[str]] = {}
    depth: dict[str, int] = {}
    for root in G.vertices:
        if root in color:
            continue
        color[root], parent[root], depth[root] = 0, None, 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(G.neighbors(u), key=G.index):
                if w not in color:
                    color[w], parent[w], depth[w] = 1 - color[u], u, depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return BipartiteCertificate(False, odd_cycle=_tree_cycle(u, w, parent, depth))
    x = tuple(v for v in G.vertices if color[v] == 0)
    y = tuple(v for v in G.vertices if color[v] == 1)
    return BipartiteCertificate(True, parts=(x, y))


def _tree_cycle(u, w, parent, depth) -> tuple[str, ...]:
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    # left and right both end at the common ancestor
    return tuple(left + right[-2::-1])


def find_triangle(G: Graph) -> Optional[tuple[str, str, str]]:
    for u, v in G.edges:
        common = G.neighbors(u) & G.neighbors(v)
        if common:
            return (u, v, min(common, key=G.index))
    return None


def degeneracy_order(G: Graph) -> list[str]:
    """Vertices ordered densest-core first (reverse of min-degree peeling)."""
    deg = {v: G.degree(v) for v in G.vertices}
    removed: list[str] = []
    alive = set(G.vertices)
    while alive:
        v = min(alive, key=lambda x: (deg[x], G.index(x)))
        alive.remove(v)
        removed.append(v)
        for w in G.neighbors(v):
            if w in alive:
                deg[w] -= 1
    return removed[::-1]
