"""Labeling builders for graph operations.

Every builder takes labeled operands, checks the index hypotheses on the
resulting graph, assembles a labeling and runs :func:`classify` before it
returns anything.  A failed hypothesis is reported with a witness.

Label placement happens in two stages.  First the builder keeps the operand
labels and looks for the smallest translation that removes collisions.  If no
translation can work, vertices are rebased onto the offset ladder: the i-th
vertex (graph order) gets first term ``t * 2**i``.  Pairwise sums of distinct
powers of two are distinct, so the ladder never collides.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

from . import graph as gr
from .graph import Graph
from .labeling import (
    Labeling,
    classify,
    edge_multiplier,
    labeling_to_json,
)
from .numeric_sets import SetLabel, ap_of, make_ap

DEFAULT_MAX_DOUBLINGS = 20


@dataclass
class ConstructionOutcome:
    graph: Graph
    promised: str
    result: Optional[dict] = None
    failed_hypothesis: Optional[dict] = None
    repairs_applied: list = field(default_factory=list)
    k: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.result is not None

    def to_json(self) -> dict:
        return {
            "status": "ok" if self.ok else "failed",
            "promised_class": self.promised,
            "k": self.k,
            "graph": self.graph.to_json(),
            "labeling": labeling_to_json(self.result, self.graph) if self.ok else None,
            "failed_hypothesis": self.failed_hypothesis,
            "repairs": self.repairs_applied,
        }


def _failed(G, promised, detail: dict, k=None, repairs=()):
    return ConstructionOutcome(G, promised, failed_hypothesis=detail, repairs_applied=list(repairs), k=k)


def _shape(lab: SetLabel) -> tuple[int, int]:
    desc = ap_of(lab)
    return desc.diff, desc.length


def _operand_check(name: str, G: Graph, f: Labeling):
    rep = classify(G, f)
    if rep.is_arithmetic:
        return rep, None
    return rep, {"kind": "operand-not-arithmetic", "operand": name,
                 "message": f"operand {name} is not an arithmetic IASI",
                 "violations": rep.violations[:5]}


def _max_element(*labelings: Labeling) -> int:
    return max((lab.last for f in labelings for lab in f.values()), default=0)


def _check_shapes(H: Graph, shape: dict, edges, pad: bool, origin=None):
    """Run the adjacency condition over ``edges`` of H on (index, cardinality) shapes.

    With ``pad`` a cardinality breach lengthens the smaller-index label to
    the multiplier; divisibility failures are never padded.  Returns the
    first violation (or None) and the list of pads applied.
    """
    pads = []
    for u, v in edges:
        _, viol = edge_multiplier(u, shape[u], v, shape[v])
        if viol is None:
            continue
        if viol["kind"] == "cardinality-bound" and pad:
            small = viol["edge"][0]
            d, n = shape[small]
            shape[small] = (d, viol["k"])
            pads.append({"kind": "pad", "vertex": small, "from": n, "to": viol["k"]})
            continue
        if origin:
            viol["origin"] = [origin[w] for w in viol["edge"]]
        return viol, pads
    return None, pads


def _apply_pads(f: dict, shape: dict) -> dict:
    out = {}
    for v, lab in f.items():
        d, n = shape[v]
        out[v] = lab if len(lab) == n else make_ap(lab.first, d, n)
    return out


def smallest_translation(vertex_items, edge_items) -> Optional[int]:
    """Smallest t >= 0 keeping ``base + c*t`` labels pairwise distinct.

    Each item is ``(base_label, c)``; vertex and edge items are checked as
    separate groups.  Returns None when two items collide for every t.
    """
    bad = set()
    for items in (vertex_items, edge_items):
        by_shape = defaultdict(list)
        for lab, c in items:
            by_shape[lab.shape()].append((lab.first, c))
        for group in by_shape.values():
            for i in range(len(group)):
                a1, c1 = group[i]
                for a2, c2 in group[i + 1:]:
                    if c1 == c2:
                        if a1 == a2:
                            return None
                        continue
                    num, den = a2 - a1, c1 - c2
                    if num % den == 0 and num // den >= 0:
                        bad.add(num // den)
    t = 0
    while t in bad:
        t += 1
    return t


def ladder_labeling(H: Graph, shape: dict, t: int) -> dict[str, SetLabel]:
    return {v: make_ap(t << i, *shape[v]) for i, v in enumerate(H.vertices)}


def _finish(H, promised, candidates, shape, t0, repairs, k=None, max_doublings=DEFAULT_MAX_DOUBLINGS):
    """Return the first candidate labeling passing ``promised``; fall back to the ladder."""
    last = None
    for f, extra in candidates:
        rep = classify(H, f)
        if rep.satisfies(promised, k):
            return ConstructionOutcome(H, promised, result=f, repairs_applied=repairs + extra, k=k)
        last = rep
    t = max(t0, 1)
    for _ in range(max_doublings + 1):
        f = ladder_labeling(H, shape, t)
        rep = classify(H, f)
        if rep.satisfies(promised, k):
            return ConstructionOutcome(H, promised, result=f,
                                       repairs_applied=repairs + [{"kind": "ladder", "t": t}], k=k)
        last = rep
        t *= 2
    return _failed(H, promised, {"kind": "verification-failed",
                                 "message": f"no labeling passed the {promised} check",
                                 "violations": last.violations[:5] if last else []}, k=k, repairs=repairs)


def _promise(*labelings: Labeling) -> str:
    ds = set()
    for f in labelings:
        ds |= {desc.diff if desc else None for desc in map(ap_of, f.values())}
    return "isoarithmetic" if len(ds) <= 1 else "arithmetic"


def _prefixed(f: Labeling, prefix: str) -> dict:
    return {f"{prefix}{v}": lab for v, lab in f.items()}


def label_union(G1: Graph, f1: Labeling, G2: Graph, f2: Labeling, **_) -> ConstructionOutcome:
    """Label the disjoint union, translating the second operand if needed."""
    H = gr.disjoint_union(G1, G2)
    _, bad1 = _operand_check("G1", G1, f1)
    _, bad2 = _operand_check("G2", G2, f2)
    promised = _promise(f1, f2)
    if bad1 or bad2:
        return ConstructionOutcome(H, promised, failed_hypothesis=bad1 or bad2)
    a, b = _prefixed(f1, "A."), _prefixed(f2, "B.")
    shape = {v: _shape(lab) for v, lab in {**a, **b}.items()}
    t = _shift_search(H, a, b)
    cands = []
    if t is not None:
        cands.append(({**a, **{v: lab.shifted(t) for v, lab in b.items()}},
                      [{"kind": "translate", "operand": "G2", "offset": t}] if t else []))
    return _finish(H, promised, cands, shape, 1 + _max_element(f1, f2), [])


def _shift_search(H: Graph, fixed: Labeling, moving: Labeling) -> Optional[int]:
    coef = {v: 0 for v in fixed} | {v: 1 for v in moving}
    base = {**fixed, **moving}
    verts = [(base[v], coef[v]) for v in H.vertices]
    edges = [(SetLabel(x + y for x in base[u] for y in base[v]), coef[u] + coef[v]) for u, v in H.edges]
    return smallest_translation(verts, edges)


def label_join(G1: Graph, f1: Labeling, G2: Graph, f2: Labeling, pad: bool = False, **_) -> ConstructionOutcome:
    """Label G1 + G2; every cross pair must satisfy the index condition."""
    H = gr.join(G1, G2)
    a, b = _prefixed(f1, "A."), _prefixed(f2, "B.")
    promised = _promise(f1, f2)
    for name, G, f in (("G1", G1, f1), ("G2", G2, f2)):
        _, bad = _operand_check(name, G, f)
        if bad:
            return ConstructionOutcome(H, promised, failed_hypothesis=bad)
    shape = {v: _shape(lab) for v, lab in {**a, **b}.items()}
    origin = {f"A.{v}": ["G1", v] for v in G1.vertices} | {f"B.{v}": ["G2", v] for v in G2.vertices}
    cross = [(u, v) for u in a for v in b]
    viol, pads = _check_shapes(H, shape, cross, pad, origin)
    if viol:
        return _failed(H, promised, viol, repairs=pads)
    a, b = _apply_pads(a, shape), _apply_pads(b, shape)
    t = _shift_search(H, a, b)
    cands = []
    if t is not None:
        cands.append(({**a, **{v: lab.shifted(t) for v, lab in b.items()}},
                      [{"kind": "translate", "operand": "G2", "offset": t}] if t else []))
    return _finish(H, promised, cands, shape, 1 + _max_element(a, b), pads)


def label_product(G1: Graph, f1: Labeling, G2: Graph, f2: Labeling, pad: bool = False, **_) -> ConstructionOutcome:
    """Label G1 x G2: vertex (u, v) gets index d(u)*d(v) and cardinality |f1(u)|."""
    H = gr.cartesian_product(G1, G2)
    promised = _promise(f1, f2)
    for name, G, f in (("G1", G1, f1), ("G2", G2, f2)):
        _, bad = _operand_check(name, G, f)
        if bad:
            return ConstructionOutcome(H, promised, failed_hypothesis=bad)
    shape, origin = {}, {}
    for u in G1.vertices:
        d1, n1 = _shape(f1[u])
        for v in G2.vertices:
            name = gr.ProductVertex(u, v).name
            shape[name] = (d1 * _shape(f2[v])[0], n1)
            origin[name] = [u, v]
    viol, pads = _check_shapes(H, shape, H.edges, pad, origin)
    if viol:
        return _failed(H, promised, viol, repairs=pads)
    return _finish(H, promised, [], shape, 1 + _max_element(f1, f2), pads)


def label_corona(G1: Graph, f1: Labeling, G2: Graph, f2: Labeling, pad: bool = False, **_) -> ConstructionOutcome:
    """Label G1 o G2; copy r of G2 reuses f2 under a per-copy translation."""
    try:
        H = gr.corona(G1, G2)
    except gr.GraphError as exc:
        raise ValueError(str(exc)) from exc
    promised = _promise(f1, f2)
    for name, G, f in (("G1", G1, f1), ("G2", G2, f2)):
        _, bad = _operand_check(name, G, f)
        if bad:
            return ConstructionOutcome(H, promised, failed_hypothesis=bad)
    base: dict[str, SetLabel] = dict(f1)
    coef = {v: 0 for v in G1.vertices}  # 0 for G1, copy number otherwise
    origin = {v: ["G1", v] for v in G1.vertices}
    for i, _u in enumerate(G1.vertices, 1):
        for v in G2.vertices:
            name = gr.corona_copy_name(i, v)
            base[name] = f2[v]
            coef[name] = i
            origin[name] = ["G2", v]
    shape = {v: _shape(lab) for v, lab in base.items()}
    viol, pads = _check_shapes(H, shape, H.edges, pad, origin)
    if viol:
        return _failed(H, promised, viol, repairs=pads)
    base = _apply_pads(base, shape)
    cands = []
    # copy r moves by 3**(r-2) * t, copy 1 staying put; failing that, 3**(r-1) * t.
    # Powers of 3 keep cross edges (c) and copy edges (2c) of different copies apart.
    for lift in (0, 1):
        c = {v: 0 if not coef[v] or (coef[v] == 1 and not lift) else 3 ** (coef[v] - 2 + lift)
             for v in H.vertices}
        verts = [(base[v], c[v]) for v in H.vertices]
        edges = [(SetLabel(x + y for x in base[u] for y in base[v]), c[u] + c[v]) for u, v in H.edges]
        t = smallest_translation(verts, edges)
        if t is not None:
            cands.append(({v: base[v].shifted(c[v] * t) for v in H.vertices},
                          [{"kind": "translate", "operand": "G2-copies", "step": t, "first_copy_moved": bool(lift)}]
                          if t else []))
    return _finish(H, promised, cands, shape, 1 + _max_element(base), pads)


def label_complement(G: Graph, f: Labeling, pad: bool = False, **_) -> ConstructionOutcome:
    """Label the complement, keeping the vertex labels when they still work."""
    H = gr.complement(G)
    promised = _promise(f)
    _, bad = _operand_check("G", G, f)
    if bad:
        return ConstructionOutcome(H, promised, failed_hypothesis=bad)
    base = dict(f)
    shape = {v: _shape(lab) for v, lab in base.items()}
    viol, pads = _check_shapes(H, shape, H.edges, pad)
    if viol:
        return _failed(H, promised, viol, repairs=pads)
    base = _apply_pads(base, shape)
    return _finish(H, promised, [(base, [])], shape, 1 + _max_element(base), pads)


def label_identical_biarithmetic(G: Graph, k: int, base_d: int = 1, x_length: Optional[int] = None,
                                 y_length: int = 2) -> ConstructionOutcome:
    """Label a bipartite graph so every edge has index multiplier exactly ``k``.

    One side gets index ``base_d`` and cardinality ``x_length`` (default k),
    the other side gets index ``k * base_d``.
    """
    if k < 2:
        raise ValueError(f"identical biarithmetic labelings need k >= 2, got {k}")
    if base_d < 1:
        raise ValueError("base_d must be positive")
    x_length = k if x_length is None else x_length
    if x_length < k:
        raise ValueError(f"x_length {x_length} is below the multiplier {k}")
    if y_length < 2:
        raise ValueError("y_length must be at least 2")
    cert = gr.is_bipartite(G)
    if not cert:
        return _failed(G, "identical-biarithmetic", {"kind": "not-bipartite", "odd_cycle": list(cert.odd_cycle),
                                                     "message": "graph contains an odd cycle"}, k=k)
    if not G.m:
        return _failed(G, "identical-biarithmetic", {"kind": "no-edges",
                                                     "message": "an edgeless graph fixes no multiplier"}, k=k)
    x, _y = cert.parts
    xs = set(x)
    shape = {v: (base_d, x_length) if v in xs else (k * base_d, y_length) for v in G.vertices}
    return _finish(G, "identical-biarithmetic", [], shape, 1, [], k=k)


OPERATIONS = {
    "union": label_union,
    "join": label_join,
    "product": label_product,
    "corona": label_corona,
}
