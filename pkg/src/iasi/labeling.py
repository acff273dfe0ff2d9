"""Set-labelings of graphs and the IASI classifier.

A labeling is a plain ``dict`` from vertex name to :class:`SetLabel`.  Edge
labels are never stored; they are the sumsets of the endpoint labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .graph import Graph
from .numeric_sets import SetLabel, ap_of, index_multiplier, sumset

Labeling = Mapping[str, SetLabel]

CLASSES = ("iasi", "arithmetic", "semi-arithmetic", "isoarithmetic", "biarithmetic", "identical-biarithmetic")


class LabelingError(ValueError):
    pass


def labeling_from_json(data) -> dict[str, SetLabel]:
    if not isinstance(data, dict):
        raise LabelingError("labeling JSON must be an object mapping vertex names to integer arrays")
    out = {}
    for v, xs in data.items():
        try:
            out[v] = SetLabel.from_json(xs)
        except (TypeError, ValueError) as exc:
            raise LabelingError(f"label of vertex {v!r}: {exc}") from exc
    return out


def labeling_to_json(f: Labeling, G: Optional[Graph] = None) -> dict[str, list[int]]:
    keys = G.vertices if G is not None else sorted(f)
    return {v: list(f[v]) for v in keys}


def load_labeling(path) -> dict[str, SetLabel]:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise LabelingError(f"line {exc.lineno}: invalid JSON: {exc.msg}") from exc
    return labeling_from_json(data)


def restrict(f: Labeling, G: Graph) -> dict[str, SetLabel]:
    return {v: f[v] for v in G.vertices}


def _require_total(G: Graph, f: Labeling) -> None:
    missing = [v for v in G.vertices if v not in f]
    if missing:
        raise LabelingError(f"unlabeled vertices: {', '.join(missing)}")


def induced_edge_label(f: Labeling, u: str, v: str) -> SetLabel:
    if u == v:
        raise LabelingError("an edge needs two distinct endpoints")
    for w in (u, v):
        if w not in f:
            raise LabelingError(f"vertex {w!r} is unlabeled")
    return sumset(f[u], f[v])


def edge_labels(G: Graph, f: Labeling) -> dict[tuple[str, str], SetLabel]:
    return {(u, v): sumset(f[u], f[v]) for u, v in G.edges}


def _violation(kind: str, **detail) -> dict:
    return {"kind": kind, **detail}


def verify_iasi(G: Graph, f: Labeling) -> tuple[bool, list[dict]]:
    """Check vertex- and edge-injectivity; returns (verdict, collisions)."""
    _require_total(G, f)
    violations = []
    owner: dict[SetLabel, str] = {}
    for v in G.vertices:
        lab = f[v]
        if lab in owner:
            violations.append(_violation("vertex-collision", vertices=[owner[lab], v], label=list(lab)))
        else:
            owner[lab] = v
    seen: dict[SetLabel, tuple[str, str]] = {}
    for e, lab in edge_labels(G, f).items():
        if lab in seen:
            violations.append(_violation("edge-collision", edges=[list(seen[lab]), list(e)], label=list(lab)))
        else:
            seen[lab] = e
    return not violations, violations


@dataclass(frozen=True)
class EdgeMultiplier:
    """Multiplier for one edge, read from the endpoint with the smaller index."""

    base: str
    k: int


def check_adjacency_condition(G: Graph, f: Labeling) -> tuple[bool, dict, list[dict]]:
    """Per-edge index divisibility with the cardinality bound.

    For edge uv with indices d_u <= d_v the edge passes when d_v = k * d_u and
    k <= |f(u)|.  Returns (verdict, k_map, violations); ``k_map`` maps each
    edge to an :class:`EdgeMultiplier` or None when the edge fails.
    """
    _require_total(G, f)
    shape = {}
    violations = []
    for v in G.vertices:
        desc = ap_of(f[v])
        shape[v] = (desc.diff, desc.length) if desc else None
    k_map: dict[tuple[str, str], Optional[EdgeMultiplier]] = {}
    for u, v in G.edges:
        k_map[(u, v)] = None
        bad = False
        for w in (u, v):
            if shape[w] is None:
                violations.append(_violation("non-ap-vertex", vertex=w, label=list(f[w]), edge=[u, v]))
                bad = True
            elif shape[w][0] is None:
                violations.append(_violation("undefined-index", vertex=w, label=list(f[w]), edge=[u, v]))
                bad = True
        if bad:
            continue
        mult, viol = edge_multiplier(u, shape[u], v, shape[v])
        if viol:
            violations.append(viol)
        else:
            k_map[(u, v)] = mult
    return not violations, k_map, violations


def edge_multiplier(u: str, su: tuple[int, int], v: str, sv: tuple[int, int]):
    """Apply the adjacency condition to two (index, cardinality) shapes.

    Returns (EdgeMultiplier or None, violation or None).  Equal indices are
    oriented from the lexicographically smaller name.
    """
    (du, nu), (dv, nv) = su, sv
    if du > dv or (du == dv and v < u):
        u, v, du, nu, dv, nv = v, u, dv, nv, du, nu
    k = index_multiplier(du, dv)
    if k is None:
        return None, _violation("divisibility", edge=[u, v], indices=[du, dv],
                                message=f"index of {v} ({dv}) is not a multiple of index of {u} ({du})")
    if k > nu:
        return None, _violation("cardinality-bound", edge=[u, v], k=k, cardinality=nu,
                                message=f"multiplier {k} exceeds cardinality {nu}")
    return EdgeMultiplier(u, k), None


@dataclass
class ClassificationReport:
    is_iasi: bool
    is_arithmetic: bool
    is_semi_arithmetic: bool
    is_isoarithmetic: bool
    is_biarithmetic: bool
    identical_biarithmetic_k: Optional[int]
    k_map: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def satisfies(self, cls: str, k: Optional[int] = None) -> bool:
        if cls == "iasi":
            return self.is_iasi
        if cls == "arithmetic":
            return self.is_arithmetic
        if cls == "semi-arithmetic":
            return self.is_semi_arithmetic
        if cls == "isoarithmetic":
            return self.is_isoarithmetic
        if cls == "biarithmetic":
            return self.is_biarithmetic
        if cls == "identical-biarithmetic":
            got = self.identical_biarithmetic_k
            return got is not None and (k is None or got == k)
        raise ValueError(f"unknown class {cls!r}; expected one of {', '.join(CLASSES)}")

    def to_json(self) -> dict:
        return {
            "is_iasi": self.is_iasi,
            "is_arithmetic": self.is_arithmetic,
            "is_semi_arithmetic": self.is_semi_arithmetic,
            "is_isoarithmetic": self.is_isoarithmetic,
            "is_biarithmetic": self.is_biarithmetic,
            "identical_biarithmetic_k": self.identical_biarithmetic_k,
            "k_map": [
                {"edge": list(e), "base": m.base if m else None, "k": m.k if m else None}
                for e, m in self.k_map.items()
            ],
            "violations": self.violations,
            "notes": self.notes,
        }


def classify(G: Graph, f: Labeling) -> ClassificationReport:
    _require_total(G, f)
    iasi, violations = verify_iasi(G, f)
    notes = []

    vertex_ap = {v: ap_of(f[v]) for v in G.vertices}
    all_vertex_ap = True
    for v, desc in vertex_ap.items():
        if desc is None:
            all_vertex_ap = False
            violations.append(_violation("non-ap-vertex", vertex=v, label=list(f[v])))
    incident_singletons = [v for v in G.vertices if G.degree(v) and vertex_ap[v] and vertex_ap[v].length == 1]
    for v in incident_singletons:
        violations.append(_violation("undefined-index", vertex=v, label=list(f[v]),
                                     message="singleton label has no deterministic index"))
    if any(vertex_ap[v] and vertex_ap[v].length == 1 for v in G.vertices):
        notes.append("singleton labels present; their deterministic index is undefined")
    if any(vertex_ap[v] and vertex_ap[v].length == 2 for v in G.vertices):
        notes.append("two-element labels are treated as APs")

    all_edge_ap = True
    edge_diffs = set()
    for e, lab in edge_labels(G, f).items():
        desc = ap_of(lab)
        if desc is None:
            all_edge_ap = False
            violations.append(_violation("non-ap-edge", edge=list(e), label=list(lab)))
        elif desc.diff is not None:
            edge_diffs.add(desc.diff)

    arithmetic = iasi and all_vertex_ap and all_edge_ap and not incident_singletons
    semi = iasi and all_vertex_ap and not all_edge_ap

    k_map: dict = {}
    cond_ok = False
    if all_vertex_ap and not incident_singletons:
        cond_ok, k_map, cond_violations = check_adjacency_condition(G, f)
        violations.extend(cond_violations)

    iso = False
    if arithmetic:
        vertex_diffs = {desc.diff for desc in vertex_ap.values()}
        diffs = vertex_diffs | edge_diffs
        iso = None not in vertex_diffs and len(diffs) <= 1
        if not iso:
            violations.append(_violation("mixed-index", indices=sorted(d for d in diffs if d is not None),
                                         message="labels do not share one common difference"))

    biarithmetic = arithmetic and cond_ok and all(m is not None for m in k_map.values())

    identical_k = None
    if biarithmetic:
        ks = {m.k for m in k_map.values()}
        if len(ks) == 1 and min(ks) >= 2:
            identical_k = ks.pop()
        elif not ks:
            violations.append(_violation("no-edges", message="no edge fixes a multiplier"))
        elif len(ks) > 1:
            violations.append(_violation("multiplier-mismatch", multipliers=sorted(ks)))
        else:
            violations.append(_violation("multiplier-one",
                                         message="every edge has multiplier 1; identical biarithmetic needs k >= 2"))

    return ClassificationReport(
        is_iasi=iasi,
        is_arithmetic=arithmetic,
        is_semi_arithmetic=semi,
        is_isoarithmetic=iso,
        is_biarithmetic=biarithmetic,
        identical_biarithmetic_k=identical_k,
        k_map=k_map,
        violations=violations,
        notes=notes,
    )


def check_uniform(f: Labeling, l: int) -> bool:
    """True when every vertex label has exactly ``l`` elements."""
    return all(len(lab) == l for lab in f.values())
