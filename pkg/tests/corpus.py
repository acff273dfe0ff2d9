"""Fixture graphs and seeded arithmetic labelings shared by the tests."""

import random

from iasi.graph import complete_graph, cycle_graph, is_bipartite, path_graph, star_graph
from iasi.labeling import classify
from iasi.numeric_sets import make_ap

DEFAULT_SEED = 20261016


def fixture_graphs():
    graphs = {}
    for n in range(2, 6):
        graphs[f"P{n}"] = path_graph(n)
    for n in range(3, 7):
        graphs[f"C{n}"] = cycle_graph(n)
    for n in range(1, 5):
        graphs[f"K1,{n}"] = star_graph(n)
    for n in range(2, 5):
        graphs[f"K{n}"] = complete_graph(n)
    return graphs


def random_labeling(G, rng, shape_of, max_first=60, tries=500, cls="arithmetic", k=None):
    """Draw first terms until the labeling lands in ``cls``; shapes come from ``shape_of(v)``."""
    shapes = {v: shape_of(v) for v in G.vertices}
    for _ in range(tries):
        f = {v: make_ap(rng.randrange(max_first), *shapes[v]) for v in G.vertices}
        if classify(G, f).satisfies(cls, k):
            return f
    raise RuntimeError(f"no {cls} labeling drawn for {G}")


def iso_labeling(G, rng, d, n=3):
    return random_labeling(G, rng, lambda v: (d, n), cls="isoarithmetic")


def mixed_labeling(G, rng):
    """Indices drawn from {1, 2} with length 3, so every edge meets the bound."""
    choice = {v: rng.choice((1, 2)) for v in G.vertices}
    return random_labeling(G, rng, lambda v: (choice[v], 3))


def identical_labeling(G, rng, k=2):
    x, _ = is_bipartite(G).parts
    xs = set(x)
    return random_labeling(G, rng, lambda v: (1, k) if v in xs else (k, 2), cls="identical-biarithmetic", k=k)


def labeled_fixtures(seed=DEFAULT_SEED):
    """(name, graph, labeling, kind) for every fixture graph and labeling family."""
    rng = random.Random(seed)
    out = []
    for name, G in fixture_graphs().items():
        out.append((name, G, iso_labeling(G, rng, 1, 2), "iso-d1"))
        out.append((name, G, iso_labeling(G, rng, 3, 3), "iso-d3"))
        out.append((name, G, mixed_labeling(G, rng), "mixed"))
        if is_bipartite(G):
            out.append((name, G, identical_labeling(G, rng), "identical"))
    return out
