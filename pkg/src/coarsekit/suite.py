"""Fixed regression instances for the electrification engine.

Every instance is built deterministically (seeded where random) and comes
with the search budget under which its penetration checks are exhaustive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .electrify import Budget, ConedGraph, PeripheralFamily, cone_off
from .graph import MetricGraph, build_graph


@dataclass(frozen=True)
class SuiteInstance:
    name: str
    coned: ConedGraph
    budget: Budget
    center: int = 0
    radius: float = float("inf")

    def budget_for(self, L) -> Budget:
        return FULL if L <= 1 else self.budget

    @property
    def base(self) -> MetricGraph:
        return self.coned.base

    @property
    def family(self) -> PeripheralFamily:
        return self.coned.family


# all endpoint pairs at L = 1; at larger L only pairs within coned distance 3
FULL = Budget(max_paths=200_000)
BUDGET = Budget(max_paths=200_000, max_distance=3)


def cycle(n):
    return build_graph([(i, (i + 1) % n) for i in range(n)])


def _cone(g, members):
    return cone_off(g, PeripheralFamily(g, members))


def _random_tree(n, seed):
    rng = random.Random(seed)
    return [(i, rng.randrange(max(0, i - 4), i)) for i in range(1, n)]


def _tree_paths():
    # a spine 0..9 with two legs hanging off it; two disjoint coned paths
    edges = [(i, i + 1) for i in range(9)]
    edges += [(2, 10), (10, 11), (11, 12), (12, 13), (6, 14), (14, 15), (15, 16), (16, 17),
              (17, 18), (4, 19)]
    g = build_graph(edges)
    return _cone(g, {"spine": range(1, 8), "leg": [14, 15, 16, 17, 18]})


def _grid_rows():
    w, h = 4, 4
    edges = []
    for r in range(h):
        for c in range(w):
            v = r * w + c
            if c + 1 < w:
                edges.append((v, v + 1))
            if r + 1 < h:
                edges.append((v, v + w))
    g = build_graph(edges)
    return _cone(g, {f"row{r}": range(r * w, r * w + w) for r in range(0, h, 2)})


def _necklace():
    # four hexagons in a chain, consecutive hexagons joined by an edge
    edges = []
    for k in range(4):
        off = 6 * k
        edges += [(off + i, off + (i + 1) % 6) for i in range(6)]
        if k:
            edges.append((off - 3, off))
    g = build_graph(edges)
    return _cone(g, {f"hex{k}": range(6 * k, 6 * k + 6) for k in range(4)})


def _random_graph():
    rng = random.Random(7)
    n = 24
    edges = set((min(a, b), max(a, b)) for a, b in _random_tree(n, 7))
    while len(edges) < n + 3:
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    g = build_graph(sorted(edges))
    members = {}
    for i, c in enumerate((0, 11, 19)):
        members[f"ball{i}"] = g.ball(c, 1)
    return _cone(g, members)


def _random_tree_members():
    g = build_graph(_random_tree(30, 3))
    members = {}
    for i, c in enumerate((5, 17, 26)):
        members[f"sub{i}"] = g.ball(c, 2)
    return _cone(g, members)


def _theta():
    # two poles joined by three arcs of length 4
    edges = []
    nxt = 2
    for _ in range(3):
        prev = 0
        for _ in range(3):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    g = build_graph(edges)
    return _cone(g, {"arc": [0, 2, 3, 4, 1]})


def instances() -> list[SuiteInstance]:
    c12 = cycle(12)
    c16 = cycle(16)
    c20 = cycle(20)
    out = [
        SuiteInstance("tree_paths", _tree_paths(), BUDGET),
        SuiteInstance("c12_arc", _cone(c12, {"H": range(7)}), BUDGET),
        SuiteInstance("c20_arc", _cone(c20, {"H": range(11)}), BUDGET),
        SuiteInstance("c12_three_arcs",
                      _cone(c12, {"A": range(0, 5), "B": range(4, 9), "C": [8, 9, 10, 11, 0]}),
                      BUDGET),
        SuiteInstance("c16_overlap", _cone(c16, {"A": range(0, 9), "B": range(6, 15)}),
                      BUDGET),
        SuiteInstance("grid_rows", _grid_rows(), BUDGET),
        SuiteInstance("necklace", _necklace(), BUDGET),
        SuiteInstance("random_graph", _random_graph(), BUDGET),
        SuiteInstance("random_tree", _random_tree_members(), BUDGET),
        SuiteInstance("theta", _theta(), BUDGET),
    ]
    return out


def by_name(name: str) -> SuiteInstance:
    for inst in instances():
        if inst.name == name:
            return inst
    raise KeyError(name)
