"""Disc graphs of the genus-2 handlebody, relative to a curve inventory.

Every graph here only sees curves in the inventory, so missing witnesses can
delete edges but never add them: distances are upper bounds for the true
graphs at the stated ``max_len``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache

from .electrify import PeripheralFamily
from .graph import MetricGraph
from .surface import DiscClass, Inventory, SurfaceCurve, build_inventory, canonical_form

MAX_LEVEL = 3  # components of a pants decomposition in genus 2
DG_LEVEL = "DG"


class DiscGraphError(ValueError):
    pass


class SearchExhausted(DiscGraphError):
    """No surgery candidate exists within the searched curves."""


@dataclass
class DiscGraphInstance:
    inventory: Inventory
    level: int | str
    graph: MetricGraph
    discs: tuple[DiscClass, ...]
    witnesses: dict[tuple[int, int], object] = field(default_factory=dict)

    def index(self, disc) -> int:
        word = disc.word if isinstance(disc, DiscClass) else str(disc)
        for i, d in enumerate(self.discs):
            if d.word == word:
                return i
        raise DiscGraphError(f"{word} is not a vertex of this instance")

    def edge_set(self) -> set[tuple[str, str]]:
        return {(self.discs[u].word, self.discs[v].word) for u, v in self.graph.edges}

    def as_dict(self) -> dict:
        edges = []
        for u, v in self.graph.edges:
            w = self.witnesses[(u, v)]
            edges.append({"u": u, "v": v, "witness": w if isinstance(w, str) else list(w)})
        return {
            "level": self.level,
            "inventory": {"max_len": self.inventory.max_len, "fingerprint": self.inventory.fingerprint()},
            "vertices": [d.word for d in self.discs],
            "edges": edges,
            "fingerprint": self.graph.fingerprint(),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    def to_dot(self) -> str:
        return self.graph.to_dot(name=f"EDG_{self.level}")


def _check_level(k):
    if k == DG_LEVEL:
        return k
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= MAX_LEVEL:
        raise DiscGraphError(f"level must be 1..{MAX_LEVEL} or {DG_LEVEL!r}, got {k!r}")
    return k


def _clique(cands, k, inv):
    """Lexicographically least k pairwise-disjoint curves from a shortlex-sorted list."""
    chosen: list[SurfaceCurve] = []

    def rec(start):
        if len(chosen) == k:
            return True
        for i in range(start, len(cands)):
            c = cands[i]
            if all(inv.iota(c, o) == 0 for o in chosen):
                chosen.append(c)
                if rec(i + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if rec(0) else None


def build_disc_graph(inv: Inventory, k, workers: int = 1) -> DiscGraphInstance:
    """Level-k graph on the inventory discs.

    Two discs are joined when they are disjoint (witness ``"disjoint"``) or,
    for numeric k, when some k pairwise-disjoint inventory curves all miss
    both of them (the lex-least such multicurve is the witness).  Level
    ``"DG"`` keeps only disjointness.
    """
    k = _check_level(k)
    discs = tuple(sorted(inv.discs))
    curves = tuple(sorted(inv.curves))
    inv.preload(itertools.combinations(discs, 2), workers)
    if k != DG_LEVEL:
        inv.preload([(d, c) for d in discs for c in curves], workers)
    free = {} if k == DG_LEVEL else {d: [c for c in curves if inv.iota(d, c) == 0] for d in discs}
    edges, witnesses = [], {}
    for i, j in itertools.combinations(range(len(discs)), 2):
        a, b = discs[i], discs[j]
        if inv.iota(a, b) == 0:
            wit = "disjoint"
        elif k == DG_LEVEL:
            continue
        else:
            cands = [c for c in free[a] if inv.iota(b, c) == 0]
            inv.preload(itertools.combinations(cands, 2), 1)
            wit = _clique(cands, k, inv)
            if wit is None:
                continue
            wit = tuple(c.word for c in wit)
        edges.append((i, j))
        witnesses[(i, j)] = wit
    labels = {i: d.word for i, d in enumerate(discs)}
    g = MetricGraph(len(discs), edges, labels)
    return DiscGraphInstance(inv, k, g, discs, witnesses)


def disc_graph(inv: Inventory, workers: int = 1) -> DiscGraphInstance:
    """The disc graph: edges join disjoint discs."""
    return build_disc_graph(inv, DG_LEVEL, workers)


def validate_witnesses(inst: DiscGraphInstance) -> list[tuple[int, int]]:
    """Edges whose witness fails the disjointness and distinctness rules."""
    inv = inst.inventory
    bad = []
    for (u, v), w in sorted(inst.witnesses.items()):
        a, b = inst.discs[u], inst.discs[v]
        if w == "disjoint":
            ok = inv.iota(a, b) == 0
        else:
            cs = [SurfaceCurve(x) for x in w]
            ok = (len(set(w)) == len(w) >= inst.level
                  and all(inv.iota(x, y) == 0 for x, y in itertools.combinations(cs, 2))
                  and all(inv.iota(c, a) == 0 and inv.iota(c, b) == 0 for c in cs))
        if not ok:
            bad.append((u, v))
    return bad


# ---------------------------------------------------------------------------
# surgery


@dataclass(frozen=True)
class SurgeryStep:
    source: DiscClass
    target: DiscClass
    drop: int


def _as_disc(x, inv) -> DiscClass:
    if isinstance(x, DiscClass):
        return x
    return DiscClass(canonical_form(x, inv.model))


@lru_cache(maxsize=4)
def _larger_inventory(max_len, eps, tight, dps):
    from .surface import FuchsianModel

    return build_inventory(max_len, FuchsianModel(eps=eps, tight=tight, dps=dps))


def _candidate_discs(inv: Inventory, extend: int) -> tuple[DiscClass, ...]:
    if extend <= 0:
        return tuple(sorted(inv.discs))
    m = inv.model
    big = _larger_inventory(inv.max_len + extend, m.eps, m.tight, m.dps)
    return tuple(sorted(set(inv.discs) | set(big.discs)))


def surgery_step(D, E, inv: Inventory, extend: int = 0) -> SurgeryStep:
    """A disc disjoint from D that meets E at least twice less often than D does.

    Candidates are the inventory discs (plus discs up to ``extend`` letters
    longer).  The one with least intersection with E wins, ties broken by
    shortlex order of the boundary word.
    """
    D, E = _as_disc(D, inv), _as_disc(E, inv)
    i0 = inv.iota(D, E)
    if i0 == 0:
        raise DiscGraphError(f"{D.word} and {E.word} are already disjoint")
    best = None
    for c in _candidate_discs(inv, extend):
        if c == D or inv.iota(D, c) != 0:
            continue
        ie = inv.iota(E, c)
        if ie <= i0 - 2 and (best is None or ie < best[0]):
            best = (ie, c)
    if best is None:
        raise SearchExhausted(f"no surgery candidate for ({D.word}, {E.word}) "
                              f"within inventory max_len={inv.max_len}+{max(extend, 0)}")
    return SurgeryStep(D, best[1], i0 - best[0])


def surgery_path(D, E, inv: Inventory, extend: int = 0) -> tuple[DiscClass, ...]:
    """Consecutively disjoint discs from D to E built by repeated surgery."""
    D, E = _as_disc(D, inv), _as_disc(E, inv)
    path = [D]
    cur = D
    while cur != E and inv.iota(cur, E) > 0:
        cur = surgery_step(cur, E, inv, extend).target
        path.append(cur)
    if cur != E:
        path.append(E)
    return tuple(path)


# ---------------------------------------------------------------------------
# hand-off to the electrification engine


def _level_rank(level):
    return MAX_LEVEL if level == DG_LEVEL else level


def export_to_engine(instance: DiscGraphInstance, coarser: DiscGraphInstance) -> tuple[MetricGraph, PeripheralFamily]:
    """The finer graph with one peripheral member per coarser-only witness.

    For every edge present only in the coarser instance, its witness
    multicurve spans the discs missing all of its components; each connected
    piece of that set in the finer graph becomes a member.
    """
    if [d.word for d in instance.discs] != [d.word for d in coarser.discs]:
        raise DiscGraphError("instances have different vertex sets")
    if _level_rank(coarser.level) != _level_rank(instance.level) - 1:
        raise DiscGraphError(f"coarser level {coarser.level} does not sit below {instance.level}")
    g = instance.graph
    inv = instance.inventory
    finer = set(g.edges)
    multicurves = sorted({coarser.witnesses[e] for e in coarser.graph.edges
                          if e not in finer and coarser.witnesses[e] != "disjoint"})
    members: dict[str, list[int]] = {}
    seen: set[tuple[int, ...]] = set()
    for alpha in multicurves:
        cs = [SurfaceCurve(w) for w in alpha]
        span = [i for i, d in enumerate(instance.discs) if all(inv.iota(d, c) == 0 for c in cs)]
        sub, glob = g.induced(span)
        for n, comp in enumerate(sub.components()):
            key = tuple(glob[i] for i in comp)
            if key in seen:
                continue
            seen.add(key)
            members[f"{'+'.join(alpha)}#{n}"] = list(key)
    return g, PeripheralFamily(g, members)


def tower(inv: Inventory, workers: int = 1) -> dict:
    """All levels 1..3 and the disc graph over one inventory."""
    out = {k: build_disc_graph(inv, k, workers) for k in range(1, MAX_LEVEL + 1)}
    out[DG_LEVEL] = disc_graph(inv, workers)
    return out

