"""Electrification of a graph along a peripheral family, and the quantities
that control it: efficient paths, enlargements, wideness, r-boundedness,
bounded penetration and fellow travelling of enlargements.

Path searches enumerate every efficient L-quasi-geodesic between the
endpoint pairs allowed by a :class:`Budget`.  Each pair is independent, so
pairs are spread over workers and the per-pair records are merged in input
order; results never depend on the worker count.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import kernels
from .graph import GraphError, MetricGraph, geodesic, measure_qg_constant
from .parallel import parallel_map

INF = math.inf


class FamilyError(GraphError):
    pass


class MalformedPathError(GraphError):
    pass


# ---------------------------------------------------------------------------
# families and coned graphs


class PeripheralFamily:
    """Named induced connected subgraphs of a host graph, in insertion order."""

    def __init__(self, host: MetricGraph, members: Mapping[str, Iterable[int]]):
        self.host = host
        self.members: dict[str, frozenset[int]] = {}
        self._induced: dict[str, tuple[MetricGraph, list[int]]] = {}
        self._local: dict[str, dict[int, int]] = {}
        for name, verts in members.items():
            name = str(name)
            if name in self.members:
                raise FamilyError(f"duplicate member name {name!r}")
            vs = frozenset(int(v) for v in verts)
            if not vs:
                raise FamilyError(f"member {name!r} is empty")
            bad = [v for v in vs if not 0 <= v < host.n]
            if bad:
                raise FamilyError(f"member {name!r} has unknown vertices {sorted(bad)}")
            sub, glob = host.induced(vs)
            if not sub.is_connected():
                raise FamilyError(f"member {name!r} does not induce a connected subgraph")
            self.members[name] = vs
            self._induced[name] = (sub, glob)
            self._local[name] = {v: i for i, v in enumerate(glob)}

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def names(self) -> list[str]:
        return list(self.members)

    def induced(self, name: str) -> tuple[MetricGraph, list[int]]:
        return self._induced[name]

    def intrinsic_distance(self, name: str, u: int, v: int) -> int:
        sub, glob = self._induced[name]
        local = self._local[name]
        if u not in local or v not in local:
            raise MalformedPathError(f"vertices {u}, {v} are not both in member {name!r}")
        return int(sub.distance_matrix()[local[u], local[v]])

    def as_dict(self) -> dict:
        # a list, so that key sorting never reorders the cone vertices
        return {"members": [{"name": k, "vertices": sorted(v)} for k, v in self.members.items()]}

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    @classmethod
    def from_dict(cls, host: MetricGraph, data: dict) -> "PeripheralFamily":
        members = data.get("members", data) if isinstance(data, dict) else data
        if isinstance(members, dict):
            return cls(host, {str(k): v for k, v in members.items()})
        out: dict[str, list[int]] = {}
        for m in members:
            name = str(m["name"])
            if name in out:
                raise FamilyError(f"duplicate member name {name!r}")
            out[name] = m["vertices"]
        return cls(host, out)

    @classmethod
    def from_json(cls, host: MetricGraph, text: str) -> "PeripheralFamily":
        return cls.from_dict(host, json.loads(text))


class ConedGraph:
    """Base graph plus one cone vertex per family member.

    Cone vertex ids follow the base ids in the family's order.
    """

    def __init__(self, base: MetricGraph, family: PeripheralFamily):
        if family.host is not base and family.host != base:
            raise FamilyError("family is defined on a different host graph")
        self.base = base
        self.family = family
        self.cone_vertices: dict[str, int] = {}
        self.cone_names: dict[int, str] = {}
        edges = list(base.edges)
        for i, name in enumerate(family.names()):
            vc = base.n + i
            self.cone_vertices[name] = vc
            self.cone_names[vc] = name
            edges.extend((x, vc) for x in sorted(family.members[name]))
        labels = dict(base.labels)
        for name, vc in self.cone_vertices.items():
            labels[vc] = f"v[{name}]"
        self.graph = MetricGraph(base.n + len(family), edges, labels if base.labels or family else None)
        self.is_cone = np.zeros(self.graph.n, dtype=np.uint8)
        self.is_cone[base.n:] = 1
        self.is_cone.setflags(write=False)

    @property
    def n_base(self) -> int:
        return self.base.n

    def is_cone_vertex(self, v: int) -> bool:
        return v >= self.base.n

    def fingerprint(self) -> str:
        return self.graph.fingerprint()

    def as_dict(self) -> dict:
        return {
            "base": self.base.as_dict(),
            "family": self.family.as_dict(),
            "cone_vertices": dict(self.cone_vertices),
            "coned": {"vertices": self.graph.n, "edges": [list(e) for e in self.graph.edges]},
            "fingerprints": {"base": self.base.fingerprint(), "coned": self.graph.fingerprint()},
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "ConedGraph":
        base = MetricGraph.from_dict(data["base"])
        cg = cone_off(base, PeripheralFamily.from_dict(base, data["family"]))
        stored = data.get("fingerprints", {}).get("coned")
        if stored and stored != cg.fingerprint():
            raise GraphError("coned graph does not match its base and family")
        return cg

    def to_dot(self) -> str:
        shapes = {vc: "diamond" for vc in self.cone_names}
        return self.graph.to_dot("EG", shapes)


def cone_off(g: MetricGraph, fam: PeripheralFamily) -> ConedGraph:
    return ConedGraph(g, fam)


# ---------------------------------------------------------------------------
# efficient paths and enlargements


def is_efficient(cg: ConedGraph, p: Sequence[int]) -> bool:
    cones = [v for v in p if cg.is_cone_vertex(v)]
    return len(cones) == len(set(cones))


def make_efficient(cg: ConedGraph, p: Sequence[int]) -> tuple[int, ...]:
    """Excise the stretch between the first and last visit of each repeated cone vertex."""
    p = list(p)
    while True:
        first: dict[int, int] = {}
        cut = None
        for i, v in enumerate(p):
            if cg.is_cone_vertex(v):
                if v in first:
                    cut = v
                    break
                first[v] = i
        if cut is None:
            return tuple(p)
        i = p.index(cut)
        j = len(p) - 1 - p[::-1].index(cut)
        p = p[:i + 1] + p[j + 1:]


def _passages(cg: ConedGraph, p: Sequence[int]):
    """(position, name) for each cone vertex strictly inside the path."""
    out = []
    for k, v in enumerate(p):
        if cg.is_cone_vertex(v):
            if k == 0 or k == len(p) - 1:
                raise MalformedPathError(f"cone vertex {v} at an endpoint of the path")
            out.append((k, cg.cone_names[v]))
    return out


def enlarge(cg: ConedGraph, p: Sequence[int]) -> tuple[int, ...]:
    """Replace every cone passage by the lexicographically least geodesic inside its member."""
    p = tuple(int(v) for v in p)
    if not is_efficient(cg, p):
        raise MalformedPathError("enlargement needs an efficient path")
    out: list[int] = []
    last = 0
    for k, name in _passages(cg, p):
        a, b = p[k - 1], p[k + 1]
        members = cg.family.members[name]
        if a not in members or b not in members:
            raise MalformedPathError(f"passage through {name!r} at {k} does not enter and leave the member")
        sub, glob = cg.family.induced(name)
        local = geodesic(sub, glob.index(a), glob.index(b))
        out.extend(p[last:k - 1])
        out.extend(glob[i] for i in local[:-1])
        last = k + 1
    out.extend(p[last:])
    return tuple(out)


def detect_wide(cg: ConedGraph, p: Sequence[int], R) -> list[tuple[str, int]]:
    """Cone passages whose entry and exit are at intrinsic distance >= R."""
    out = []
    for k, name in _passages(cg, p):
        if cg.family.intrinsic_distance(name, p[k - 1], p[k + 1]) >= R:
            out.append((name, k))
    return out


@dataclass(frozen=True)
class Boundedness:
    r: float
    pair: tuple[str, str] | None = None
    infinite: tuple[tuple[str, str], ...] = ()


def check_r_bounded(fam: PeripheralFamily) -> Boundedness:
    """Least r with diam(H_c & H_d) <= r in both intrinsic metrics, over c != d."""
    names = fam.names()
    r = 0
    worst = None
    infinite = []
    for i, c in enumerate(names):
        for d in names[i + 1:]:
            common = sorted(fam.members[c] & fam.members[d])
            if len(common) < 2:
                continue
            diam = 0
            for name in (c, d):
                sub, glob = fam.induced(name)
                idx = np.searchsorted(glob, common)
                block = sub.distance_matrix()[np.ix_(idx, idx)]
                if (block < 0).any():
                    infinite.append((c, d))
                    break
                diam = max(diam, int(block.max()))
            if diam > r:
                r, worst = diam, (c, d)
    if infinite:
        return Boundedness(INF, worst, tuple(infinite))
    return Boundedness(r, worst)


# ---------------------------------------------------------------------------
# quasi-geodesic enumeration


def as_constant(L) -> Fraction:
    f = Fraction(L).limit_denominator(10_000) if isinstance(L, float) else Fraction(L)
    if f < 1:
        raise ValueError("the quasi-geodesic constant must be >= 1")
    return f


def gap_table(L, max_d: int) -> np.ndarray:
    """gap[d] = floor(L * (d + L)): the largest index gap allowed at distance d."""
    L = as_constant(L)
    return np.array([math.floor(L * (d + L)) for d in range(max_d + 2)], dtype=np.int64)


def is_quasi_geodesic(dm: np.ndarray, p: Sequence[int], L) -> bool:
    L = as_constant(L)
    for s in range(len(p)):
        for t in range(s + 1, len(p)):
            if Fraction(t - s) / L - L > int(dm[p[s], p[t]]):
                return False
    return True


@dataclass(frozen=True)
class Budget:
    """Bounds for exhaustive path searches.

    Endpoint pairs are the unordered base pairs ``x < y`` with both ends in
    ``vertices`` (default: all base vertices) and coned distance at most
    ``max_distance``.  ``max_paths`` caps the paths kept per pair; hitting it
    makes a search partial.
    """

    max_paths: int = 20_000
    max_distance: int | None = None
    vertices: tuple[int, ...] | None = None

    def pairs(self, cg: ConedGraph) -> list[tuple[int, int]]:
        dm = cg.graph.distance_matrix()
        vs = sorted(self.vertices) if self.vertices is not None else range(cg.n_base)
        vs = [v for v in vs if v < cg.n_base]
        out = []
        for i, x in enumerate(vs):
            for y in vs[i + 1:]:
                d = dm[x, y]
                if d < 0:
                    continue
                if self.max_distance is not None and d > self.max_distance:
                    continue
                out.append((x, y))
        return out

    def as_dict(self) -> dict:
        return {"max_paths": self.max_paths, "max_distance": self.max_distance,
                "vertices": list(self.vertices) if self.vertices is not None else None}


def qg_paths(cg: ConedGraph, x: int, y: int, L, cap: int = 20_000):
    """Efficient L-quasi-geodesics from x to y in the coned graph; (paths, truncated)."""
    if cg.graph.distance_matrix()[x, y] < 0:
        return [], False
    flat, offsets, truncated = _raw_paths(cg, x, y, L, cap)
    return [_path_at(flat, offsets, i) for i in range(len(offsets) - 1)], bool(truncated)


# Each endpoint pair is summarised by its distinct cone passages
# (name -> {(entry, exit): (width, example path)}) and, per cone, one path
# that avoids it.  Every check below only needs this summary.


def _raw_paths(cg: ConedGraph, x: int, y: int, L, cap: int):
    g = cg.graph
    dm = g.distance_matrix()
    gaps = gap_table(L, int(dm.max()))
    return kernels.qg_paths(g.indptr, g.indices, dm, int(x), int(y), gaps, cg.is_cone, int(cap))


def _path_at(flat, offsets, i):
    return tuple(int(v) for v in flat[offsets[i]:offsets[i + 1]])


def _cone_positions(cg, flat, offsets):
    lengths = np.diff(offsets)
    pid = np.repeat(np.arange(len(lengths)), lengths)
    pos = np.flatnonzero(flat >= cg.n_base)
    return pid, pos


def _summarise(cg: ConedGraph, flat, offsets):
    fam = cg.family
    n_paths = len(offsets) - 1
    pid, pos = _cone_positions(cg, flat, offsets)
    passages: dict[str, dict] = {}
    avoid = {}
    if pos.size == 0:
        return passages, avoid
    n = cg.graph.n
    cone, a, b = flat[pos], flat[pos - 1], flat[pos + 1]
    keys = (cone * n + a) * n + b
    uniq, first = np.unique(keys, return_index=True)
    for key, i in zip(uniq, first):
        c, a_, b_ = int(cone[i]), int(a[i]), int(b[i])
        name = cg.cone_names[c]
        w = fam.intrinsic_distance(name, a_, b_)
        passages.setdefault(name, {})[(a_, b_)] = (w, _path_at(flat, offsets, int(pid[pos[i]])))
    for c in np.unique(cone):
        owners = pid[pos[cone == c]]
        if owners.size < n_paths:
            has = np.zeros(n_paths, dtype=bool)
            has[owners] = True
            avoid[cg.cone_names[int(c)]] = _path_at(flat, offsets, int(np.argmin(has)))
    # deterministic order of members and passages
    passages = {k: dict(sorted(v.items())) for k, v in sorted(passages.items())}
    return passages, dict(sorted(avoid.items()))


def _member_geodesic(cg, name, a, b):
    sub, glob = cg.family.induced(name)
    local = cg.family._local[name]
    return [glob[i] for i in geodesic(sub, local[a], local[b])]


def _kappa(cg: ConedGraph, flat, offsets, base_dm):
    """Largest Hausdorff distance between enlargements, over distinct enlargement sets."""
    n_paths = len(offsets) - 1
    if n_paths < 2:
        return 0, None
    nb = cg.n_base
    words = (nb + 63) // 64
    pid, pos = _cone_positions(cg, flat, offsets)
    masks = np.zeros((n_paths, words), dtype=np.uint64)
    base = flat < nb
    for w in range(words):
        sel = base & (flat // 64 == w)
        bits = np.where(sel, np.left_shift(np.uint64(1), (flat % 64).astype(np.uint64)), np.uint64(0))
        masks[:, w] = np.bitwise_or.reduceat(bits, offsets[:-1])
    if pos.size:
        n = cg.graph.n
        cone, a, b = flat[pos], flat[pos - 1], flat[pos + 1]
        keys = (cone * n + a) * n + b
        uniq, first, inverse = np.unique(keys, return_index=True, return_inverse=True)
        geo = np.zeros((len(uniq), words), dtype=np.uint64)
        for u, i in enumerate(first):
            for v in _member_geodesic(cg, cg.cone_names[int(cone[i])], int(a[i]), int(b[i])):
                geo[u, v // 64] |= np.uint64(1) << np.uint64(v % 64)
        np.bitwise_or.at(masks, pid[pos], geo[inverse.ravel()])
    distinct, rep = np.unique(masks, axis=0, return_index=True)
    if len(distinct) < 2:
        return 0, None
    member = np.zeros((len(distinct), nb), dtype=bool)
    for v in range(nb):
        member[:, v] = (distinct[:, v // 64] >> np.uint64(v % 64)) & np.uint64(1) == 1
    big = np.iinfo(np.int32).max
    dist = np.stack([np.where(member[i][None, :], base_dm, big).min(axis=1) for i in range(len(distinct))])
    best, pair = 0, None
    for i in range(len(distinct)):
        # largest distance from a point of set j to set i
        reach = np.where(member, dist[i], 0).max(axis=1)
        j = int(reach.argmax())
        if reach[j] > best:
            best, pair = int(reach[j]), (_path_at(flat, offsets, int(rep[j])), _path_at(flat, offsets, int(rep[i])))
    return best, pair


def _pair_records(args):
    cg, pairs, L, cap, want_kappa = args
    base_dm = cg.base.distance_matrix() if want_kappa else None
    out = []
    for x, y in pairs:
        flat, offsets, truncated = _raw_paths(cg, x, y, L, cap)
        passages, avoid = _summarise(cg, flat, offsets)
        rec = {"pair": (x, y), "count": len(offsets) - 1, "truncated": bool(truncated),
               "passages": passages, "avoid": avoid}
        if want_kappa:
            rec["kappa"], rec["kappa_witness"] = _kappa(cg, flat, offsets, base_dm)
        out.append(rec)
    return out


def _chunks(items, workers):
    if workers <= 1:
        return [items]
    size = max(1, -(-len(items) // (4 * workers)))
    return [items[i:i + size] for i in range(0, len(items), size)]


_RECORDS: dict = {}


def _collect(cg, L, budget, workers, want_kappa=False):
    from .parallel import resolve_workers

    key = (cg.fingerprint(), tuple(cg.family.names()), L, budget, want_kappa)
    hit = _RECORDS.get(key)
    if hit is not None:
        return hit
    pairs = budget.pairs(cg)
    w = resolve_workers(workers)
    results = parallel_map(_pair_records,
                           [(cg, c, L, budget.max_paths, want_kappa) for c in _chunks(pairs, w)], w)
    records = [rec for part in results for rec in part]
    if len(_RECORDS) >= 16:
        _RECORDS.pop(next(iter(_RECORDS)))
    _RECORDS[key] = records
    return records


def _shifts(cg, name, slot):
    """Pairwise max(entry shift, exit shift) inside a member, as {(e1, e2): value}."""
    fam = cg.family
    keys = list(slot)
    out = {}
    for e1 in keys:
        for e2 in keys:
            out[(e1, e2)] = max(fam.intrinsic_distance(name, e1[0], e2[0]),
                                fam.intrinsic_distance(name, e1[1], e2[1]))
    return out


def _pair_penetration(rec, cg):
    """Least p making the penetration condition hold for one endpoint pair, and its witness."""
    best, witness = 0, None
    for name, slot in rec["passages"].items():
        other = rec["avoid"].get(name)
        shifts = None if other is not None else _shifts(cg, name, slot)
        for e1, (w, p1) in slot.items():
            if other is not None:
                need, p2 = w + 1, other
            else:
                need, p2 = 0, p1
                for e2, (_, q) in slot.items():
                    v = min(shifts[(e1, e2)], w + 1)
                    if v > need:
                        need, p2 = v, q
            if need > best:
                best, witness = need, (p1, p2, name)
    return best, witness


@dataclass
class PenetrationConstant:
    L: Fraction
    p: int
    r: float
    exhaustive: bool
    evidence: dict = field(default_factory=dict)
    witness: tuple | None = None


def estimate_penetration(cg: ConedGraph, L, budget: Budget = Budget(), workers: int = 1) -> PenetrationConstant:
    """Least p (> 2r once the family is nonempty) satisfying the penetration condition."""
    L = as_constant(L)
    r = check_r_bounded(cg.family).r if len(cg.family) else 0
    records = _collect(cg, L, budget, workers)
    p, witness = 0, None
    for rec in records:
        q, wit = _pair_penetration(rec, cg)
        if q > p:
            p, witness = q, wit
    if len(cg.family):
        floor = 2 * r + 1 if r != INF else INF
        if floor > p:
            p = floor
    exhaustive = not any(rec["truncated"] for rec in records)
    evidence = {
        "pairs": len(records),
        "paths": sum(rec["count"] for rec in records),
        "truncated_pairs": sum(rec["truncated"] for rec in records),
        "budget": budget.as_dict(),
        "r": r,
    }
    return PenetrationConstant(L, p, r, exhaustive, evidence, witness)


@dataclass(frozen=True)
class Verdict:
    status: str  # PASS, FAIL or INCONCLUSIVE
    witness: tuple | None = None
    detail: str = ""
    evidence: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def __str__(self):
        return self.status


def _verdict(failure, records, what):
    truncated = sum(rec["truncated"] for rec in records)
    ev = {"pairs": len(records), "paths": sum(rec["count"] for rec in records),
          "truncated_pairs": truncated}
    if failure is not None:
        return Verdict("FAIL", failure, what, ev)
    if truncated:
        return Verdict("INCONCLUSIVE", None, f"{truncated} endpoint pairs hit the path cap", ev)
    return Verdict("PASS", None, "", ev)


def verify_bcp(cg: ConedGraph, L, p, budget: Budget = Budget(), workers: int = 1) -> Verdict:
    """Check the penetration condition for a given p over the budget."""
    L = as_constant(L)
    records = _collect(cg, L, budget, workers)
    for rec in records:
        for name, slot in rec["passages"].items():
            wide = [(e, q) for e, (w, q) in slot.items() if w >= p]
            if not wide:
                continue
            other = rec["avoid"].get(name)
            if other is not None:
                return _verdict((wide[0][1], other, name), records,
                                f"second path avoids the cone over {name}")
            shifts = _shifts(cg, name, slot)
            for e1, q1 in wide:
                for e2, (_, q2) in slot.items():
                    if shifts[(e1, e2)] > p:
                        return _verdict((q1, q2, name), records,
                                        f"entry or exit in {name} moves by more than {p}")
    return _verdict(None, records, "")


def wideness_transfer_check(cg: ConedGraph, L, budget: Budget = Budget(), p=None,
                            workers: int = 1) -> Verdict:
    """3p-wide for one path implies p-wide for every other path with the same endpoints."""
    L = as_constant(L)
    if p is None:
        p = estimate_penetration(cg, L, budget, workers).p
    records = _collect(cg, L, budget, workers)
    for rec in records:
        for name, slot in rec["passages"].items():
            wide = [q for w, q in slot.values() if w >= 3 * p]
            if not wide:
                continue
            other = rec["avoid"].get(name)
            narrow = [q for w, q in slot.values() if w < p]
            if other is not None or narrow:
                return _verdict((wide[0], other if other is not None else narrow[0], name), records,
                                f"{name} is {3 * p}-wide for one path but not {p}-wide for another")
    return _verdict(None, records, "")


@dataclass
class FellowTravel:
    L: Fraction
    kappa: int
    exhaustive: bool
    witness: tuple | None = None
    evidence: dict = field(default_factory=dict)


def enlargement_fellow_travel(cg: ConedGraph, L, budget: Budget = Budget(), workers: int = 1) -> FellowTravel:
    """Largest base-graph Hausdorff distance between enlargements of paths with common endpoints."""
    L = as_constant(L)
    records = _collect(cg, L, budget, workers, want_kappa=True)
    kappa, witness = 0, None
    for rec in records:
        if rec["kappa"] > kappa:
            kappa, witness = rec["kappa"], rec["kappa_witness"]
    exhaustive = not any(rec["truncated"] for rec in records)
    ev = {"pairs": len(records), "paths": sum(rec["count"] for rec in records),
          "budget": budget.as_dict()}
    return FellowTravel(L, kappa, exhaustive, witness, ev)


# ---------------------------------------------------------------------------
# enlargement quality


def enlargement_path(cg: ConedGraph, x: int, y: int) -> tuple[int, ...]:
    """Canonical enlargement of the lexicographically least coned geodesic."""
    return enlarge(cg, geodesic(cg.graph, x, y))


def enlargement_qg_constant(cg: ConedGraph, vertices: Iterable[int] | None = None,
                            cap: int = 10_000) -> tuple[float, tuple | None, bool]:
    """Largest quasi-geodesic constant of enlargements of all coned geodesics.

    Returns ``(K, worst_path, truncated)`` over base pairs drawn from ``vertices``.
    """
    from .graph import all_geodesics

    g = cg.graph
    base_dm = cg.base.distance_matrix()
    vs = sorted(vertices) if vertices is not None else list(range(cg.n_base))
    K, worst, truncated = 1.0, None, False
    for i, x in enumerate(vs):
        for y in vs[i + 1:]:
            if base_dm[x, y] < 0:
                continue
            gs = all_geodesics(g, x, y, cap)
            truncated |= gs.truncated
            for p in gs:
                q = measure_qg_constant(cg.base, enlarge(cg, p), base_dm)
                if q > K:
                    K, worst = q, p
    return K, worst, truncated


def thin_triangle_constant(cg: ConedGraph, center: int = 0, radius=INF) -> tuple[int, tuple | None]:
    """Least C with each enlargement side inside the C-neighbourhood of the other two.

    Taken over all vertex triples of a base ball; sides are canonical
    enlargements of coned geodesics.
    """
    base_dm = cg.base.distance_matrix()
    ball = [v for v in cg.base.ball(center, radius)]
    sides: dict[tuple[int, int], np.ndarray] = {}

    def side(a, b):
        key = (a, b) if a < b else (b, a)
        hit = sides.get(key)
        if hit is None:
            hit = np.asarray(sorted(set(enlargement_path(cg, *key))))
            sides[key] = hit
        return hit

    C, witness = 0, None
    for i, x in enumerate(ball):
        for j in range(i + 1, len(ball)):
            y = ball[j]
            for z in ball[j + 1:]:
                sxy, syz, sxz = side(x, y), side(y, z), side(x, z)
                for s, o1, o2 in ((sxy, syz, sxz), (syz, sxy, sxz), (sxz, sxy, syz)):
                    others = np.concatenate([o1, o2])
                    val = int(base_dm[np.ix_(s, others)].min(axis=1).max())
                    if val > C:
                        C, witness = val, (x, y, z)
    return C, witness


# ---------------------------------------------------------------------------
# towers


@dataclass
class Tower:
    base: MetricGraph
    stages: list[ConedGraph]
    comparisons: list[dict]


def build_tower(g: MetricGraph, families: Sequence[PeripheralFamily]) -> Tower:
    """Cone the original graph with each family in turn and compare consecutive stages."""
    stages = []
    for fam in families:
        if fam.host is not g and fam.host != g:
            raise FamilyError("tower family is defined on a different host graph")
        stages.append(cone_off(g, fam))
    comparisons = []
    prev = g.distance_matrix()
    for i, cg in enumerate(stages):
        cur = cg.graph.distance_matrix()[:g.n, :g.n]
        ok = (prev >= 0) & (cur >= 0)
        comparisons.append({
            "stage": i,
            "pairs": int(ok.sum()),
            "le_previous": int((cur[ok] <= prev[ok]).sum()),
            "ge_previous": int((cur[ok] >= prev[ok]).sum()),
            "max_drop": int((prev[ok] - cur[ok]).max()) if ok.any() else 0,
            "max_rise": int((cur[ok] - prev[ok]).max()) if ok.any() else 0,
        })
        prev = cur
    return Tower(g, stages, comparisons)
