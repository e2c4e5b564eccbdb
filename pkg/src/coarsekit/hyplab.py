"""Exact hyperbolicity, quasi-convexity and guessing-geodesics checks on balls."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Mapping

import numpy as np

from . import kernels
from .graph import GraphError, MetricGraph, all_geodesics, hausdorff_from_matrix
from .parallel import parallel_map, resolve_workers


def ball(g: MetricGraph, center: int, radius) -> list[int]:
    vs = g.ball(center, radius)
    if not vs:
        raise GraphError("empty ball")
    return vs


@dataclass
class HyperbolicityReport:
    delta_slim: int
    delta_4pt: float
    ball_center: int
    ball_radius: float
    triangle_count: int
    truncated: bool
    fingerprint: str = ""
    cap: int = 0
    witness: tuple | None = None

    def as_dict(self) -> dict:
        d = asdict(self)
        d["ball_radius"] = _num(self.ball_radius)
        d["witness"] = list(self.witness) if self.witness else None
        return d


def _num(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


def _geodesic_data(g, dm, a, b, cap):
    gs = all_geodesics(g, a, b, cap, dist_y=dm[b])
    # distance from every vertex to each geodesic
    dist = np.stack([dm[:, list(p)].min(axis=1) for p in gs.paths])
    return gs.paths, dist, gs.truncated


def _slim_rows(args):
    g, dm, verts, first, cap = args
    cache = {}

    def geo(a, b):
        key = (a, b)
        if key not in cache:
            cache[key] = _geodesic_data(g, dm, a, b, cap)
        return cache[key]

    best, witness, count, truncated = 0, None, 0, False
    for i in first:
        x = verts[i]
        for j in range(i + 1, len(verts)):
            y = verts[j]
            for z in verts[j + 1:]:
                sides = (geo(x, y), geo(y, z), geo(x, z))
                truncated |= any(s[2] for s in sides)
                count += len(sides[0][0]) * len(sides[1][0]) * len(sides[2][0])
                for r in range(3):
                    paths, _, _ = sides[r]
                    _, d1, _ = sides[(r + 1) % 3]
                    _, d2, _ = sides[(r + 2) % 3]
                    for p in paths:
                        idx = list(p)
                        # worst point of p against every choice of the two other sides
                        near = np.minimum(d1[:, None, idx], d2[None, :, idx])
                        val = int(near.max())
                        if val > best:
                            best, witness = val, (x, y, z)
    return best, witness, count, truncated


def delta_slim(g: MetricGraph, center: int, radius, cap: int = 1000, workers: int = 1) -> HyperbolicityReport:
    """Exact slim-triangle constant over all geodesic triangles on a ball.

    >>> from coarsekit.graph import build_graph
    >>> c12 = build_graph([(i, (i + 1) % 12) for i in range(12)])
    >>> delta_slim(c12, 0, 6).delta_slim
    3
    """
    verts = ball(g, center, radius)
    dm = g.distance_matrix()
    w = resolve_workers(workers)
    idx = list(range(len(verts)))
    parts = [idx[k::w] for k in range(w)] if w > 1 else [idx]
    results = parallel_map(_slim_rows, [(g, dm, verts, part, cap) for part in parts], w)
    best, witness, count, truncated = 0, None, 0, False
    for b, wit, c, t in results:
        count += c
        truncated |= t
        # ties go to the lexicographically least triple, whatever the partition
        if b > best or (b == best and wit is not None and (witness is None or wit < witness)):
            best, witness = b, wit
    d4 = delta_4pt(g, center, radius)
    return HyperbolicityReport(best, d4, center, radius, count, truncated, g.fingerprint(), cap, witness)


def delta_4pt(g: MetricGraph, center: int, radius) -> float:
    """Four-point constant: max over quadruples of (largest - middle pair sum) / 2."""
    verts = ball(g, center, radius)
    sub = g.distance_matrix()[np.ix_(verts, verts)]
    return kernels.four_point_2delta(sub) / 2


@dataclass(frozen=True)
class GuessingVerdict:
    status: str
    condition: int | None = None
    witness: tuple | None = None

    @property
    def passed(self) -> bool:
        return self.status == "PASS"


PathSource = Callable[[int, int], tuple] | Mapping[tuple[int, int], tuple]


def _path_lookup(paths):
    if callable(paths):
        cache = {}

        def get(x, y):
            key = (x, y)
            if key not in cache:
                cache[key] = tuple(paths(x, y))
            return cache[key]
        return get

    def get(x, y):
        if x == y and (x, y) not in paths:
            return (x,)
        if (x, y) in paths:
            return tuple(paths[(x, y)])
        if (y, x) in paths:
            return tuple(reversed(paths[(y, x)]))
        raise GraphError(f"no path supplied for the pair ({x}, {y})")
    return get


def guessing_geodesics_check(g: MetricGraph, paths: PathSource, verts: Iterable[int], n) -> GuessingVerdict:
    """The three guessing-geodesics conditions with constant n over a vertex set.

    1. paths between points at distance <= 1 have diameter <= n;
    2. each subpath is n-Hausdorff-close to the path between its endpoints;
    3. the x-z path lies in the n-neighbourhood of the x-y and y-z paths.
    """
    verts = sorted(set(verts))
    dm = g.distance_matrix()
    get = _path_lookup(paths)
    for x in verts:
        for y in verts:
            p = get(x, y)
            if p[0] != x or p[-1] != y:
                raise GraphError(f"path for ({x}, {y}) has wrong endpoints")
    for i, x in enumerate(verts):
        for y in verts[i:]:
            if dm[x, y] <= 1:
                p = list(get(x, y))
                if dm[np.ix_(p, p)].max() > n:
                    return GuessingVerdict("FAIL", 1, (x, y))
    for x in verts:
        for y in verts:
            if x == y:
                continue
            p = get(x, y)
            for s in range(len(p)):
                for t in range(s + 1, len(p)):
                    q = get(p[s], p[t])
                    if hausdorff_from_matrix(dm, list(p[s:t + 1]), list(q)) > n:
                        return GuessingVerdict("FAIL", 2, (x, y, s, t))
    for x in verts:
        for z in verts:
            pxz = list(get(x, z))
            for y in verts:
                other = list(get(x, y)) + list(get(y, z))
                if dm[np.ix_(pxz, other)].min(axis=1).max() > n:
                    return GuessingVerdict("FAIL", 3, (x, y, z))
    return GuessingVerdict("PASS")


@dataclass(frozen=True)
class QuasiconvexityResult:
    k: int
    truncated: bool
    witness: tuple | None = None


def quasiconvexity_constant(g: MetricGraph, subset: Iterable[int], center: int, radius,
                            cap: int = 1000, hull: Iterable[int] | None = None) -> QuasiconvexityResult:
    """Least k such that all geodesics between subset points of the ball stay k-close to the subset.

    ``hull`` (a superset of the subset) replaces the subset as the target of
    the neighbourhood when given.
    """
    Z = sorted(set(subset))
    if not Z:
        raise GraphError("empty subset")
    target = sorted(set(hull)) if hull is not None else Z
    inside = set(ball(g, center, radius))
    pts = [z for z in Z if z in inside]
    dz = g.bfs(target)
    dm = g.distance_matrix()
    k, witness, truncated = 0, None, False
    for i, x in enumerate(pts):
        for y in pts[i + 1:]:
            if dm[x, y] < 0:
                raise GraphError("subset points in different components")
            gs = all_geodesics(g, x, y, cap, dist_y=dm[y])
            truncated |= gs.truncated
            for p in gs.paths:
                val = int(dz[list(p)].max())
                if val > k:
                    k, witness = val, p
    return QuasiconvexityResult(k, truncated, witness)


@dataclass(frozen=True)
class QIDistortion:
    multiplicative: float
    additive: float
    pairs: int
    unreachable: int
    degenerate: bool = False


def vertex_map_qi(g1: MetricGraph, g2: MetricGraph, mapping, sample: Iterable[int] | None = None) -> QIDistortion:
    """Distortion of a vertex map, as (A, B) with d2/A - B <= d1 <= A*d2 + B.

    A is the least single constant that works for both bounds with B = A;
    B is then lowered to the least additive constant valid for that A.
    """
    f = mapping if callable(mapping) else (lambda v: mapping[v])
    verts = sorted(set(sample)) if sample is not None else list(range(g1.n))
    images = [int(f(v)) for v in verts]
    d1 = g1.distance_matrix()[np.ix_(verts, verts)].astype(np.float64)
    d2 = g2.distance_matrix()[np.ix_(images, images)].astype(np.float64)
    iu = np.triu_indices(len(verts), 1)
    a, b = d1[iu], d2[iu]
    ok = (a >= 0) & (b >= 0)
    unreachable = int((~ok).sum())
    a, b = a[ok], b[ok]
    if len(verts) >= 2 and len(set(images)) <= 1:
        return QIDistortion(math.inf, math.inf, int(ok.sum()), unreachable, True)
    if a.size == 0:
        return QIDistortion(1.0, 0.0, 0, unreachable)
    need_up = a / (b + 1)
    need_down = (-a + np.sqrt(a * a + 4 * b)) / 2
    A = float(max(1.0, need_up.max(), need_down.max()))
    B = float(max(0.0, (a - A * b).max(), (b / A - a).max()))
    return QIDistortion(A, B, int(a.size), unreachable)


# ---------------------------------------------------------------------------
# reports


REPORT_COLUMNS = ["instance", "measurement", "L", "p", "kappa", "delta", "verdict", "detail"]


def report_csv(rows: Iterable[Mapping]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=REPORT_COLUMNS, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for row in rows:
        w.writerow({k: _num(row.get(k, "")) for k in REPORT_COLUMNS})
    return buf.getvalue()


def report_json(report: HyperbolicityReport, **extra) -> str:
    d = report.as_dict()
    d.update(extra)
    return json.dumps(d, sort_keys=True)
