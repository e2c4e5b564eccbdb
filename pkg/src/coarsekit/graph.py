"""Finite unit-length metric graphs and exact geodesic machinery."""

from __future__ import annotations

import hashlib
import json
import math
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels

CACHE_LIMIT = 5000


class GraphError(ValueError):
    pass


class UnreachableError(GraphError):
    """Raised when two vertices lie in different components."""


class MetricGraph:
    """Immutable simple graph on vertices ``0..n-1`` with unit edge lengths.

    Neighbour lists are sorted, which makes every traversal (and so every
    tie-break) deterministic.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], labels: dict | None = None):
        self.n = int(n)
        es = sorted({(min(u, v), max(u, v)) for u, v in edges})
        self.edges = tuple(es)
        self.labels = dict(sorted((int(k), str(v)) for k, v in (labels or {}).items()))
        deg = np.zeros(self.n + 1, dtype=np.int64)
        for u, v in es:
            deg[u + 1] += 1
            deg[v + 1] += 1
        indptr = np.cumsum(deg)
        nbrs = [[] for _ in range(self.n)]
        for u, v in es:
            nbrs[u].append(v)
            nbrs[v].append(u)
        indices = np.fromiter((w for lst in nbrs for w in sorted(lst)), dtype=np.int64,
                              count=int(indptr[-1]))
        indptr.setflags(write=False)
        indices.setflags(write=False)
        self.indptr = indptr
        self.indices = indices
        self._dm = None
        self._fp = None

    # -- basic queries ----------------------------------------------------

    def __repr__(self):
        return f"MetricGraph(n={self.n}, m={len(self.edges)})"

    def __eq__(self, other):
        return isinstance(other, MetricGraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return bool(i < len(nb) and nb[i] == v)

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    # -- distances --------------------------------------------------------

    def bfs(self, sources) -> np.ndarray:
        if isinstance(sources, (int, np.integer)):
            sources = (int(sources),)
        return kernels.bfs(self.indptr, self.indices, list(sources))

    def distance_matrix(self) -> np.ndarray:
        """All-pairs distances (-1 for unreachable), cached for n <= 5000."""
        if self._dm is not None:
            return self._dm
        if self.n > CACHE_LIMIT:
            raise GraphError(f"all-pairs matrix refused for n={self.n} > {CACHE_LIMIT}")
        cache_dir = os.environ.get("COARSEKIT_CACHE")
        path = os.path.join(cache_dir, f"apsp-{self.fingerprint()}.npy") if cache_dir else None
        dm = None
        if path and os.path.exists(path):
            try:
                dm = np.load(path)
                if dm.shape != (self.n, self.n):
                    dm = None
            except (OSError, ValueError):
                dm = None
        if dm is None:
            dm = kernels.all_pairs(self.indptr, self.indices)
            if path:
                os.makedirs(cache_dir, exist_ok=True)
                tmp = f"{path}.{os.getpid()}.tmp"
                with open(tmp, "wb") as fh:
                    np.save(fh, dm)
                os.replace(tmp, path)
        dm.setflags(write=False)
        self._dm = dm
        return dm

    def distance(self, x: int, y: int) -> int:
        if self._dm is not None or self.n <= 300:
            d = int(self.distance_matrix()[x, y])
        else:
            d = int(self.bfs(x)[y])
        if d < 0:
            raise UnreachableError(f"{x} and {y} are in different components")
        return d

    def ball(self, center: int, radius) -> list[int]:
        dist = self.bfs(center)
        return [int(v) for v in np.nonzero((dist >= 0) & (dist <= radius))[0]]

    def components(self) -> list[list[int]]:
        seen = np.zeros(self.n, dtype=bool)
        out = []
        for v in range(self.n):
            if not seen[v]:
                comp = np.nonzero(self.bfs(v) >= 0)[0]
                seen[comp] = True
                out.append([int(u) for u in comp])
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or bool((self.bfs(0) >= 0).all())

    def induced(self, vertices: Iterable[int]) -> tuple["MetricGraph", list[int]]:
        """Induced subgraph with order-preserving relabelling; returns (graph, local->global)."""
        vs = sorted(set(int(v) for v in vertices))
        local = {v: i for i, v in enumerate(vs)}
        es = [(local[u], local[v]) for u, v in self.edges if u in local and v in local]
        return MetricGraph(len(vs), es), vs

    # -- serialization ----------------------------------------------------

    def as_dict(self) -> dict:
        d = {"vertices": self.n, "edges": [list(e) for e in self.edges]}
        if self.labels:
            d["labels"] = {str(k): v for k, v in self.labels.items()}
        return d

    def fingerprint(self) -> str:
        if self._fp is None:
            payload = json.dumps({"vertices": self.n, "edges": self.edges}, separators=(",", ":"))
            self._fp = hashlib.sha256(payload.encode()).hexdigest()[:16]
        return self._fp

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "MetricGraph":
        labels = {int(k): v for k, v in (data.get("labels") or {}).items()}
        return build_graph([tuple(e) for e in data["edges"]], n=data.get("vertices"), labels=labels)

    @classmethod
    def from_json(cls, text: str) -> "MetricGraph":
        return cls.from_dict(json.loads(text))

    def to_dot(self, name="G", shapes: dict | None = None) -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            attrs = [f'label="{self.label(v)}"']
            if shapes and v in shapes:
                attrs.append(f"shape={shapes[v]}")
            lines.append(f"  {v} [{', '.join(attrs)}];")
        for u, v in self.edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(edge_list: Iterable[Sequence[int]], n: int | None = None,
                labels: dict | None = None) -> MetricGraph:
    """Validate an edge list and build a :class:`MetricGraph`.

    >>> build_graph([(0, 1), (1, 2)])
    MetricGraph(n=3, m=2)
    """
    seen = set()
    top = -1
    pairs = []
    for e in edge_list:
        if len(e) != 2:
            raise GraphError(f"edge {tuple(e)!r} does not have two endpoints")
        u, v = int(e[0]), int(e[1])
        if u < 0 or v < 0:
            raise GraphError(f"negative vertex id in edge ({u}, {v})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}: ({u}, {v})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        pairs.append(key)
        top = max(top, u, v)
    if n is None:
        n = top + 1
    elif top >= n:
        raise GraphError(f"edge endpoint {top} out of range for {n} vertices")
    if labels:
        for k in labels:
            if not 0 <= int(k) < n:
                raise GraphError(f"label for unknown vertex {k}")
    return MetricGraph(n, pairs, labels)


def _check_path(g: MetricGraph, p: Sequence[int]):
    if len(p) == 0:
        raise GraphError("empty path")
    for a, b in zip(p, p[1:]):
        if a != b and not g.has_edge(a, b):
            raise GraphError(f"({a}, {b}) is not an edge")


def geodesic(g: MetricGraph, x: int, y: int) -> tuple[int, ...]:
    """Lexicographically least shortest path from x to y."""
    dy = g.bfs(y)
    if dy[x] < 0:
        raise UnreachableError(f"{x} and {y} are in different components")
    path = [x]
    v = x
    while v != y:
        want = dy[v] - 1
        for u in g.neighbors(v):
            if dy[u] == want:
                v = int(u)
                break
        path.append(v)
    return tuple(path)


@dataclass(frozen=True)
class GeodesicSet:
    paths: tuple[tuple[int, ...], ...]
    truncated: bool

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)


def all_geodesics(g: MetricGraph, x: int, y: int, cap: int = 10_000, dist_y=None) -> GeodesicSet:
    """All shortest x-y paths in lexicographic order, at most ``cap`` of them."""
    dy = g.bfs(y) if dist_y is None else dist_y
    if dy[x] < 0:
        raise UnreachableError(f"{x} and {y} are in different components")
    out: list[tuple[int, ...]] = []
    path = [x]
    truncated = False

    def rec(v):
        nonlocal truncated
        if truncated:
            return
        if v == y:
            if len(out) >= cap:
                truncated = True
                return
            out.append(tuple(path))
            return
        want = dy[v] - 1
        for u in g.neighbors(v):
            if dy[u] == want:
                path.append(int(u))
                rec(int(u))
                path.pop()
                if truncated:
                    return

    rec(x)
    return GeodesicSet(tuple(out), truncated)


def hausdorff_distance(g: MetricGraph, A: Iterable[int], B: Iterable[int]) -> int:
    A, B = sorted(set(A)), sorted(set(B))
    if not A or not B:
        raise GraphError("Hausdorff distance of an empty set")
    da = g.bfs(A)
    db = g.bfs(B)
    if (da[B] < 0).any() or (db[A] < 0).any():
        raise UnreachableError("sets lie in different components")
    return int(max(da[B].max(), db[A].max()))


def hausdorff_from_matrix(dm: np.ndarray, A, B) -> int:
    """Hausdorff distance of two vertex sets using a precomputed distance matrix."""
    sub = dm[np.ix_(np.asarray(A), np.asarray(B))]
    return int(max(sub.min(axis=1).max(), sub.min(axis=0).max()))


def qg_bound(k: int, d: int) -> float:
    """Least L with k/L - L <= d."""
    return (-d + math.sqrt(d * d + 4 * k)) / 2


def measure_qg_constant(g: MetricGraph, p: Sequence[int], dm: np.ndarray | None = None) -> float:
    """Least L >= 1 with |s-t|/L - L <= d(p(s), p(t)) over all index pairs.

    >>> c12 = build_graph([(i, (i + 1) % 12) for i in range(12)])
    >>> round(measure_qg_constant(c12, tuple(range(12)) + (0,)) ** 2, 9)
    12.0
    """
    p = tuple(int(v) for v in p)
    _check_path(g, p)
    m = len(p)
    if m <= 1:
        return 1.0
    if dm is None:
        verts = sorted(set(p))
        rows = {v: g.bfs(v) for v in verts}
        d = np.array([[rows[a][b] for b in p] for a in p], dtype=np.float64)
    else:
        idx = np.asarray(p)
        d = dm[np.ix_(idx, idx)].astype(np.float64)
    k = np.abs(np.subtract.outer(np.arange(m), np.arange(m))).astype(np.float64)
    need = (-d + np.sqrt(d * d + 4 * k)) / 2
    return float(max(1.0, need.max()))
