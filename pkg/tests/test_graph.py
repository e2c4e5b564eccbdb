import json

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from coarsekit.graph import (GraphError, MetricGraph, UnreachableError, all_geodesics, build_graph,
                             geodesic, hausdorff_distance, measure_qg_constant, qg_bound)

from .strategies import connected_graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@pytest.mark.parametrize("edges, msg", [
    ([(0, 0)], "self-loop"),
    ([(0, 1), (1, 0)], "duplicate"),
    ([(-1, 2)], "negative"),
    ([(0, 1, 2)], "two endpoints"),
])
def test_build_graph_rejects(edges, msg):
    with pytest.raises(GraphError, match=msg):
        build_graph(edges)


def test_out_of_range_endpoint():
    with pytest.raises(GraphError, match="out of range"):
        build_graph([(0, 5)], n=3)


def test_isolated_vertices_and_components():
    g = build_graph([(0, 1)], n=4)
    assert g.components() == [[0, 1], [2], [3]]
    assert not g.is_connected()
    with pytest.raises(UnreachableError):
        g.distance(0, 3)
    with pytest.raises(UnreachableError):
        geodesic(g, 0, 2)


def test_json_round_trip_and_fingerprint():
    g = build_graph([(0, 1), (1, 2)], labels={0: "x"})
    h = MetricGraph.from_json(g.to_json())
    assert h == g and h.fingerprint() == g.fingerprint() and h.label(0) == "x"
    assert json.loads(g.to_json())["edges"] == [[0, 1], [1, 2]]


def test_dot_has_every_edge():
    dot = build_graph([(0, 1), (1, 2)]).to_dot(shapes={2: "diamond"})
    assert "0 -- 1;" in dot and "1 -- 2;" in dot and "shape=diamond" in dot


def test_disk_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("COARSEKIT_CACHE", str(tmp_path))
    g = build_graph([(i, i + 1) for i in range(5)])
    dm = g.distance_matrix()
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    again = build_graph([(i, i + 1) for i in range(5)]).distance_matrix()
    assert np.array_equal(dm, again)


def test_c12_qg_constant_of_full_loop():
    c12 = build_graph([(i, (i + 1) % 12) for i in range(12)])
    assert measure_qg_constant(c12, tuple(range(12)) + (0,)) == pytest.approx(12 ** 0.5)
    assert measure_qg_constant(c12, range(7)) == 1.0
    assert qg_bound(4, 0) == 2.0


@given(connected_graphs())
def test_distances_match_networkx(g):
    ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    dm = g.distance_matrix()
    for u in range(g.n):
        for v in range(g.n):
            assert dm[u, v] == ref[u][v]


@given(connected_graphs(max_n=9), st.data())
def test_all_geodesics_match_networkx(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    y = data.draw(st.integers(0, g.n - 1))
    ours = all_geodesics(g, x, y)
    ref = sorted(tuple(p) for p in nx.all_shortest_paths(to_nx(g), x, y))
    assert list(ours.paths) == ref and not ours.truncated
    assert geodesic(g, x, y) == ref[0]


@given(connected_graphs(max_n=9), st.data())
def test_geodesic_cap_truncates(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    y = data.draw(st.integers(0, g.n - 1))
    full = all_geodesics(g, x, y)
    cut = all_geodesics(g, x, y, cap=1)
    assert cut.paths == full.paths[:1]
    assert cut.truncated == (len(full) > 1)


@given(connected_graphs())
def test_metric_axioms(g):
    dm = g.distance_matrix()
    assert (dm == dm.T).all() and (np.diag(dm) == 0).all()
    assert (dm[:, :, None] <= dm[:, None, :] + dm.T[None, :, :]).all()


@given(connected_graphs(max_n=8), st.data())
def test_hausdorff_symmetric_and_zero_on_equal(g, data):
    A = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    B = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    assert hausdorff_distance(g, A, B) == hausdorff_distance(g, B, A)
    assert hausdorff_distance(g, A, A) == 0


@given(connected_graphs(max_n=8), st.data())
def test_geodesics_are_one_quasi_geodesic(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    y = data.draw(st.integers(0, g.n - 1))
    assert measure_qg_constant(g, geodesic(g, x, y)) == 1.0
