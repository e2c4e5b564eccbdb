"""The compiled kernels against the pure-Python reference, call by call."""

import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from coarsekit import kernels
from coarsekit.electrify import cone_off, gap_table
from coarsekit.surface import default_model, parse_word

from .strategies import connected_graphs, graphs_with_family

BACKENDS = kernels.backends()
needs_compiled = pytest.mark.skipif("compiled" not in BACKENDS, reason="extension not built")
py = BACKENDS["python"]


def test_backend_selected():
    assert kernels.BACKEND in ("python", "compiled")


def test_pure_python_switch(monkeypatch):
    import importlib

    monkeypatch.setenv("COARSEKIT_PURE_PYTHON", "1")
    try:
        mod = importlib.reload(kernels)
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("COARSEKIT_PURE_PYTHON")
        importlib.reload(kernels)


@needs_compiled
@given(connected_graphs(max_n=14))
def test_all_pairs_agree(g):
    c = BACKENDS["compiled"]
    assert np.array_equal(c.all_pairs(g.indptr, g.indices), py.all_pairs(g.indptr, g.indices))
    assert np.array_equal(c.bfs(g.indptr, g.indices, [0]), py.bfs(g.indptr, g.indices, [0]))


@needs_compiled
@given(connected_graphs(max_n=9))
def test_four_point_agrees_with_brute_force(g):
    dm = g.distance_matrix()
    n = g.n
    best = 0
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for w in range(n):
                    s = sorted([dm[x, y] + dm[z, w], dm[x, z] + dm[y, w], dm[x, w] + dm[y, z]])
                    best = max(best, s[2] - s[1])
    assert BACKENDS["compiled"].four_point_2delta(dm) == best == py.four_point_2delta(dm)


def _raw(mod, cg, x, y, L, cap=5000):
    g = cg.graph
    dm = g.distance_matrix()
    flat, offsets, trunc = mod.qg_paths(g.indptr, g.indices, dm, x, y, gap_table(L, int(dm.max())),
                                        cg.is_cone, cap)
    return [tuple(flat[offsets[i]:offsets[i + 1]]) for i in range(len(offsets) - 1)], bool(trunc)


@needs_compiled
@given(graphs_with_family(max_n=7), st.data(), st.sampled_from([1, 2]))
def test_qg_paths_agree(gf, data, L):
    cg = cone_off(*gf)
    x = data.draw(st.integers(0, cg.n_base - 1))
    y = data.draw(st.integers(0, cg.n_base - 1))
    assert _raw(BACKENDS["compiled"], cg, x, y, L) == _raw(py, cg, x, y, L)


@needs_compiled
def test_cutting_check_and_walks_agree():
    m = default_model()
    c = BACKENDS["compiled"]
    rng = random.Random(5)
    for _ in range(300):
        w = np.asarray([rng.randrange(8) for _ in range(rng.randrange(1, 9))], dtype=np.int64)
        assert c.cutting_check(w, m.gens, m.tight, m.eps) == py.cutting_check(w, m.gens, m.tight, m.eps)
        s1, l1 = c.general_walk(w, m.gens, m.tight, m.eps, 200)
        s2, l2 = py.general_walk(w, m.gens, m.tight, m.eps, 200)
        assert s1 == s2 and list(l1) == list(l2)


@needs_compiled
@pytest.mark.parametrize("x, y", [("a", "b"), ("ab", "aB"), ("abAd", "bcD"), ("abcd", "dcba")])
def test_crossings_agree(x, y):
    m = default_model()
    c = BACKENDS["compiled"]
    cx = np.asarray(m.cutting_sequence(parse_word(x)), dtype=np.int64)
    cy = np.asarray(m.cutting_sequence(parse_word(y)), dtype=np.int64)
    out = []
    for mod in (c, py):
        _, px, _ = mod.rotation_walk(cx, m.gens, m.tight, m.eps)
        _, pyy, _ = mod.rotation_walk(cy, m.gens, m.tight, m.eps)
        _, lifts = mod.lift_set(pyy, m.nbhd, m.tight, m.eps)
        out.append(mod.count_crossings(px, lifts, m.tight, m.eps))
    assert out[0] == out[1]


@needs_compiled
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_agrees(n):
    m = default_model()
    a = [(tuple(w), s) for w, s in BACKENDS["compiled"].enumerate_cutting_words(n, m.gens, m.tight, m.eps)]
    b = [(tuple(w), s) for w, s in py.enumerate_cutting_words(n, m.gens, m.tight, m.eps)]
    assert a == b
