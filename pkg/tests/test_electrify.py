import json
import math
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from coarsekit.electrify import (Budget, ConedGraph, FamilyError, MalformedPathError, PeripheralFamily,
                                 build_tower, check_r_bounded, cone_off, detect_wide, enlarge,
                                 enlargement_fellow_travel, enlargement_path, enlargement_qg_constant,
                                 estimate_penetration, gap_table, is_efficient, is_quasi_geodesic,
                                 make_efficient, qg_paths, thin_triangle_constant, verify_bcp,
                                 wideness_transfer_check)
from coarsekit.graph import build_graph, hausdorff_from_matrix
from coarsekit.suite import cycle

from .strategies import graphs_with_family


@pytest.fixture
def c12_arc():
    g = cycle(12)
    return cone_off(g, PeripheralFamily(g, {"H": range(7)}))


def test_cone_vertices_follow_base_ids(c12_arc):
    assert c12_arc.cone_vertices == {"H": 12}
    assert [int(v) for v in c12_arc.graph.neighbors(12)] == list(range(7))
    assert c12_arc.graph.distance(0, 6) == 2


def test_family_validation():
    g = cycle(6)
    with pytest.raises(FamilyError, match="'X'"):
        PeripheralFamily(g, {"X": [0, 3]})
    with pytest.raises(FamilyError, match="empty"):
        PeripheralFamily(g, {"X": []})
    with pytest.raises(FamilyError, match="unknown"):
        PeripheralFamily(g, {"X": [9]})


def test_serialization_keeps_member_order():
    g = cycle(8)
    cg = cone_off(g, PeripheralFamily(g, {"z": [0, 1], "a": [4, 5]}))
    again = ConedGraph.from_dict(json.loads(cg.to_json()))
    assert again.cone_vertices == {"z": 8, "a": 9}
    assert again.fingerprint() == cg.fingerprint()
    assert "diamond" in cg.to_dot()


def test_tampered_coned_file_rejected(c12_arc):
    doc = json.loads(c12_arc.to_json())
    doc["fingerprints"]["coned"] = "0" * 16
    with pytest.raises(Exception, match="does not match"):
        ConedGraph.from_dict(doc)


def test_enlargement_and_efficiency(c12_arc):
    p = (0, 12, 6)
    assert enlarge(c12_arc, p) == tuple(range(7))
    assert detect_wide(c12_arc, p, 6) == [("H", 1)] and detect_wide(c12_arc, p, 7) == []
    assert not is_efficient(c12_arc, (0, 12, 3, 12, 6))
    assert make_efficient(c12_arc, (0, 12, 3, 12, 6)) == (0, 12, 6)
    with pytest.raises(MalformedPathError):
        enlarge(c12_arc, (0, 12, 3, 12, 6))
    with pytest.raises(MalformedPathError):
        enlarge(c12_arc, (12, 0))


def test_r_bounded():
    g = cycle(16)
    fam = PeripheralFamily(g, {"A": range(0, 9), "B": range(6, 15)})
    assert check_r_bounded(fam).r == 2
    assert check_r_bounded(PeripheralFamily(g, {})).r == 0


def test_gap_table_and_qg_definition():
    assert list(gap_table(1, 3)) == [1, 2, 3, 4, 5]
    assert list(gap_table(Fraction(3, 2), 1)) == [2, 3, 5]
    dm = cycle(6).distance_matrix()
    assert is_quasi_geodesic(dm, (0, 1, 2, 3), 1)
    assert not is_quasi_geodesic(dm, (0, 1, 2, 3, 4), 1)


def _oracle_paths(cg, x, y, L):
    """Every efficient edge walk x -> y that is an L-quasi-geodesic, by blind search."""
    g = cg.graph
    dm = g.distance_matrix()
    longest = math.floor(Fraction(L) * (int(dm[x, y]) + Fraction(L)))
    out = []

    def ok_last(p):
        # the condition is inherited by subpaths, so checking each new endpoint suffices
        t = len(p) - 1
        return all(Fraction(t - s) / L - L <= int(dm[p[s], p[t]]) for s in range(t))

    def walk(p):
        if p[-1] == y:
            out.append(tuple(p))
        if len(p) - 1 == longest:
            return
        for u in g.neighbors(p[-1]):
            u = int(u)
            if cg.is_cone_vertex(u) and u in p:
                continue
            if ok_last(p + [u]):
                walk(p + [u])

    walk([x])
    return sorted(out)


@given(graphs_with_family(max_n=6, max_members=2), st.data(), st.sampled_from([1, Fraction(3, 2)]))
def test_qg_paths_match_blind_search(gf, data, L):
    cg = cone_off(*gf)
    x = data.draw(st.integers(0, cg.n_base - 1))
    y = data.draw(st.integers(0, cg.n_base - 1))
    paths, truncated = qg_paths(cg, x, y, L)
    assert not truncated
    assert sorted(paths) == _oracle_paths(cg, x, y, L)


def _oracle_penetration(cg, L):
    fam = cg.family
    p = 0
    for x in range(cg.n_base):
        for y in range(x + 1, cg.n_base):
            paths = _oracle_paths(cg, x, y, L)
            # the requirement only depends on how each path crosses each cone, or that it misses it
            crossings = {}
            for q in paths:
                for v in range(cg.n_base, cg.graph.n):
                    j = q.index(v) if v in q else None
                    crossings.setdefault(v, set()).add(None if j is None else (q[j - 1], q[j + 1]))
            for v, seen in crossings.items():
                name = cg.cone_names[v]
                for c1 in seen - {None}:
                    w = fam.intrinsic_distance(name, *c1)
                    for c2 in seen:
                        if c2 is None:
                            need = w + 1
                        else:
                            shift = max(fam.intrinsic_distance(name, c1[0], c2[0]),
                                        fam.intrinsic_distance(name, c1[1], c2[1]))
                            need = min(shift, w + 1)
                        p = max(p, need)
    if len(fam):
        p = max(p, 2 * check_r_bounded(fam).r + 1)
    return p


@given(graphs_with_family(max_n=6, max_members=2), st.sampled_from([1, 2]))
def test_penetration_matches_blind_search(gf, L):
    cg = cone_off(*gf)
    est = estimate_penetration(cg, L, Budget())
    assert est.exhaustive
    assert est.p == _oracle_penetration(cg, L)
    assert verify_bcp(cg, L, est.p, Budget()).passed
    floor = 2 * est.r + 1 if len(cg.family) else 0
    if est.p > max(floor, 0) and est.p > 0:
        assert verify_bcp(cg, L, est.p - 1, Budget()).status == "FAIL"


def test_empty_family_is_vacuous():
    g = cycle(6)
    cg = cone_off(g, PeripheralFamily(g, {}))
    assert estimate_penetration(cg, 1).p == 0
    assert verify_bcp(cg, 1, 0).passed
    assert wideness_transfer_check(cg, 1).passed
    # the two antipodal geodesics of the hexagon are 1 apart
    assert enlargement_fellow_travel(cg, 1).kappa == 1


def test_truncated_budget_is_inconclusive(c12_arc):
    v = verify_bcp(c12_arc, 2, 100, Budget(max_paths=1))
    assert v.status == "INCONCLUSIVE"
    assert not estimate_penetration(c12_arc, 2, Budget(max_paths=1)).exhaustive


def test_wideness_transfer_flags_bypass():
    # a member whose cone can be bypassed along a path of the same length
    g = build_graph([(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (5, 4)])
    cg = cone_off(g, PeripheralFamily(g, {"H": [0, 1, 2, 3, 4]}))
    v = wideness_transfer_check(cg, 2, Budget(), p=1)
    assert v.status == "FAIL" and v.witness[2] == "H"


def _oracle_kappa(cg, L):
    base_dm = cg.base.distance_matrix()
    best = 0
    for x in range(cg.n_base):
        for y in range(x + 1, cg.n_base):
            enl = sorted({tuple(sorted(set(enlarge(cg, p)))) for p in _oracle_paths(cg, x, y, L)})
            for a in enl:
                for b in enl:
                    best = max(best, hausdorff_from_matrix(base_dm, list(a), list(b)))
    return best


@given(graphs_with_family(max_n=6, max_members=2), st.sampled_from([1, 2]))
def test_fellow_travel_matches_blind_search(gf, L):
    cg = cone_off(*gf)
    ft = enlargement_fellow_travel(cg, L, Budget())
    assert ft.exhaustive and ft.kappa == _oracle_kappa(cg, L)


@given(graphs_with_family(max_n=8))
def test_coning_never_lengthens(gf):
    g, fam = gf
    cg = cone_off(g, fam)
    d0 = g.distance_matrix()
    d1 = cg.graph.distance_matrix()[:g.n, :g.n]
    assert (d1 <= d0).all()
    for name in fam:
        for v in fam.members[name]:
            assert cg.graph.has_edge(v, cg.cone_vertices[name])


@given(graphs_with_family(max_n=8))
def test_enlargement_endpoints_and_base_edges(gf):
    cg = cone_off(*gf)
    for y in range(1, cg.n_base):
        e = enlargement_path(cg, 0, y)
        assert e[0] == 0 and e[-1] == y
        assert all(cg.base.has_edge(a, b) for a, b in zip(e, e[1:]))


def test_qg_and_thin_constants_on_c12(c12_arc):
    K, worst, truncated = enlargement_qg_constant(c12_arc)
    # worst case: the enlargement 0..8 has 8 steps between points 4 apart
    assert not truncated and K == pytest.approx((-4 + 48 ** 0.5) / 2)
    assert thin_triangle_constant(c12_arc)[0] == 4


def test_tower_distances_drop():
    g = cycle(12)
    t = build_tower(g, [PeripheralFamily(g, {"H": range(4)}), PeripheralFamily(g, {"H": range(7)})])
    assert [c["max_drop"] for c in t.comparisons] == [1, 3]
    assert all(c["ge_previous"] <= c["pairs"] for c in t.comparisons)
    other = cycle(13)
    with pytest.raises(FamilyError):
        build_tower(g, [PeripheralFamily(other, {})])


def test_networkx_agrees_on_coned_distances(c12_arc):
    h = nx.Graph(list(c12_arc.graph.edges))
    ref = dict(nx.all_pairs_shortest_path_length(h))
    dm = c12_arc.graph.distance_matrix()
    assert all(dm[u, v] == ref[u][v] for u in ref for v in ref[u])
