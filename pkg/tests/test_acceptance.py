"""Acceptance criteria 1-10, each with its runtime bound.

Each test prints a one-line summary; the conftest prints a PASS/FAIL line
per criterion at the end of the session.
"""

import itertools
import json
import math
import pathlib
import time
from collections import Counter

import numpy as np
import pytest

from coarsekit import discgraphs as DG
from coarsekit.cli import main
from coarsekit.electrify import (cone_off, enlargement_fellow_travel, enlargement_qg_constant,
                                 estimate_penetration, verify_bcp, wideness_transfer_check)
from coarsekit.hyplab import delta_slim, quasiconvexity_constant
from coarsekit.surface import build_inventory, disc_bounding, intersection_number
from coarsekit.suite import cycle

from .test_hyplab import brute_slim

FROZEN = json.loads((pathlib.Path(__file__).parent / "data" / "frozen.json").read_text())


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def report(num, ok, seconds, detail):
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} ({seconds:.2f}s) {detail}")


def test_criterion_01_cone_adjacency(suite):
    with Clock() as clk:
        bad = []
        for inst in suite:
            cg = cone_off(inst.base, inst.family)
            g, base = cg.graph, inst.base
            for x in range(base.n):
                want = set(int(u) for u in base.neighbors(x))
                want |= {cg.cone_vertices[c] for c in inst.family if x in inst.family.members[c]}
                if set(int(u) for u in g.neighbors(x)) != want:
                    bad.append((inst.name, x))
            for c, vc in cg.cone_vertices.items():
                if set(int(u) for u in g.neighbors(vc)) != set(inst.family.members[c]):
                    bad.append((inst.name, c))
    report(1, not bad and clk.seconds < 1, clk.seconds, f"{len(suite)} instances, mismatches={bad}")
    assert not bad
    assert clk.seconds < 1


def test_criterion_02_enlargement_quasi_geodesic(suite):
    with Clock() as clk:
        found = {}
        for inst in suite:
            assert inst.base.n <= 60
            K, _, truncated = enlargement_qg_constant(inst.coned)
            assert not truncated
            found[inst.name] = K
    worse = {n: K for n, K in found.items() if K > FROZEN[n]["K"] + 1e-9}
    report(2, not worse and clk.seconds < 60, clk.seconds,
           "K " + " ".join(f"{n}={K:.3f}" for n, K in found.items()))
    assert not worse
    assert clk.seconds < 60


def test_criterion_03_bounded_penetration(suite):
    with Clock() as clk:
        failures = []
        ps = {}
        for inst in suite:
            for L in (1, 2):
                budget = inst.budget_for(L)
                est = estimate_penetration(inst.coned, L, budget)
                ps[(inst.name, L)] = est.p
                if not est.exhaustive:
                    failures.append((inst.name, L, "partial"))
                if not verify_bcp(inst.coned, L, est.p, budget).passed:
                    failures.append((inst.name, L, "bcp"))
                if not wideness_transfer_check(inst.coned, L, budget, est.p).passed:
                    failures.append((inst.name, L, "wideness"))
    report(3, not failures and clk.seconds < 300, clk.seconds,
           "p " + " ".join(f"{n}/L{L}={p}" for (n, L), p in ps.items()) + f" failures={failures}")
    assert not failures
    assert clk.seconds < 300


def test_criterion_04_fellow_travel(suite):
    with Clock() as clk:
        bad = []
        kappas = {}
        for inst in suite:
            full = enlargement_fellow_travel(inst.coned, 1, inst.budget_for(1))
            # monotonicity is compared over one common set of endpoint pairs
            k1 = enlargement_fellow_travel(inst.coned, 1, inst.budget)
            k2 = enlargement_fellow_travel(inst.coned, 2, inst.budget)
            kappas[inst.name] = (full.kappa, k1.kappa, k2.kappa)
            if not full.exhaustive or not math.isfinite(full.kappa) or k1.kappa > k2.kappa:
                bad.append(inst.name)
            if full.kappa > FROZEN[inst.name]["kappa"]["1"]:
                bad.append(inst.name)
    report(4, not bad and clk.seconds < 300, clk.seconds, f"kappa (L1 all pairs, L1 and L2 near pairs) {kappas} bad={bad}")
    assert not bad
    assert clk.seconds < 300


def test_criterion_05_hyperbolicity(suite):
    with Clock() as clk:
        trees = [i for i in suite if i.name in ("tree_paths", "random_tree")]
        tree_ok = all(delta_slim(i.base, 0, math.inf).delta_slim == 0 for i in trees)
        c12 = cycle(12)
        c12_val = delta_slim(c12, 0, math.inf).delta_slim
        c12_ok = c12_val == 3 == brute_slim(c12)
        rel = {}
        for inst in suite:
            rep = delta_slim(inst.base, inst.center, inst.radius)
            rel[inst.name] = (rep.delta_slim, rep.delta_4pt)
        rel_ok = all(d4 <= 8 * ds + 0.5 and ds <= 8 * d4 + 0.5 for ds, d4 in rel.values())
    ok = tree_ok and c12_ok and rel_ok
    report(5, ok and clk.seconds < 30, clk.seconds, f"C12={c12_val} (slim, 4pt) {rel}")
    assert tree_ok and c12_ok and rel_ok
    assert clk.seconds < 30


def test_criterion_06_quasiconvexity(suite):
    with Clock() as clk:
        worst = {}
        bad = []
        for inst in suite:
            budget = inst.budget_for(1)
            est = estimate_penetration(inst.coned, 1, budget)
            if not verify_bcp(inst.coned, 1, est.p, budget).passed:
                continue
            ks = []
            for c in inst.family:
                q = quasiconvexity_constant(inst.base, inst.family.members[c], inst.center, inst.radius)
                if q.truncated:
                    bad.append((inst.name, c))
                ks.append(q.k)
            worst[inst.name] = max(ks, default=0)
        regress = {n: k for n, k in worst.items() if k > FROZEN[n]["quasiconvexity"]}
    ok = len(worst) == len(suite) and not bad and not regress
    report(6, ok and clk.seconds < 60, clk.seconds, f"max k {worst} regressions={regress}")
    assert ok
    assert clk.seconds < 60


def test_criterion_07_surgery_bound(timed_inv8):
    inv, build = timed_inv8
    with Clock() as clk:
        done, exhausted, violations = Counter(), Counter(), []
        inv.preload(itertools.combinations(inv.discs, 2))
        for D, E in itertools.permutations(inv.discs, 2):
            i = inv.iota(D, E)
            if i > 6:
                continue
            try:
                path = DG.surgery_path(D, E, inv)
            except DG.SearchExhausted:
                exhausted[i] += 1
                continue
            done[i] += 1
            if 2 * (len(path) - 1) > i + 2:
                violations.append((D.word, E.word, "length"))
            # every surgery step is a move towards E that drops the intersection by at least 2
            for x, y in zip(path[:-1], path[1:-1]):
                if inv.iota(x, y) != 0 or inv.iota(x, E) - inv.iota(y, E) < 2:
                    violations.append((D.word, E.word, x.word, y.word))
            if inv.iota(path[-2], path[-1]) != 0:
                violations.append((D.word, E.word, "last"))
    total = clk.seconds + build
    rate = {i: exhausted[i] / (exhausted[i] + done[i]) for i in sorted(set(done) | set(exhausted))}
    ok = not violations and all(exhausted[i] == 0 for i in (1, 2, 3, 4))
    report(7, ok and total < 600, total, f"pairs by iota {dict(sorted(done.items()))} exhaustion rate {rate}")
    assert ok
    assert total < 600


def test_criterion_08_tower_nesting(timed_inv8):
    inv, build = timed_inv8
    with Clock() as clk:
        levels = DG.tower(inv)
        edges = {k: inst.edge_set() for k, inst in levels.items()}
        nested = edges["DG"] <= edges[3] <= edges[2] <= edges[1]
        dm = {k: inst.graph.distance_matrix() for k, inst in levels.items()}
        ordered = bool((dm[1] <= dm[2]).all() and (dm[2] <= dm[3]).all() and (dm[3] <= dm["DG"]).all())
        connected = levels[3].graph.is_connected()
    total = clk.seconds + build
    ok = nested and ordered and connected
    report(8, ok and total < 600, total,
           f"edges {({k: len(e) for k, e in edges.items()})} connected={connected} (inventory max_len = 8)")
    assert ok
    assert total < 600


def test_criterion_09_surface_model():
    with Clock() as clk:
        inv = build_inventory(6)
        basics = (intersection_number("a", "b") == 1 and intersection_number("b", "d") == 0
                  and disc_bounding("b") and not disc_bounding("a"))
        nonzero = [c.word for c in inv.curves if intersection_number(c, c, inv.model) != 0]
        failures = len(inv.exclusions)
    ok = basics and not nonzero and failures == 0 and inv.model.eps == 1e-9
    report(9, ok and clk.seconds < 120, clk.seconds,
           f"{len(inv.curves)} simple curves, self-intersecting={nonzero[:3]}, precision failures={failures}")
    assert ok
    assert clk.seconds < 120


def test_criterion_10_determinism(tmp_path):
    outs = []
    with Clock() as clk:
        for workers in (1, 2):
            out = tmp_path / f"w{workers}"
            args = ["handlebody", "--max-len", "6", "--k", "3", "--workers", str(workers), "--out", str(out)]
            assert main(args) == 0
            outs.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    same = outs[0] == outs[1]
    report(10, same, clk.seconds, f"files {sorted(outs[0])} identical={same}")
    assert same and set(outs[0]) == {"inventory.json", "instance.json", "instance.dot", "report.csv"}
