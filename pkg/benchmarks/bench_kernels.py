"""Compiled kernels against the pure-Python reference.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one line per kernel with the best-of-N time for each backend and the
speed-up.  Both backends are checked to return the same answer first.
"""

import argparse
import time

import numpy as np

from coarsekit import kernels
from coarsekit.electrify import PeripheralFamily, cone_off, gap_table
from coarsekit.graph import build_graph
from coarsekit.surface import default_model, parse_word


def grid(w, h):
    edges = []
    for r in range(h):
        for c in range(w):
            v = r * w + c
            if c + 1 < w:
                edges.append((v, v + 1))
            if r + 1 < h:
                edges.append((v, v + w))
    return build_graph(edges)


def cases():
    m = default_model()
    g = grid(30, 30)
    dm_small = grid(7, 7).distance_matrix()
    c = build_graph([(i, (i + 1) % 16) for i in range(16)])
    cg = cone_off(c, PeripheralFamily(c, {"A": range(0, 9), "B": range(6, 15)}))
    cdm = cg.graph.distance_matrix()
    gaps = gap_table(2, int(cdm.max()))
    x = np.asarray(m.cutting_sequence(parse_word("abAcdC")), dtype=np.int64)
    y = np.asarray(m.cutting_sequence(parse_word("aBAdbD")), dtype=np.int64)

    def crossing(mod):
        _, px, _ = mod.rotation_walk(x, m.gens, m.tight, m.eps)
        _, py, _ = mod.rotation_walk(y, m.gens, m.tight, m.eps)
        _, lifts = mod.lift_set(py, m.nbhd, m.tight, m.eps)
        return mod.count_crossings(px, lifts, m.tight, m.eps)

    def qg(mod):
        flat, offsets, _ = mod.qg_paths(cg.graph.indptr, cg.graph.indices, cdm, 0, 8, gaps, cg.is_cone, 10**6)
        return len(offsets) - 1

    return {
        "all_pairs (900-vertex grid)": lambda mod: int(mod.all_pairs(g.indptr, g.indices).sum()),
        "four_point (49 points)": lambda mod: int(mod.four_point_2delta(dm_small)),
        "crossing count (length-6 curves)": crossing,
        "enumerate cutting words (n=5)": lambda mod: len(mod.enumerate_cutting_words(5, m.gens, m.tight, m.eps)),
        "qg paths (C16, two arcs, L=2)": qg,
    }


def best(fn, mod, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(mod)
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    mods = kernels.backends()
    if "compiled" not in mods:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")
    print(f"{'kernel':36s} {'python':>10s} {'compiled':>10s} {'speed-up':>9s}")
    for name, fn in cases().items():
        assert fn(mods["python"]) == fn(mods["compiled"]), name
        tp = best(fn, mods["python"], args.repeat)
        tc = best(fn, mods["compiled"], args.repeat)
        print(f"{name:36s} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
