"""Command-line front end: ``coarsekit cone | certify | handlebody``.

Exit codes: 0 success, 2 invalid input, 3 inconclusive result under
``--strict``, 4 precision failures in the curve model.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from .graph import GraphError, MetricGraph

EXIT_OK, EXIT_INVALID, EXIT_INCONCLUSIVE, EXIT_PRECISION = 0, 2, 3, 4

# flags that affect resources but never results
_NOT_EMBEDDED = {"workers", "out", "func", "command"}


class UsageError(Exception):
    pass


def _config(args) -> dict:
    cfg = {k: v for k, v in sorted(vars(args).items()) if k not in _NOT_EMBEDDED}
    cfg["command"] = args.command
    for k, v in cfg.items():
        if isinstance(v, float) and math.isinf(v):
            cfg[k] = "inf"
    return cfg


def _write(out_dir, name, text):
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, name)
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    os.replace(tmp, path)
    return path


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _csv_with_header(rows, cfg, inputs) -> str:
    from .hyplab import report_csv

    head = f"# config {json.dumps(cfg, sort_keys=True)}\n# inputs {json.dumps(inputs, sort_keys=True)}\n"
    return head + report_csv(rows)


def _parse_L(text) -> Fraction:
    try:
        L = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--L must be a number, got {text!r}") from exc
    if L < 1:
        raise UsageError("--L must be >= 1")
    return L


# ---------------------------------------------------------------------------
# cone


def cmd_cone(args) -> int:
    from .electrify import FamilyError, PeripheralFamily, cone_off

    if not args.input or not args.family:
        raise UsageError("cone needs --input GRAPH.json and --family FAMILY.json")
    try:
        g = MetricGraph.from_dict(_read_json(args.input))
        fam = PeripheralFamily.from_dict(g, _read_json(args.family))
    except (FamilyError, GraphError, KeyError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    cg = cone_off(g, fam)
    doc = cg.as_dict()
    doc["config"] = _config(args)
    _write(args.out, "coned.json", _dump(doc))
    _write(args.out, "coned.dot", f"// config {json.dumps(doc['config'], sort_keys=True)}\n" + cg.to_dot())
    return EXIT_OK


# ---------------------------------------------------------------------------
# certify


def _least_guessing_constant(g, cg, verts):
    from .electrify import enlargement_path
    from .hyplab import guessing_geodesics_check

    def path(x, y):
        return enlargement_path(cg, x, y) if x != y else (x,)

    lo, hi = 0, max(1, int(g.distance_matrix()[:, verts].max()) * 2 + 2)
    if not guessing_geodesics_check(g, path, verts, hi).passed:
        return None
    while lo < hi:
        mid = (lo + hi) // 2
        if guessing_geodesics_check(g, path, verts, mid).passed:
            hi = mid
        else:
            lo = mid + 1
    return lo


def certify_rows(cg, L, budget, center=0, radius=math.inf, R=None, workers=1) -> list[dict]:
    """Every measurement of ``cmd_certify`` as report rows."""
    from .electrify import (check_r_bounded, detect_wide, enlargement_fellow_travel,
                            estimate_penetration, verify_bcp, wideness_transfer_check)
    from .graph import geodesic
    from .hyplab import delta_slim, quasiconvexity_constant

    name = cg.fingerprint()
    rows = []
    budget_note = f"budget max_paths={budget.max_paths} max_distance={budget.max_distance}"

    def row(measurement, verdict, detail="", **vals):
        r = {"instance": name, "measurement": measurement, "L": str(L), "verdict": verdict, "detail": detail}
        r.update(vals)
        rows.append(r)

    bnd = check_r_bounded(cg.family)
    row("r_bounded", "PASS" if bnd.r != math.inf else "FAIL", f"r={bnd.r}")
    pc = estimate_penetration(cg, L, budget, workers)
    row("penetration", "PASS" if pc.exhaustive else "INCONCLUSIVE",
        "" if pc.exhaustive else budget_note, p=pc.p)
    v = verify_bcp(cg, L, pc.p, budget, workers)
    row("bcp", v.status, v.detail if v.status != "INCONCLUSIVE" else f"{v.detail}; {budget_note}", p=pc.p)
    w = wideness_transfer_check(cg, L, budget, pc.p, workers)
    row("wideness_transfer", w.status, w.detail if w.status != "INCONCLUSIVE" else f"{w.detail}; {budget_note}",
        p=pc.p)
    ft = enlargement_fellow_travel(cg, L, budget, workers)
    row("fellow_travel", "PASS" if ft.exhaustive else "INCONCLUSIVE",
        "" if ft.exhaustive else budget_note, kappa=ft.kappa)
    g = cg.base
    if g.n:
        rep = delta_slim(g, center, radius, workers=workers)
        row("delta_slim", "INCONCLUSIVE" if rep.truncated else "PASS",
            f"delta_4pt={rep.delta_4pt}", delta=rep.delta_slim)
        verts = g.ball(center, radius)
        n = _least_guessing_constant(g, cg, verts)
        row("guessing_geodesics", "PASS" if n is not None else "FAIL", f"n={n}")
        worst = 0
        for mname in cg.family:
            q = quasiconvexity_constant(g, cg.family.members[mname], center, radius)
            worst = max(worst, q.k)
        row("quasiconvexity", "PASS", f"max_k={worst}")
        if R is not None:
            wide = 0
            for x in verts:
                for y in verts:
                    if x < y and g.distance_matrix()[x, y] >= 0:
                        wide += len(detect_wide(cg, geodesic(cg.graph, x, y), R))
            row("wide_passages", "PASS", f"R={R} count={wide}")
    return rows


def cmd_certify(args) -> int:
    from .electrify import Budget, ConedGraph, FamilyError

    if not args.input:
        raise UsageError("certify needs --input CONED.json")
    L = _parse_L(args.L)
    if args.cap < 1:
        raise UsageError("--cap must be >= 1")
    try:
        cg = ConedGraph.from_dict(_read_json(args.input))
    except (FamilyError, GraphError, KeyError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    if args.radius < 0:
        raise UsageError("--radius must be >= 0")
    budget = Budget(max_paths=args.cap, max_distance=args.max_distance)
    rows = certify_rows(cg, L, budget, 0, args.radius, args.R, args.workers)
    inputs = {"coned": cg.fingerprint(), "base": cg.base.fingerprint()}
    _write(args.out, "report.csv", _csv_with_header(rows, _config(args), inputs))
    if args.strict and any(r["verdict"] == "INCONCLUSIVE" for r in rows):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# ---------------------------------------------------------------------------
# handlebody


def handlebody_rows(inv, inst, coarser=None, workers=1) -> list[dict]:
    from .surface import thickness_check

    name = f"handlebody-{inv.max_len}"
    g = inst.graph
    rows = []

    def row(measurement, verdict, detail=""):
        rows.append({"instance": name, "measurement": measurement, "verdict": verdict,
                     "detail": f"{detail} (inventory max_len = {inv.max_len})".strip()})

    st = inv.stats
    row("inventory", "PASS" if not inv.exclusions else "FAIL",
        f"simple={st.get('simple', 0)} discs={st.get('discs', 0)} "
        f"escalations={st.get('escalations', 0)} precision_failures={len(inv.exclusions)}")
    row("thickness", thickness_check(inv).status)
    if g.n:
        dm = g.distance_matrix()
        row("connected", "PASS" if g.is_connected() else "FAIL",
            f"level={inst.level} vertices={g.n} edges={len(g.edges)} diameter={int(dm.max())}")
    else:
        row("connected", "PASS", f"level={inst.level} vertices=0 edges=0")
    if coarser is not None and g.n:
        from .discgraphs import export_to_engine
        from .electrify import cone_off
        from .hyplab import vertex_map_qi

        host, fam = export_to_engine(inst, coarser)
        cg = cone_off(host, fam)
        qi = vertex_map_qi(coarser.graph, cg.graph, lambda v: v)
        row("electrified_vs_coarser", "PASS" if not qi.degenerate else "DEGENERATE",
            f"members={len(fam)} A={qi.multiplicative} B={qi.additive}")
    return rows


def cmd_handlebody(args) -> int:
    from .discgraphs import build_disc_graph
    from .surface import FuchsianModel, build_inventory

    if args.k is None or not 1 <= args.k <= 3:
        raise UsageError(f"--k must be 1, 2 or 3 for genus 2, got {args.k}")
    if args.max_len < 0:
        raise UsageError("--max-len must be >= 0")
    if not 0 < args.eps < 1e-3:
        raise UsageError("--eps must lie in (0, 1e-3)")
    model = FuchsianModel(eps=args.eps, tight=args.eps / 100)
    inv = build_inventory(args.max_len, model, args.workers)
    inst = build_disc_graph(inv, args.k, args.workers)
    coarser = build_disc_graph(inv, args.k - 1, args.workers) if args.k > 1 else None
    cfg = _config(args)
    manifest = inv.manifest()
    manifest["config"] = cfg
    doc = inst.as_dict()
    doc["config"] = cfg
    _write(args.out, "inventory.json", _dump(manifest))
    _write(args.out, "instance.json", _dump(doc))
    _write(args.out, "instance.dot", f"// config {json.dumps(cfg, sort_keys=True)}\n" + inst.to_dot())
    rows = handlebody_rows(inv, inst, coarser, args.workers)
    inputs = {"inventory": inv.fingerprint(), "instance": inst.graph.fingerprint()}
    _write(args.out, "report.csv", _csv_with_header(rows, cfg, inputs))
    for ex in inv.exclusions:
        print(f"precision failure: {ex['word']}: {ex['reason']}", file=sys.stderr)
    return EXIT_PRECISION if inv.exclusions else EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coarsekit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", default=".", help="output directory")
        sp.add_argument("--workers", type=int, default=1, help="worker processes (0 = all cores)")

    c = sub.add_parser("cone", help="cone off a peripheral family")
    c.add_argument("--input", help="graph JSON")
    c.add_argument("--family", help="family JSON")
    common(c)
    c.set_defaults(func=cmd_cone)

    c = sub.add_parser("certify", help="measure and verify a coned graph")
    c.add_argument("--input", help="coned graph JSON")
    c.add_argument("--L", default="1", help="quasi-geodesic constant (>= 1, fractions allowed)")
    c.add_argument("--R", type=int, default=None, help="report passages at least this wide")
    c.add_argument("--radius", type=float, default=math.inf, help="ball radius around vertex 0")
    c.add_argument("--cap", type=int, default=200_000, help="paths kept per endpoint pair")
    c.add_argument("--max-distance", type=int, default=3, help="coned distance bound on endpoint pairs")
    c.add_argument("--strict", action="store_true", help="exit 3 when any row is inconclusive")
    common(c)
    c.set_defaults(func=cmd_certify)

    c = sub.add_parser("handlebody", help="curve inventory and disc graph pipeline")
    c.add_argument("--max-len", type=int, default=6, help="longest canonical word")
    c.add_argument("--k", type=int, default=3, help="level 1..3")
    c.add_argument("--eps", type=float, default=1e-9, help="floating-point decision margin")
    common(c)
    c.set_defaults(func=cmd_handlebody)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers < 0:
        print("coarsekit: error: --workers must be >= 0", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"coarsekit {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
