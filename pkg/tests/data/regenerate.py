"""Rewrite frozen.json from the current implementation.

Only run this deliberately: the acceptance tests treat these values as
ceilings that later runs must not exceed.
"""

import json
import math
import pathlib

from coarsekit.electrify import (enlargement_fellow_travel, enlargement_qg_constant, estimate_penetration,
                                 thin_triangle_constant)
from coarsekit.hyplab import delta_slim, quasiconvexity_constant
from coarsekit.suite import instances


def main():
    out = {}
    for inst in instances():
        cg, g = inst.coned, inst.base
        K = enlargement_qg_constant(cg)[0]
        out[inst.name] = {
            "fingerprint": cg.fingerprint(),
            "K": round(K, 9),
            "C": thin_triangle_constant(cg)[0],
            "delta_slim": delta_slim(g, inst.center, inst.radius).delta_slim,
            "quasiconvexity": max((quasiconvexity_constant(g, cg.family.members[m], inst.center, math.inf).k
                                   for m in cg.family), default=0),
            "p": {str(L): estimate_penetration(cg, L, inst.budget_for(L)).p for L in (1, 2)},
            "kappa": {str(L): enlargement_fellow_travel(cg, L, inst.budget_for(L)).kappa for L in (1, 2)},
        }
    path = pathlib.Path(__file__).with_name("frozen.json")
    path.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
