"""Kernel backend selection.

The compiled extension is used when it imports; setting
``COARSEKIT_PURE_PYTHON=1`` forces the reference implementation.
"""

import os

from . import _pykernels

_impl = _pykernels
if os.environ.get("COARSEKIT_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.BACKEND
OK = _pykernels.OK
TRIVIAL = _pykernels.TRIVIAL
AMBIGUOUS = _pykernels.AMBIGUOUS

bfs = _impl.bfs
all_pairs = _impl.all_pairs
four_point_2delta = _impl.four_point_2delta
rotation_walk = _impl.rotation_walk
cutting_check = _impl.cutting_check
general_walk = _impl.general_walk
lift_set = _impl.lift_set
count_crossings = _impl.count_crossings
enumerate_cutting_words = _impl.enumerate_cutting_words
qg_paths = _impl.qg_paths


def backends():
    """Available kernel modules keyed by name (used by the benchmark and tests)."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["compiled"] = _ckernels
    except ImportError:
        pass
    return out
