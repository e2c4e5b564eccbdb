"""Regression values for the fixed instances (see data/frozen.json)."""

import json
import math
import pathlib

import pytest

from coarsekit.electrify import estimate_penetration, thin_triangle_constant
from coarsekit.hyplab import delta_slim
from coarsekit.suite import by_name, instances

FROZEN = json.loads((pathlib.Path(__file__).parent / "data" / "frozen.json").read_text())
NAMES = sorted(FROZEN)


def test_ten_instances_with_unique_names():
    names = [i.name for i in instances()]
    assert sorted(names) == NAMES and len(names) == 10
    with pytest.raises(KeyError):
        by_name("nope")


@pytest.mark.parametrize("name", NAMES)
def test_instance_frozen(name):
    inst = by_name(name)
    want = FROZEN[name]
    assert inst.coned.fingerprint() == want["fingerprint"]
    assert thin_triangle_constant(inst.coned)[0] == want["C"]
    assert delta_slim(inst.base, 0, math.inf).delta_slim == want["delta_slim"]
    assert estimate_penetration(inst.coned, 1, inst.budget_for(1)).p == want["p"]["1"]


def test_penetration_grows_with_L():
    for name in NAMES:
        assert FROZEN[name]["p"]["1"] <= FROZEN[name]["p"]["2"]
