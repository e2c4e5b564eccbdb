import os

from hypothesis import given, strategies as st

from coarsekit.parallel import parallel_map, resolve_workers


def square(x):
    return x * x


def test_resolve_workers():
    assert resolve_workers(None) == resolve_workers(0) == (os.cpu_count() or 1)
    assert resolve_workers(3) == 3


@given(st.lists(st.integers(-50, 50), max_size=20), st.integers(1, 3))
def test_order_preserved(xs, workers):
    assert parallel_map(square, xs, workers) == [x * x for x in xs]
