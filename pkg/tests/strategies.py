"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from coarsekit.graph import build_graph


@st.composite
def connected_graphs(draw, min_n=1, max_n=12, extra=8):
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    for _ in range(draw(st.integers(0, extra))):
        a, b = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return build_graph(sorted(edges), n=n)


@st.composite
def graphs_with_family(draw, max_n=10, max_members=3):
    from coarsekit.electrify import PeripheralFamily

    g = draw(connected_graphs(min_n=2, max_n=max_n, extra=4))
    members = {}
    for i in range(draw(st.integers(0, max_members))):
        c = draw(st.integers(0, g.n - 1))
        members[f"m{i}"] = g.ball(c, draw(st.integers(0, 2)))
    return g, PeripheralFamily(g, members)
