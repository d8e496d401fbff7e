from __future__ import annotations

from hypothesis import strategies as st

from hgraphs.core import SimpleGraph


@st.composite
def simple_graphs(draw, min_n: int = 1, max_n: int = 8) -> SimpleGraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return SimpleGraph(n, frozenset())
    edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    return SimpleGraph.from_edges(n, edges)
