from __future__ import annotations

from hypothesis import strategies as st

from gradkit.core import Graph, build_graph


@st.composite
def raw_graphs(draw, max_n: int = 8, max_m: int = 16) -> Graph:
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return build_graph(0, [])
    m = draw(st.integers(min_value=0, max_value=max_m))
    pairs = draw(
        st.lists(
            st.tuples(st.integers(1, n), st.integers(1, n)),
            min_size=m,
            max_size=m,
        )
    )
    return build_graph(n, pairs)

