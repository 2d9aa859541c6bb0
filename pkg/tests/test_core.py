import io

import pytest
from hypothesis import given

from gradkit.core import (
    build_digraph,
    build_graph,
    has_arc,
    induced_subgraph,
    connected_components,
    underlying_graph,
)
from gradkit.errors import InputError
from gradkit.orientation import orient
from gradkit import textio

from conftest import raw_graphs

# the worked 5-vertex, 7-arc digraph used throughout the docs
EXAMPLE_ARCS = [(1, 2), (1, 3), (3, 4), (2, 4), (4, 2), (2, 5), (5, 4)]


def test_build_graph_collapses_duplicates():
    G = build_graph(3, [(1, 2), (2, 1), (2, 3)])
    assert G.m == 2
    assert G.edges == ((1, 2), (2, 3))


def test_build_graph_example_digraph_underlying():
    G = build_graph(5, EXAMPLE_ARCS)
    assert G.m == 6  # the antiparallel 2-4 pair collapses


def test_build_graph_single_vertex():
    G = build_graph(1, [])
    assert (G.n, G.m) == (1, 0)


def test_build_graph_removes_loops_and_sorts():
    G = build_graph(4, [(3, 3), (4, 1), (2, 1)])
    assert G.edges == ((1, 2), (1, 4))
    assert G.adj[1] == (2, 4)


def test_build_graph_out_of_range():
    with pytest.raises(InputError, match=r"\(1, 7\)"):
        build_graph(5, [(1, 7)])


def test_build_digraph_matches_worked_example():
    dg = build_digraph(5, EXAMPLE_ARCS)
    assert dg.m == 7
    assert [e[:2] for e in dg.D[2]] == [(1, 1), (4, 5)]
    assert sorted(src for (src, _, _) in dg.D[4]) == [2, 3, 5]
    assert dg.D[1] == ()
    assert dg.md == 3


def test_build_digraph_min_weight_merge():
    dg = build_digraph(2, [(1, 2, 3), (1, 2, 1)])
    assert dg.m == 1
    assert has_arc(dg, 1, 2) == 1


def test_build_digraph_empty():
    dg = build_digraph(3, [])
    assert all(dg.D[v] == () for v in range(1, 4))


def test_build_digraph_rejects_loops():
    with pytest.raises(InputError, match="loop"):
        build_digraph(3, [(2, 2)])


def test_has_arc():
    dg = build_digraph(5, EXAMPLE_ARCS)
    assert has_arc(dg, 1, 2) == 1
    assert has_arc(dg, 2, 1) is None
    assert has_arc(dg, 3, 3) is None


def test_has_arc_agrees_with_membership_exhaustively():
    from gradkit.generators import grid

    examples = [build_digraph(5, EXAMPLE_ARCS), orient(grid(5, 10))[0]]
    for dg in examples:  # n up to 50, every ordered pair
        arcs = {(u, v) for (u, v, _) in dg.arcs()}
        for x in range(1, dg.n + 1):
            for y in range(1, dg.n + 1):
                assert (has_arc(dg, x, y) is not None) == ((x, y) in arcs)


def test_underlying_graph():
    dg = build_digraph(5, EXAMPLE_ARCS)
    assert underlying_graph(dg).m == 6
    dg2 = build_digraph(2, [(1, 2), (2, 1)])
    assert underlying_graph(dg2).edges == ((1, 2),)
    dg3 = build_digraph(4, [])
    assert underlying_graph(dg3).m == 0


@given(raw_graphs())
def test_adjacency_symmetric(G):
    for v in range(1, G.n + 1):
        for w in G.adj[v]:
            assert v in G.adj[w]


@given(raw_graphs())
def test_build_graph_idempotent(G):
    assert build_graph(G.n, G.edges) == G


@given(raw_graphs())
def test_orientation_round_trip(G):
    dg, _ = orient(G)
    assert underlying_graph(dg) == G


def test_induced_subgraph_relabels():
    G = build_graph(5, [(1, 2), (2, 4), (4, 5)])
    sub, ids = induced_subgraph(G, [2, 4, 5])
    assert ids == (2, 4, 5)
    assert sub.edges == ((1, 2), (2, 3))


def test_connected_components():
    G = build_graph(6, [(1, 2), (4, 5)])
    assert connected_components(G) == [[1, 2], [3], [4, 5], [6]]
    assert connected_components(G, within=[1, 4, 5]) == [[1], [4, 5]]


def test_textio_graph_round_trip():
    G = build_graph(5, EXAMPLE_ARCS)
    text = textio.graph_to_text(G, comments=["example"])
    assert text.startswith("# example\n5 6\n")
    assert text.endswith("\n")
    assert textio.read_graph(io.StringIO(text)) == G


def test_textio_digraph_round_trip():
    dg = build_digraph(5, [(u, v, w) for w, (u, v) in enumerate(EXAMPLE_ARCS, start=1)])
    text = textio.digraph_to_text(dg)
    back = textio.read_digraph(io.StringIO(text))
    assert sorted(back.arcs()) == sorted(dg.arcs())


def test_textio_reports_line_numbers():
    with pytest.raises(InputError, match="line 3"):
        textio.read_graph(io.StringIO("# c\n3 2\n1 oops\n2 3\n"))
    with pytest.raises(InputError, match="header"):
        textio.read_graph(io.StringIO(""))
    with pytest.raises(InputError, match="announced"):
        textio.read_graph(io.StringIO("3 2\n1 2\n"))


def test_textio_vertex_set_and_pairs():
    assert textio.read_vertex_set(io.StringIO("1 2\n# x\n5\n")) == frozenset({1, 2, 5})
    assert textio.read_pairs(io.StringIO("1 2\n3 4\n")) == [(1, 2), (3, 4)]
    assert textio.read_family(io.StringIO("1 2\n3\n")) == [frozenset({1, 2}), frozenset({3})]
