"""Canonical graph and digraph containers.

Vertices are the integers 1..n everywhere.  A Graph is a simple undirected
graph stored as a normalized edge list plus symmetric adjacency tuples.  An
ArcListDigraph is the in-arc list representation: D[v] collects one entry
(source, arc_id, weight) per arc ending at v, so "is there an arc x -> y"
is a scan of D[y] and costs O(max indegree).

Both containers are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InputError

Edge = tuple[int, int]
EdgeList = Sequence[Sequence[int]]  # raw (u, v) pairs, duplicates allowed
ArcEntry = tuple[int, int, int]  # (source, arc_id, weight)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n.

    edges holds each edge once as (u, v) with u < v, sorted ascending;
    adj[v] is the sorted tuple of neighbours of v (adj[0] is unused).
    """

    n: int
    m: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        b = self.adj[v]
        return v in a if len(a) <= len(b) else u in b

    def vertices(self) -> range:
        return range(1, self.n + 1)


@dataclass(frozen=True)
class ArcListDigraph:
    """Weighted simple digraph in in-arc list form.

    D[v] lists the arcs pointing at v, each as (source, arc_id, weight);
    arc ids are 1..m, weights are nonnegative integers, at most one arc
    per ordered pair and no loops.  md is the maximum indegree.
    """

    n: int
    m: int
    D: tuple[tuple[ArcEntry, ...], ...]
    md: int

    def in_degree(self, v: int) -> int:
        return len(self.D[v])

    def arcs(self) -> Iterator[tuple[int, int, int]]:
        """Yield (source, target, weight) in arc-id order."""
        order = sorted(
            (e, j, v, w) for v in range(1, self.n + 1) for (j, e, w) in self.D[v]
        )
        for _, j, v, w in order:
            yield (j, v, w)


def _check_vertex(x: int, n: int, what: str) -> None:
    if not isinstance(x, int) or not 1 <= x <= n:
        raise InputError(f"{what}: vertex {x!r} out of range 1..{n}")


def build_graph(n: int, raw_edges: EdgeList) -> Graph:
    """Build a simple Graph from a raw edge list.

    Loops are dropped and parallel edges are collapsed.  Deduplication uses
    a two-pass bucket sort (by max endpoint, then by min endpoint), so the
    whole construction is linear in n + len(raw_edges).
    """
    if n < 0:
        raise InputError(f"vertex count {n} is negative")
    norm: list[Edge] = []
    for pair in raw_edges:
        u, v = pair[0], pair[1]
        _check_vertex(u, n, f"edge ({u}, {v})")
        _check_vertex(v, n, f"edge ({u}, {v})")
        if u == v:
            continue
        norm.append((u, v) if u < v else (v, u))

    # two-pass bucket sort: stable pass on the max endpoint, then on the min
    buckets: list[list[Edge]] = [[] for _ in range(n + 1)]
    for e in norm:
        buckets[e[1]].append(e)
    by_max = [e for bucket in buckets for e in bucket]
    for bucket in buckets:
        bucket.clear()
    for e in by_max:
        buckets[e[0]].append(e)

    edges: list[Edge] = []
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    last: Edge | None = None
    for bucket in buckets:
        for e in bucket:
            if e == last:
                continue
            last = e
            edges.append(e)
            adj[e[0]].append(e[1])
            adj[e[1]].append(e[0])
    return Graph(
        n=n,
        m=len(edges),
        edges=tuple(edges),
        adj=tuple(tuple(sorted(a)) for a in adj),
    )


def build_digraph(n: int, arcs: Iterable[Sequence[int]]) -> ArcListDigraph:
    """Build an ArcListDigraph from (from, to[, weight]) triples.

    Duplicate ordered pairs are merged keeping the minimum weight; arc ids
    are assigned 1..m in order of first appearance of each surviving pair.
    Loops are rejected.  Omitted weights default to 1.
    """
    if n < 0:
        raise InputError(f"vertex count {n} is negative")
    seen: dict[int, int] = {}  # encoded pair -> index into pairs/weights
    pairs: list[Edge] = []
    weights: list[int] = []
    for arc in arcs:
        u, v = arc[0], arc[1]
        w = arc[2] if len(arc) > 2 else 1
        _check_vertex(u, n, f"arc ({u}, {v})")
        _check_vertex(v, n, f"arc ({u}, {v})")
        if u == v:
            raise InputError(f"arc ({u}, {v}): loops are not allowed")
        if w < 0:
            raise InputError(f"arc ({u}, {v}): negative weight {w}")
        key = u * (n + 1) + v
        idx = seen.get(key)
        if idx is None:
            seen[key] = len(pairs)
            pairs.append((u, v))
            weights.append(w)
        elif w < weights[idx]:
            weights[idx] = w

    D: list[list[ArcEntry]] = [[] for _ in range(n + 1)]
    for i, (u, v) in enumerate(pairs):
        D[v].append((u, i + 1, weights[i]))
    return ArcListDigraph(
        n=n,
        m=len(pairs),
        D=tuple(tuple(entries) for entries in D),
        md=max((len(entries) for entries in D), default=0),
    )


def has_arc(dg: ArcListDigraph, x: int, y: int) -> int | None:
    """Return the weight of arc (x, y) if present, else None.

    Scans D[y]; worst case md(dg) entries.
    """
    _check_vertex(x, dg.n, "has_arc")
    _check_vertex(y, dg.n, "has_arc")
    for (j, _, w) in dg.D[y]:
        if j == x:
            return w
    return None


def underlying_graph(dg: ArcListDigraph) -> Graph:
    """Forget directions and weights; antiparallel arc pairs become one edge."""
    return build_graph(dg.n, [(u, v) for (u, v, _) in dg.arcs()])


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the given vertices, relabelled to 1..k.

    Returns (subgraph, ids) where ids[i-1] is the original id of vertex i.
    """
    ids = sorted(set(vertices))
    for v in ids:
        _check_vertex(v, G.n, "induced_subgraph")
    index = {v: i + 1 for i, v in enumerate(ids)}
    sub_edges = [
        (index[u], index[v]) for (u, v) in G.edges if u in index and v in index
    ]
    return build_graph(len(ids), sub_edges), tuple(ids)


def connected_components(G: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components (sorted vertex lists) of G, or of G[within]."""
    if within is None:
        alive = [True] * (G.n + 1)
        universe: Iterable[int] = range(1, G.n + 1)
    else:
        alive = [False] * (G.n + 1)
        universe = sorted(set(within))
        for v in universe:
            alive[v] = True
    seen = [False] * (G.n + 1)
    comps: list[list[int]] = []
    for s in universe:
        if seen[s] or not alive[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = [s]
        while queue:
            v = queue.pop()
            for w in G.adj[v]:
                if alive[w] and not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    return len(connected_components(G)) == 1
