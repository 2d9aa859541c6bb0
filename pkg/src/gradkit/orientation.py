"""Acyclic low-indegree orientation by iterated minimum-degree removal.

Repeatedly removing a vertex of minimum remaining degree and directing its
remaining edges toward it yields an acyclic orientation whose maximum
indegree equals the degeneracy of the graph, which never exceeds the
maximum average degree taken over subgraphs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .core import ArcListDigraph, Graph


@dataclass(frozen=True)
class DegeneracyOrder:
    """Removal sequence of the peeling, plus the largest degree at removal."""

    order: tuple[int, ...]
    delta_max: int


def orient(G: Graph) -> tuple[ArcListDigraph, DegeneracyOrder]:
    """Orient G acyclically with maximum indegree = degeneracy(G).

    Ties between equal-degree vertices go to the lowest vertex id, so the
    output is deterministic.  Stale heap entries are skipped lazily; every
    degree decrement pushes one entry, so the heap does O(n + m) pushes.
    All arc weights are 1.  The edge {v, w} becomes the arc w -> v when v
    is removed first.
    """
    n = G.n
    deg = [0] * (n + 1)
    for v in range(1, n + 1):
        deg[v] = len(G.adj[v])
    heap: list[tuple[int, int]] = [(deg[v], v) for v in range(1, n + 1)]
    heapq.heapify(heap)

    removed = [False] * (n + 1)
    D: list[list[tuple[int, int, int]]] = [[] for _ in range(n + 1)]
    order: list[int] = []
    delta_max = 0
    m = 0
    push = heapq.heappush
    pop = heapq.heappop
    while heap:
        d, v = pop(heap)
        if removed[v] or d != deg[v]:
            continue  # stale entry
        removed[v] = True
        order.append(v)
        if d > delta_max:
            delta_max = d
        row = D[v]
        for w in G.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                push(heap, (deg[w], w))
                m += 1
                row.append((w, m, 1))

    dg = ArcListDigraph(
        n=n,
        m=m,
        D=tuple(tuple(row) for row in D),
        md=max((len(row) for row in D), default=0),
    )
    return dg, DegeneracyOrder(order=tuple(order), delta_max=delta_max)
