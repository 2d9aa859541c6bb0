"""Centered and p-centered colorings with certification, and the
low tree-depth coloring pipeline.

A coloring is centered when every connected subgraph has a colour that
appears exactly once in it, and p-centered when every connected subgraph
either has such a colour or sees at least p distinct colours.  Restricting
a p-centered coloring to any i <= p - 1 colour classes leaves a centered
coloring with i colours, so those classes induce a subgraph of tree-depth
at most i; that induced-tree-depth property is the certificate this module
checks, since it is exactly what the downstream consumers rely on.

The generator is verify-and-retry: augment the graph, colour the
augmentation greedily in reverse degeneracy order, certify, and double the
number of augmentation steps on failure.  The all-distinct coloring is an
always-valid fallback, so termination is unconditional.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Graph, connected_components, induced_subgraph, underlying_graph
from .augmentation import augment
from .errors import DomainError, NotCenteredError, SizeLimitError
from .forests import RootedForest, make_forest
from .orientation import orient
from .treedepth import treedepth_decide

DEFAULT_CERTIFY_LIMIT = 20


@dataclass(frozen=True)
class Coloring:
    """colors[v] in 1..num_colors for every vertex v (colors[0] unused)."""

    colors: tuple[int, ...]
    num_colors: int

    def color_class(self, c: int) -> list[int]:
        return [v for v in range(1, len(self.colors)) if self.colors[v] == c]

    def used_colors(self) -> list[int]:
        return sorted(set(self.colors[1:]))


def _scan_connected_subsets(G: Graph, coloring: Coloring, p: int | None, limit: int) -> bool:
    """Exhaustively test the (p-)centered condition on connected subgraphs.

    Walks every connected vertex subset once, maintaining colour counts
    incrementally; returns False on the first violating subset.  A
    connected subgraph violates iff its vertex set does, so checking
    induced connected subsets is enough.
    """
    n = G.n
    if n > limit:
        raise SizeLimitError(
            f"graph order {n} exceeds the certification limit {limit}"
        )
    if n == 0:
        return True
    adjm = [0] * n
    for (u, v) in G.edges:
        adjm[u - 1] |= 1 << (v - 1)
        adjm[v - 1] |= 1 << (u - 1)
    color = [coloring.colors[i + 1] for i in range(n)]
    counts = [0] * (coloring.num_colors + 1)
    state = {"unique": 0, "distinct": 0}

    def add(v: int) -> None:
        c = color[v]
        counts[c] += 1
        if counts[c] == 1:
            state["unique"] += 1
            state["distinct"] += 1
        elif counts[c] == 2:
            state["unique"] -= 1

    def remove(v: int) -> None:
        c = color[v]
        counts[c] -= 1
        if counts[c] == 0:
            state["unique"] -= 1
            state["distinct"] -= 1
        elif counts[c] == 1:
            state["unique"] += 1

    full = (1 << n) - 1
    allowed = 0

    def rec(S: int, frontier: int, banned: int) -> bool:
        if state["unique"] == 0 and (p is None or state["distinct"] < p):
            return False
        ext = frontier & ~banned
        b = banned
        while ext:
            low = ext & -ext
            ext ^= low
            v = low.bit_length() - 1
            newS = S | low
            add(v)
            ok = rec(newS, (frontier | (adjm[v] & allowed)) & ~newS, b)
            remove(v)
            if not ok:
                return False
            b |= low
        return True

    for s in range(n):
        allowed = full & ~((1 << (s + 1)) - 1)
        add(s)
        ok = rec(1 << s, adjm[s] & allowed, 0)
        remove(s)
        if not ok:
            return False
    return True


def is_centered(G: Graph, coloring: Coloring, *, limit: int = DEFAULT_CERTIFY_LIMIT) -> bool:
    """Every connected subgraph has a uniquely occurring colour (exhaustive)."""
    return _scan_connected_subsets(G, coloring, None, limit)


def is_p_centered(
    G: Graph, coloring: Coloring, p: int, *, limit: int = DEFAULT_CERTIFY_LIMIT
) -> bool:
    """Unique colour or at least p distinct colours, in every connected subgraph."""
    if p <= 1:
        return True
    return _scan_connected_subsets(G, coloring, p, limit)


def centered_to_forest(G: Graph, coloring: Coloring) -> RootedForest:
    """Elimination forest from a centered coloring.

    Per component, the root is the vertex of the lowest colour occurring
    exactly once; recursion continues on the component minus its root.
    Height is bounded by the number of distinct colours in the component.
    """
    colors = coloring.colors
    parent: dict[int, int] = {}
    stack: list[tuple[list[int], int]] = [
        (comp, 0) for comp in reversed(connected_components(G))
    ]
    while stack:
        comp, par = stack.pop()
        counts: dict[int, int] = {}
        for v in comp:
            counts[colors[v]] = counts.get(colors[v], 0) + 1
        unique = sorted(c for c, k in counts.items() if k == 1)
        if not unique:
            raise NotCenteredError(
                f"no uniquely occurring colour in component {comp[:8]}..."
                if len(comp) > 8
                else f"no uniquely occurring colour in component {comp}"
            )
        root_color = unique[0]
        root = next(v for v in comp if colors[v] == root_color)
        parent[root] = par
        rest = [v for v in comp if v != root]
        if rest:
            for sub in reversed(connected_components(G, within=rest)):
                stack.append((sub, root))
    return make_forest(G.n, {v: parent.get(v, 0) for v in range(1, G.n + 1)})


def greedy_coloring(H: Graph) -> Coloring:
    """Greedy colouring in reverse degeneracy order, lowest colour first.

    Uses at most delta_max(H) + 1 colours.
    """
    _, order = orient(H)
    colors = [0] * (H.n + 1)
    for v in reversed(order.order):
        taken = {colors[w] for w in H.adj[v] if colors[w]}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return Coloring(colors=tuple(colors), num_colors=max(colors[1:], default=0))


def certify_low_tdepth(
    G: Graph, coloring: Coloring, p: int, *, limit: int = DEFAULT_CERTIFY_LIMIT
) -> bool:
    """Check that every union of i <= p - 1 colour classes induces a
    subgraph of tree-depth at most i."""
    if G.n > limit:
        raise SizeLimitError(
            f"graph order {G.n} exceeds the certification limit {limit}"
        )
    by_color: dict[int, list[int]] = {}
    for v in range(1, G.n + 1):
        by_color.setdefault(coloring.colors[v], []).append(v)
    used = sorted(by_color)
    for i in range(1, p):
        if i > len(used):
            break
        for classes in combinations(used, i):
            verts = [v for c in classes for v in by_color[c]]
            if not verts:
                continue
            sub, _ = induced_subgraph(G, verts)
            if not treedepth_decide(sub, i):
                return False
    return True


def low_tdepth_coloring(
    G: Graph, p: int, *, certify_limit: int = DEFAULT_CERTIFY_LIMIT
) -> Coloring:
    """Colouring whose every i <= p - 1 classes induce tree-depth <= i.

    Augment-colour-certify with doubling step counts; graphs above the
    certification limit take the first candidate on trust.  Falls back to
    the all-distinct (hence centered) colouring, so this always succeeds.
    """
    if p < 1:
        raise DomainError(f"target p must be >= 1, got {p}")
    n = G.n
    if n == 0:
        return Coloring(colors=(0,), num_colors=0)
    if G.m == 0:
        return Coloring(colors=(0,) + (1,) * n, num_colors=1)

    steps = p
    cap = max(4 * p, 2 * n)
    while steps <= cap:
        trace = augment(G, steps)
        candidate = greedy_coloring(underlying_graph(trace.final))
        if n > certify_limit:
            return candidate
        if certify_low_tdepth(G, candidate, p, limit=certify_limit):
            return candidate
        if trace.transitivity_added[-1] == 0 and trace.fraternity_added[-1] == 0:
            break  # augmentation saturated; more steps change nothing
        steps *= 2
    return Coloring(colors=(0,) + tuple(range(1, n + 1)), num_colors=n)
