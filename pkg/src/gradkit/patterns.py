"""Counting, listing and deciding small-pattern containment.

The counting pipeline colours the host graph so that any h colour classes
induce a subgraph of tree-depth at most h, counts pattern copies inside
each union of at most h classes by dynamic programming over the
elimination-forest tree-decomposition, and combines the per-subset counts
by inclusion-exclusion so every copy is counted exactly once (a copy on h
vertices meets at most h colour classes).

"Copy" means a distinct subgraph of the host isomorphic to the pattern:
injective homomorphisms divided by the pattern's automorphism count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .coloring import Coloring, centered_to_forest, low_tdepth_coloring
from .core import Graph, build_graph, connected_components, induced_subgraph, is_connected
from .errors import DomainError, NotCenteredError, PatternError
from .forests import TreeDecomposition, dfs_forest, forest_to_decomposition, validate_decomposition

DEFAULT_PATTERN_LIMIT = 5

Copy = tuple[tuple[int, ...], frozenset[frozenset[int]]]


@dataclass(frozen=True)
class Pattern:
    graph: Graph
    aut_count: int


def _automorphism_count(H: Graph) -> int:
    edges = {frozenset(e) for e in H.edges}
    count = 0
    for perm in permutations(range(1, H.n + 1)):
        if all(frozenset((perm[u - 1], perm[v - 1])) in edges for (u, v) in H.edges):
            count += 1
    return count


def make_pattern(H: Graph, *, limit: int = DEFAULT_PATTERN_LIMIT) -> Pattern:
    """Wrap a connected pattern graph of order <= limit."""
    if H.n < 1:
        raise PatternError("pattern must have at least one vertex")
    if H.n > limit:
        raise PatternError(f"pattern order {H.n} exceeds the limit {limit}")
    if not is_connected(H):
        raise PatternError("disconnected patterns are not supported")
    return Pattern(graph=H, aut_count=_automorphism_count(H))


@dataclass
class CountReport:
    """total copies, split by the exact colour set each copy occupies."""

    total: int
    by_color_subset: dict[frozenset[int], int]
    listing: tuple[Copy, ...] | None = None


def count_on_decomposition(
    G_part: Graph,
    T: TreeDecomposition,
    H: Pattern | Graph,
    *,
    validate: bool = True,
    width_limit: int = 32,
) -> int:
    """Count distinct copies of H in G_part by DP over the decomposition.

    States are partial injective maps from pattern vertices to bag
    vertices, extended with a done marker for vertices already embedded in
    forgotten parts; the final tally is divided by |Aut(H)|.  Bags are
    effectively widened to unions along root paths, which is exact (no
    widening) for decompositions coming from elimination forests.
    """
    pat = H if isinstance(H, Pattern) else make_pattern(H)
    if T.width > width_limit:
        raise DomainError(f"decomposition width {T.width} exceeds the limit {width_limit}")
    if validate and not validate_decomposition(G_part, T):
        raise DomainError("decomposition is not valid for this graph")
    h = pat.graph.n
    if G_part.n == 0 or h > G_part.n:
        return 0

    hadj: list[list[int]] = [[] for _ in range(h)]
    for (a, b) in pat.graph.edges:
        hadj[a - 1].append(b - 1)
        hadj[b - 1].append(a - 1)
    gadj = [set(a) for a in G_part.adj]

    t = T.node_count()
    node_adj: list[list[int]] = [[] for _ in range(t)]
    for (a, b) in T.tree_edges:
        node_adj[a].append(b)
        node_adj[b].append(a)
    parent_node = [-1] * t
    children: list[list[int]] = [[] for _ in range(t)]
    order = [0]
    seen = [False] * t
    seen[0] = True
    for a in order:
        for b in node_adj[a]:
            if not seen[b]:
                seen[b] = True
                parent_node[b] = a
                children[a].append(b)
                order.append(b)
    intro: list[list[int]] = []
    for i in range(t):
        above = T.bags[parent_node[i]] if parent_node[i] >= 0 else frozenset()
        intro.append(sorted(T.bags[i] - above))

    UNSEEN, DONE = 0, -1
    init = (UNSEEN,) * h
    states: dict[tuple[int, ...], int] = {init: 1}

    def introduce(u: int) -> None:
        nonlocal states
        new: dict[tuple[int, ...], int] = {}
        for state, cnt in states.items():
            new[state] = new.get(state, 0) + cnt
            for x in range(h):
                if state[x] != UNSEEN:
                    continue
                ok = True
                for y in hadj[x]:
                    img = state[y]
                    if img > 0 and img not in gadj[u]:
                        ok = False
                        break
                if ok:
                    s2 = state[:x] + (u,) + state[x + 1 :]
                    new[s2] = new.get(s2, 0) + cnt
        states = new

    def forget(u: int) -> None:
        nonlocal states
        new: dict[tuple[int, ...], int] = {}
        for state, cnt in states.items():
            x_at_u = -1
            for x in range(h):
                if state[x] == u:
                    x_at_u = x
                    break
            if x_at_u < 0:
                new[state] = new.get(state, 0) + cnt
                continue
            if any(state[y] == UNSEEN for y in hadj[x_at_u]):
                continue  # an edge at x could never be verified: dead branch
            s2 = state[:x_at_u] + (DONE,) + state[x_at_u + 1 :]
            new[s2] = new.get(s2, 0) + cnt
        states = new

    stack: list[tuple[int, int]] = [(0, 0)]
    while stack:
        node, ci = stack[-1]
        if ci == 0:
            for u in intro[node]:
                introduce(u)
        if ci < len(children[node]):
            stack[-1] = (node, ci + 1)
            stack.append((children[node][ci], 0))
        else:
            for u in reversed(intro[node]):
                forget(u)
            stack.pop()

    done_state = (DONE,) * h
    embeddings = states.get(done_state, 0)
    if embeddings % pat.aut_count:
        raise AssertionError("embedding count not divisible by automorphism count")
    return embeddings // pat.aut_count


def _restrict_coloring(col: Coloring, ids: tuple[int, ...]) -> Coloring:
    colors = (0,) + tuple(col.colors[v] for v in ids)
    return Coloring(colors=colors, num_colors=col.num_colors)


def _count_in_union(sub: Graph, subcol: Coloring, pat: Pattern) -> int:
    """Count pattern copies in one colour-class union.

    The restricted coloring is centered there whenever the source coloring
    is p-centered; if it is not (large graphs are colored on trust), fall
    back to a DFS forest, which is always a valid elimination forest.
    """
    if sub.n < pat.graph.n or sub.m < pat.graph.m:
        return 0
    try:
        forest = centered_to_forest(sub, subcol)
    except NotCenteredError:
        forest = dfs_forest(sub)
    T = forest_to_decomposition(forest)
    return count_on_decomposition(sub, T, pat, validate=False, width_limit=max(32, sub.n))


def _exact_counts(G: Graph, pat: Pattern, col: Coloring) -> dict[frozenset[int], int]:
    """Copy counts per exact colour set, via inclusion-exclusion."""
    h = pat.graph.n
    by_color: dict[int, list[int]] = {}
    for v in range(1, G.n + 1):
        by_color.setdefault(col.colors[v], []).append(v)
    used = sorted(by_color)
    subsetcount: dict[frozenset[int], int] = {frozenset(): 0}
    for size in range(1, min(h, len(used)) + 1):
        for C in combinations(used, size):
            verts = [v for c in C for v in by_color[c]]
            key = frozenset(C)
            if len(verts) < h:
                subsetcount[key] = 0
                continue
            sub, ids = induced_subgraph(G, verts)
            subsetcount[key] = _count_in_union(sub, _restrict_coloring(col, ids), pat)
    exact: dict[frozenset[int], int] = {}
    for C, _ in subsetcount.items():
        if not C:
            continue
        total = 0
        cl = sorted(C)
        for r in range(len(cl) + 1):
            sign = -1 if (len(cl) - r) % 2 else 1
            for sub_c in combinations(cl, r):
                total += sign * subsetcount[frozenset(sub_c)]
        exact[C] = total
    return exact


def count_isomorphs(
    G: Graph,
    H: Pattern | Graph,
    S: frozenset[int] | None = None,
    *,
    coloring: Coloring | None = None,
    include_listing: bool = False,
) -> CountReport:
    """Count distinct copies of H in G, optionally only those meeting S.

    The S-restricted count is count(G) - count(G - S), evaluated with the
    same coloring on both sides so the per-colour-set breakdown subtracts
    cleanly.  With include_listing the report also carries every copy.
    """
    pat = H if isinstance(H, Pattern) else make_pattern(H)
    col = coloring if coloring is not None else low_tdepth_coloring(G, pat.graph.n + 1)
    exact = _exact_counts(G, pat, col)
    if S is not None:
        rest = [v for v in range(1, G.n + 1) if v not in S]
        Gr, ids = induced_subgraph(G, rest)
        exact_rest = _exact_counts(Gr, pat, _restrict_coloring(col, ids))
        exact = {
            C: exact.get(C, 0) - exact_rest.get(C, 0)
            for C in set(exact) | set(exact_rest)
        }
    total = sum(exact.values())
    listing = list_isomorphs(G, pat, S, coloring=col) if include_listing else None
    return CountReport(
        total=total,
        by_color_subset={C: v for C, v in exact.items() if v},
        listing=listing,
    )


def _pattern_order(pat: Pattern) -> tuple[list[int], list[list[int]]]:
    """BFS order of pattern vertices (0-based) plus earlier-neighbour lists."""
    h = pat.graph.n
    hadj = [sorted(w - 1 for w in pat.graph.adj[x + 1]) for x in range(h)]
    order = [0]
    seen = {0}
    for x in order:
        for y in hadj[x]:
            if y not in seen:
                seen.add(y)
                order.append(y)
    pos = {x: i for i, x in enumerate(order)}
    back = [[y for y in hadj[x] if pos[y] < pos[x]] for x in order]
    return order, back


def _embeddings_in(sub: Graph, pat: Pattern):
    """Yield injective embeddings (image list indexed by pattern vertex)."""
    h = pat.graph.n
    order, back = _pattern_order(pat)
    gadj = [set(a) for a in sub.adj]
    img = [0] * h
    used: set[int] = set()

    def rec(i: int):
        if i == h:
            yield tuple(img)
            return
        x = order[i]
        anchors = back[i]
        if not anchors:
            candidates = range(1, sub.n + 1)
        else:
            candidates = sorted(gadj[img[anchors[0]]])
        for u in candidates:
            if u in used:
                continue
            if any(u not in gadj[img[y]] for y in anchors):
                continue
            img[x] = u
            used.add(u)
            yield from rec(i + 1)
            used.discard(u)

    yield from rec(0)


def _copy_of(img: tuple[int, ...], pat: Pattern, ids: tuple[int, ...]) -> Copy:
    verts = tuple(sorted(ids[u - 1] for u in img))
    edges = frozenset(
        frozenset((ids[img[a - 1] - 1], ids[img[b - 1] - 1])) for (a, b) in pat.graph.edges
    )
    return (verts, edges)


def list_isomorphs(
    G: Graph,
    H: Pattern | Graph,
    S: frozenset[int] | None = None,
    *,
    coloring: Coloring | None = None,
) -> tuple[Copy, ...]:
    """Every copy exactly once, in sorted order.

    A copy is (sorted vertex tuple, edge set).  Each copy is emitted from
    the one colour subset that equals its exact colour set.
    """
    pat = H if isinstance(H, Pattern) else make_pattern(H)
    h = pat.graph.n
    col = coloring if coloring is not None else low_tdepth_coloring(G, h + 1)
    by_color: dict[int, list[int]] = {}
    for v in range(1, G.n + 1):
        by_color.setdefault(col.colors[v], []).append(v)
    used_colors = sorted(by_color)
    found: set[Copy] = set()
    for size in range(1, min(h, len(used_colors)) + 1):
        for C in combinations(used_colors, size):
            want = frozenset(C)
            verts = [v for c in C for v in by_color[c]]
            if len(verts) < h:
                continue
            sub, ids = induced_subgraph(G, verts)
            if sub.m < pat.graph.m:
                continue
            for img in _embeddings_in(sub, pat):
                orig = [ids[u - 1] for u in img]
                if frozenset(col.colors[v] for v in orig) != want:
                    continue
                if S is not None and not any(v in S for v in orig):
                    continue
                found.add(_copy_of(img, pat, ids))
    return tuple(sorted(found, key=lambda c: (c[0], sorted(tuple(sorted(e)) for e in c[1]))))


def _set_partitions(items: list[int]):
    """All partitions of items into nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def decide_containment(G: Graph, H: Pattern | Graph, mode: str) -> bool:
    """Decide hom / subgraph / induced-subgraph containment of H in G."""
    pat = H if isinstance(H, Pattern) else make_pattern(H)
    h = pat.graph.n
    if mode == "subgraph":
        return count_isomorphs(G, pat).total > 0
    col = low_tdepth_coloring(G, h + 1) if G.n else None
    if mode == "induced":
        # alternating sum over edge-supersets of H on the same vertex set
        non_edges = [
            (u, v)
            for u in range(1, h + 1)
            for v in range(u + 1, h + 1)
            if not pat.graph.has_edge(u, v)
        ]
        total = 0
        for r in range(len(non_edges) + 1):
            for extra in combinations(non_edges, r):
                Hf = build_graph(h, list(pat.graph.edges) + list(extra))
                pf = make_pattern(Hf, limit=h)
                copies = count_isomorphs(G, pf, coloring=col).total
                total += (-1 if r % 2 else 1) * copies * pf.aut_count
        return total > 0
    if mode == "hom":
        # a homomorphism exists iff some quotient of H by independent sets
        # embeds as a subgraph
        for part in _set_partitions(list(range(1, h + 1))):
            blocks = [set(b) for b in part]
            if any(
                pat.graph.has_edge(u, v)
                for b in blocks
                for u in b
                for v in b
                if u < v
            ):
                continue
            idx = {}
            for i, b in enumerate(blocks):
                for u in b:
                    idx[u] = i + 1
            qedges = {
                (min(idx[u], idx[v]), max(idx[u], idx[v])) for (u, v) in pat.graph.edges
            }
            Q = build_graph(len(blocks), sorted(qedges))
            if count_isomorphs(G, make_pattern(Q, limit=h), coloring=col).total > 0:
                return True
        return False
    raise DomainError(f"unknown containment mode {mode!r}")


@lru_cache(maxsize=8)
def _iso_classes(p: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of graphs with <= p vertices."""
    reps: dict[tuple, Graph] = {}
    for q in range(1, p + 1):
        pairs = [(u, v) for u in range(1, q + 1) for v in range(u + 1, q + 1)]
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            key_best = None
            for perm in permutations(range(1, q + 1)):
                relabeled = tuple(
                    sorted(
                        (min(perm[u - 1], perm[v - 1]), max(perm[u - 1], perm[v - 1]))
                        for (u, v) in edges
                    )
                )
                if key_best is None or relabeled < key_best:
                    key_best = relabeled
            key = (q, key_best)
            if key not in reps:
                reps[key] = build_graph(q, edges)
    return tuple(
        reps[k] for k in sorted(reps, key=lambda k: (k[0], len(k[1]), k[1]))
    )


def _induced_embedding(G: Graph, M: Graph) -> frozenset[int] | None:
    """First induced copy of M (possibly disconnected) in G, or None."""
    if M.n > G.n:
        return None
    comps = connected_components(M)
    verts: list[int] = [v for comp in comps for v in comp]
    pos = {v: i for i, v in enumerate(verts)}
    earlier = [[w for w in range(1, M.n + 1) if w in pos and pos[w] < pos[v]] for v in verts]
    gadj = [set(a) for a in G.adj]
    img: dict[int, int] = {}

    def rec(i: int) -> frozenset[int] | None:
        if i == len(verts):
            return frozenset(img.values())
        x = verts[i]
        anchors = [w for w in earlier[i] if M.has_edge(x, w)]
        if anchors:
            candidates = sorted(gadj[img[anchors[0]]])
        else:
            candidates = range(1, G.n + 1)
        taken = set(img.values())
        for u in candidates:
            if u in taken:
                continue
            ok = True
            for w in earlier[i]:
                if M.has_edge(x, w) != (u in gadj[img[w]]):
                    ok = False
                    break
            if not ok:
                continue
            img[x] = u
            res = rec(i + 1)
            if res is not None:
                return res
            del img[x]
        return None

    return rec(0)


def exists_small_model(
    G: Graph,
    p: int,
    pred,
    *,
    limit: int = DEFAULT_PATTERN_LIMIT,
) -> frozenset[int] | None:
    """Witness X with |X| <= p and pred(G[X]), or None.

    pred must be isomorphism-invariant: it is evaluated once per
    isomorphism class of graphs with at most p vertices, and each class
    satisfying it is searched for as an induced subgraph.
    """
    if p < 1:
        raise DomainError(f"size bound must be >= 1, got {p}")
    if p > limit:
        raise PatternError(f"size bound {p} exceeds the pattern limit {limit}")
    for M in _iso_classes(p):
        if not pred(M):
            continue
        witness = _induced_embedding(G, M)
        if witness is not None:
            return witness
    return None


def _pred_connected(M: Graph) -> bool:
    return is_connected(M)


def _pred_clique(M: Graph) -> bool:
    return M.m == M.n * (M.n - 1) // 2


def _pred_cycle(M: Graph) -> bool:
    return M.n >= 3 and is_connected(M) and all(M.degree(v) == 2 for v in M.vertices())


def _pred_independent(M: Graph) -> bool:
    return M.m == 0


def named_predicate(name: str):
    """CLI predicate registry: connected, clique, cycle, independent-set,
    min-degree:<d>."""
    if name.startswith("min-degree:"):
        d = int(name.split(":", 1)[1])
        return lambda M: all(M.degree(v) >= d for v in M.vertices())
    table = {
        "connected": _pred_connected,
        "clique": _pred_clique,
        "cycle": _pred_cycle,
        "independent-set": _pred_independent,
    }
    try:
        return table[name]
    except KeyError:
        raise DomainError(f"unknown predicate {name!r}") from None
