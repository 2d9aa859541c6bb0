"""Brute-force oracles used to check the fast algorithms.

Everything here is deliberately naive: plain BFS tables, subset
enumeration, permutation search.  None of it shares code with the modules
it checks beyond the Graph container itself.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from .core import Graph

INF = -1  # sentinel for "unreachable" in distance tables


def bfs_distances(G: Graph, source: int) -> list[int]:
    """Distances from source; dist[0] unused, INF where unreachable."""
    dist = [INF] * (G.n + 1)
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for w in G.adj[v]:
                if dist[w] == INF:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def bfs_all_pairs(G: Graph) -> list[list[int]]:
    """Full distance table; table[x][y] is INF when disconnected."""
    table = [[INF] * (G.n + 1)]
    for x in range(1, G.n + 1):
        table.append(bfs_distances(G, x))
    return table


def _aut_count(H: Graph) -> int:
    edges = {frozenset(e) for e in H.edges}
    count = 0
    for perm in permutations(range(1, H.n + 1)):
        if all(frozenset((perm[u - 1], perm[v - 1])) in edges for (u, v) in H.edges):
            count += 1
    return count


def brute_copies(G: Graph, H: Graph) -> list[tuple[tuple[int, ...], frozenset[frozenset[int]]]]:
    """All distinct subgraph copies of H in G, by exhaustive enumeration.

    A copy is (sorted vertex tuple, set of image edges).  Enumerates every
    |V(H)|-subset of V(G) and every bijection onto it.
    """
    h = H.n
    if h > G.n:
        return []
    copies = set()
    gedges = {frozenset(e) for e in G.edges}
    for subset in combinations(range(1, G.n + 1), h):
        for perm in permutations(subset):
            imgs = [
                frozenset((perm[u - 1], perm[v - 1])) for (u, v) in H.edges
            ]
            if all(e in gedges for e in imgs):
                copies.add((subset, frozenset(imgs)))
    return sorted(copies, key=lambda c: (c[0], sorted(tuple(sorted(e)) for e in c[1])))


def brute_count(G: Graph, H: Graph) -> int:
    """Number of distinct subgraph copies of H in G."""
    return len(brute_copies(G, H))


def brute_count_hitting(G: Graph, H: Graph, S: frozenset[int]) -> int:
    return sum(1 for (verts, _) in brute_copies(G, H) if any(v in S for v in verts))


def longest_path(G: Graph) -> int:
    """Order of the longest path in G (exponential: n <= ~14)."""
    if G.n == 0:
        return 0
    n = G.n
    adjm = [0] * n
    for (u, v) in G.edges:
        adjm[u - 1] |= 1 << (v - 1)
        adjm[v - 1] |= 1 << (u - 1)
    # layer[mask ending at v]: grow paths one vertex at a time
    current = {(1 << v, v) for v in range(n)}
    best = 1
    while current:
        nxt = set()
        for (mask, v) in current:
            ext = adjm[v] & ~mask
            while ext:
                low = ext & -ext
                ext ^= low
                w = low.bit_length() - 1
                nxt.add((mask | low, w))
        if nxt:
            best += 1
        current = nxt
    return best


def brute_has_hom(G: Graph, H: Graph) -> bool:
    """Does H admit a homomorphism into G?  Tries every vertex map."""
    if H.n == 0:
        return True
    if G.n == 0:
        return False
    for img in product(range(1, G.n + 1), repeat=H.n):
        if all(G.has_edge(img[u - 1], img[v - 1]) for (u, v) in H.edges):
            return True
    return False


def brute_has_subgraph(G: Graph, H: Graph) -> bool:
    if H.n > G.n:
        return False
    for subset in combinations(range(1, G.n + 1), H.n):
        for perm in permutations(subset):
            if all(G.has_edge(perm[u - 1], perm[v - 1]) for (u, v) in H.edges):
                return True
    return False


def brute_has_induced(G: Graph, H: Graph) -> bool:
    if H.n > G.n:
        return False
    hedges = {frozenset(e) for e in H.edges}
    for subset in combinations(range(1, G.n + 1), H.n):
        for perm in permutations(subset):
            ok = True
            for u in range(1, H.n + 1):
                for v in range(u + 1, H.n + 1):
                    want = frozenset((u, v)) in hedges
                    if G.has_edge(perm[u - 1], perm[v - 1]) != want:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
    return False
