"""Exact greatest reduced average density on small graphs.

This module is the project's ground truth: grad(G, r) maximizes
|E(G/P)| / |P| over every family P of pairwise disjoint balls of radius
at most r, by exhaustive enumeration.  Values are exact rationals.
evaluate_family scores a single family, which certifies a lower bound on
graphs too large for the full search.

Exactness matters here, speed does not; sizes are capped accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import Graph, build_graph
from .errors import DomainError, InvalidFamilyError, OracleLimitError

DEFAULT_LIMIT_R0 = 16
DEFAULT_LIMIT = 12


@dataclass(frozen=True)
class BallFamily:
    """Pairwise disjoint vertex sets, each inducing a connected subgraph."""

    balls: tuple[frozenset[int], ...]
    radii: tuple[int, ...]

    @property
    def radius(self) -> int:
        """rho(P): the largest ball radius (0 for an empty family)."""
        return max(self.radii, default=0)

    def __len__(self) -> int:
        return len(self.balls)


@dataclass(frozen=True)
class GradValue:
    value: Fraction
    witness: BallFamily


def _subset_radius(G: Graph, ball: frozenset[int]) -> int:
    """Radius of G[ball]: min over centers of the eccentricity inside the ball.

    Raises InvalidFamilyError if G[ball] is disconnected.
    """
    best = None
    for center in ball:
        dist = {center: 0}
        frontier = [center]
        ecc = 0
        while frontier:
            nxt = []
            for v in frontier:
                for w in G.adj[v]:
                    if w in ball and w not in dist:
                        dist[w] = dist[v] + 1
                        ecc = dist[w]
                        nxt.append(w)
            frontier = nxt
        if len(dist) != len(ball):
            raise InvalidFamilyError(f"ball {sorted(ball)} induces a disconnected subgraph")
        if best is None or ecc < best:
            best = ecc
    return 0 if best is None else best


def ball_family(G: Graph, sets: Iterable[Iterable[int]]) -> BallFamily:
    """Validate disjointness and connectivity, compute per-ball radii."""
    balls = tuple(frozenset(s) for s in sets)
    seen: set[int] = set()
    for b in balls:
        if not b:
            raise InvalidFamilyError("empty ball in family")
        for v in b:
            if not 1 <= v <= G.n:
                raise InvalidFamilyError(f"ball vertex {v} out of range 1..{G.n}")
            if v in seen:
                raise InvalidFamilyError(f"balls overlap at vertex {v}")
            seen.add(v)
    radii = tuple(_subset_radius(G, b) for b in balls)
    return BallFamily(balls=balls, radii=radii)


def quotient(G: Graph, P: BallFamily | Sequence[Iterable[int]]) -> Graph:
    """Graph on {1..|P|} with an edge {i, j} iff some G-edge joins ball i and j."""
    fam = P if isinstance(P, BallFamily) else ball_family(G, P)
    masks = [0] * len(fam.balls)
    nbrs = [0] * len(fam.balls)
    for i, b in enumerate(fam.balls):
        for v in b:
            masks[i] |= 1 << (v - 1)
            for w in G.adj[v]:
                nbrs[i] |= 1 << (w - 1)
        nbrs[i] &= ~masks[i]
    edges = [
        (i + 1, j + 1)
        for i in range(len(masks))
        for j in range(i + 1, len(masks))
        if masks[j] & nbrs[i]
    ]
    return build_graph(len(masks), edges)


def evaluate_family(G: Graph, P: BallFamily | Sequence[Iterable[int]]) -> Fraction:
    """|E(G/P)| / |P|: a certified lower bound on grad(G, rho(P))."""
    fam = P if isinstance(P, BallFamily) else ball_family(G, P)
    if not fam.balls:
        raise InvalidFamilyError("family must contain at least one ball")
    q = quotient(G, fam)
    return Fraction(q.m, len(fam.balls))


def _connected_subsets(n: int, adjm: list[int]) -> list[int]:
    """All nonempty vertex masks inducing a connected subgraph, each once."""
    out: list[int] = []
    full = (1 << n) - 1
    allowed = 0

    def rec(S: int, frontier: int, banned: int) -> None:
        out.append(S)
        ext = frontier & ~banned
        b = banned
        while ext:
            low = ext & -ext
            ext ^= low
            v = low.bit_length() - 1
            newS = S | low
            rec(newS, (frontier | (adjm[v] & allowed)) & ~newS, b)
            b |= low

    for s in range(n):
        # enumerate the subsets whose minimum vertex is s
        allowed = full & ~((1 << (s + 1)) - 1)
        rec(1 << s, adjm[s] & allowed, 0)
    return out


def grad(G: Graph, r: int, *, limit: int | None = None) -> GradValue:
    """Exact grad with rank r, with the attaining family as witness.

    Enumerates every family of disjoint balls of radius <= r.  The search
    space is exponential; the default limits (16 vertices for r = 0, 12
    for r >= 1) keep it tractable.
    """
    if r < 0:
        raise DomainError(f"radius bound {r} is negative")
    if limit is None:
        limit = DEFAULT_LIMIT_R0 if r == 0 else DEFAULT_LIMIT
    n = G.n
    if n > limit:
        raise OracleLimitError(
            f"graph order {n} exceeds the oracle limit {limit}; "
            "use evaluate_family with an explicit witness instead"
        )
    if n == 0:
        return GradValue(Fraction(0), BallFamily((), ()))

    adjm = [0] * n  # 0-based neighbour masks
    for (u, v) in G.edges:
        adjm[u - 1] |= 1 << (v - 1)
        adjm[v - 1] |= 1 << (u - 1)

    if r == 0:
        ball_masks = [1 << i for i in range(n)]
    else:
        ball_masks = []
        for S in _connected_subsets(n, adjm):
            verts = frozenset(i + 1 for i in range(n) if S >> i & 1)
            if _subset_radius(G, verts) <= r:
                ball_masks.append(S)

    ball_nbrs = []
    for S in ball_masks:
        nb = 0
        rest = S
        while rest:
            low = rest & -rest
            rest ^= low
            nb |= adjm[low.bit_length() - 1]
        ball_nbrs.append(nb & ~S)

    balls_at: list[list[int]] = [[] for _ in range(n)]
    for bi, S in enumerate(ball_masks):
        rest = S
        while rest:
            low = rest & -rest
            rest ^= low
            balls_at[low.bit_length() - 1].append(bi)

    # Depth-first search over families: at the lowest undecided vertex,
    # either leave it out of every ball or start a ball containing it.
    chosen: list[int] = []
    best = [0, 1, [1 << 0]]  # numerator, denominator, ball masks
    edges_now = 0

    def rec(free: int) -> None:
        nonlocal edges_now
        p = len(chosen)
        if p and edges_now * best[1] > best[0] * p:
            best[0], best[1], best[2] = edges_now, p, list(chosen)
        if not free:
            return
        low = free & -free
        v = low.bit_length() - 1
        rec(free ^ low)  # v belongs to no ball
        for bi in balls_at[v]:
            S = ball_masks[bi]
            if S & ~free:
                continue
            delta = 0
            nb = ball_nbrs[bi]
            for M in chosen:
                if M & nb:
                    delta += 1
            chosen.append(S)
            edges_now += delta
            rec(free & ~S)
            chosen.pop()
            edges_now -= delta

    rec((1 << n) - 1)

    witness_sets = [
        frozenset(i + 1 for i in range(n) if S >> i & 1) for S in best[2]
    ]
    return GradValue(
        value=Fraction(best[0], best[1]),
        witness=ball_family(G, witness_sets),
    )
