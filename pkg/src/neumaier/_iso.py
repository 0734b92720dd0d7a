"""Brute-force graph isomorphism for desk-scale graphs.

Backtracking over vertex maps with degree and neighbour-degree pruning.
Intended for the line-graph family matcher and for tests; this is not a
general isomorphism service and is capped at ISO_MAX_N vertices.
"""

from __future__ import annotations

from .graphs import Graph, bits

ISO_MAX_N = 40


def _signature(g: Graph, u: int) -> tuple:
    degs = sorted(g.adj[v].bit_count() for v in bits(g.adj[u]))
    return (g.adj[u].bit_count(), tuple(degs))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    if g.n > ISO_MAX_N:
        raise ValueError(f"isomorphism check capped at {ISO_MAX_N} vertices")
    if sorted(a.bit_count() for a in g.adj) != sorted(a.bit_count() for a in h.adj):
        return False
    sig_g = [_signature(g, u) for u in range(g.n)]
    sig_h = [_signature(h, u) for u in range(h.n)]
    if sorted(sig_g) != sorted(sig_h):
        return False

    n = g.n
    # map vertices of g in rarity order, preferring ones adjacent to the
    # already-mapped set so the adjacency constraints bite early
    rarity = {s: sig_g.count(s) for s in set(sig_g)}
    order: list[int] = []
    placed = 0
    while len(order) < n:
        cands = [u for u in range(n) if u not in order]
        attached = [u for u in cands if g.adj[u] & placed]
        pool = attached or cands
        u = min(pool, key=lambda x: (rarity[sig_g[x]], x))
        order.append(u)
        placed |= 1 << u

    image = [-1] * n  # g vertex -> h vertex
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        u = order[k]
        mapped_mask_h = used
        required = 0
        for w in order[:k]:
            if (g.adj[u] >> w) & 1:
                required |= 1 << image[w]
        for c in bits(((1 << n) - 1) ^ used):
            if sig_h[c] != sig_g[u]:
                continue
            if h.adj[c] & mapped_mask_h != required:
                continue
            image[u] = c
            used |= 1 << c
            if extend(k + 1):
                return True
            used ^= 1 << c
            image[u] = -1
        return False

    return extend(0)
