"""Clique enumeration over bitsets: maximal cliques (pivoting
backtracking), regular-clique detection, equitable bipartitions with
their 2x2 quotient, and the clique-extension hypothesis check."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import ConsistencyError
from .graphs import Graph, bits, is_complete


@dataclass(frozen=True)
class CliqueReport:
    """One clique: ``members`` is a vertex bitset; ``nexus`` is the
    constant outside-adjacency count when the clique is regular, else
    None."""

    members: int
    order: int
    is_maximal: bool
    is_regular: bool
    nexus: int | None


@dataclass(frozen=True)
class EquitableBipartition:
    equitable: bool
    quotient: tuple[tuple[int, int], tuple[int, int]] | None
    eigenvalues: tuple[float, float] | None


@dataclass(frozen=True)
class ExtensionReport:
    holds: bool
    witness: int | None  # first (e+1)-clique with no extension
    unique_extension: bool
    maximal_all_order_s1: bool


def maximal_cliques(g: Graph) -> Iterator[int]:
    """All maximal cliques, each exactly once, as vertex bitsets.

    Pivoting backtracking; the emission order is a deterministic function
    of the vertex order.
    """
    if g.n == 0:
        return
    adj = g.adj

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pivot = max(bits(p | x), key=lambda u: (adj[u] & p).bit_count())
        for v in bits(p & ~adj[pivot]):
            yield from expand(r | (1 << v), p & adj[v], x & adj[v])
            p ^= 1 << v
            x |= 1 << v

    yield from expand(0, (1 << g.n) - 1, 0)


def outside_counts(g: Graph, clique: int) -> list[int]:
    """|N(x) & C| for every x outside C, in ascending vertex order."""
    rest = ((1 << g.n) - 1) ^ clique
    return [(g.adj[x] & clique).bit_count() for x in bits(rest)]


def regular_cliques(g: Graph) -> list[CliqueReport]:
    """Maximal cliques C whose outside vertices all see the same positive
    number of members.

    In an edge-regular graph all regular cliques share one order; that is
    cross-checked and a violation raises ConsistencyError.  (General
    regular graphs can mix orders, so the check is scoped accordingly.)
    """
    if is_complete(g):
        raise ValueError("regular cliques are undefined for complete graphs")
    out: list[CliqueReport] = []
    for c in maximal_cliques(g):
        counts = outside_counts(g, c)
        e = counts[0]
        if e > 0 and all(x == e for x in counts):
            out.append(CliqueReport(c, c.bit_count(), True, True, e))
    if len({r.order for r in out}) > 1:
        from .regularity import edge_regular_params

        if g.edge_count() and edge_regular_params(g) is not None:
            raise ConsistencyError(
                "regular cliques of different orders in one edge-regular graph"
            )
    return out


def is_equitable_bipartition(g: Graph, c: int) -> EquitableBipartition:
    """Check that {C, V\\C} is an equitable partition and return the 2x2
    quotient [[a, b], [cc, d]] with its closed-form eigenvalues."""
    full = (1 << g.n) - 1
    if c == 0 or c == full or c & ~full:
        raise ValueError("bipartition side must be a proper nonempty subset")
    rest = full ^ c
    a_vals = {(g.adj[u] & c).bit_count() for u in bits(c)}
    b_vals = {(g.adj[u] & rest).bit_count() for u in bits(c)}
    cc_vals = {(g.adj[u] & c).bit_count() for u in bits(rest)}
    d_vals = {(g.adj[u] & rest).bit_count() for u in bits(rest)}
    if any(len(s) != 1 for s in (a_vals, b_vals, cc_vals, d_vals)):
        return EquitableBipartition(False, None, None)
    a, b, cc, d = a_vals.pop(), b_vals.pop(), cc_vals.pop(), d_vals.pop()
    half = math.sqrt((a - d) * (a - d) + 4 * b * cc) / 2.0
    mid = (a + d) / 2.0
    return EquitableBipartition(True, ((a, b), (cc, d)), (mid + half, mid - half))


def cliques_of_order(g: Graph, t: int) -> Iterator[int]:
    """All cliques of order exactly t (not necessarily maximal), emitted
    in ascending lexicographic vertex order."""
    if t < 1:
        raise ValueError("clique order must be >= 1")
    adj = g.adj

    def rec(r: int, size: int, cand: int) -> Iterator[int]:
        if size == t:
            yield r
            return
        if size + cand.bit_count() < t:
            return
        for v in bits(cand):
            above = ~((1 << (v + 1)) - 1)
            yield from rec(r | (1 << v), size + 1, cand & adj[v] & above)

    yield from rec(0, 0, (1 << g.n) - 1)


def max_clique_order(g: Graph) -> int:
    return max((c.bit_count() for c in maximal_cliques(g)), default=0)


def extension_hypothesis_holds(g: Graph, e: int, s: int) -> ExtensionReport:
    """Does every (e+1)-clique extend to an (s+1)-clique?

    ``e`` and ``s`` must be the regular-clique parameters of a Neumaier
    graph.  When the hypothesis holds, two proven consequences are also
    verified (unique extensions; every maximal clique has order s+1) and
    their failure raises ConsistencyError.  On failure the witness is the
    first inextensible (e+1)-clique in enumeration order.
    """
    if not 1 <= e <= s:
        raise ValueError("need 1 <= e <= s for a regular-clique pair (e, s)")
    big = list(cliques_of_order(g, s + 1))
    if not big:
        raise ValueError(f"graph has no clique of order s+1 = {s + 1}")
    unique = True
    for h in cliques_of_order(g, e + 1):
        containing = sum(1 for c in big if c & h == h)
        if containing == 0:
            return ExtensionReport(False, h, False, False)
        if containing != 1:
            unique = False
    all_s1 = all(c.bit_count() == s + 1 for c in maximal_cliques(g))
    if not unique:
        raise ConsistencyError(
            "extension hypothesis holds but some extension is not unique"
        )
    if not all_s1:
        raise ConsistencyError(
            "extension hypothesis holds but a maximal clique misses order s+1"
        )
    return ExtensionReport(True, None, unique, all_s1)
