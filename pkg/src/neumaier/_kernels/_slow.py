"""Pure-Python kernels: reference implementations of the hot loops.

The compiled extension (``_fast``) mirrors this module exactly; the
package selects whichever is importable at startup.  Everything here is
deliberately allocation-light but favours clarity -- this is both the
fallback and the semantic reference the extension is tested against.
"""

from __future__ import annotations

import struct
from math import sqrt

from ..errors import SpectralResolutionError

KERNEL_KIND = "python"

#: the extension's int64 fast path is proven overflow-safe up to here;
#: beyond it both kernels use this module's big-integer recurrence
FAST_CHARPOLY_MAX_N = 10

_JACOBI_MAX_SWEEPS = 100


def charpoly_adj(adj: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Exact characteristic polynomial of the 0/1 adjacency matrix given
    as per-vertex neighbour bitsets.

    Faddeev-LeVerrier recurrence in exact integer arithmetic:
    M_k = A M_{k-1} + c_{k-1} I,  c_k = -tr(A M_k)/k  (division exact).
    Returns (1, c_1, ..., c_n): coefficient of x^(n-i) at index i.
    """
    c = [0] * (n + 1)
    c[0] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        prev = c[k - 1]
        t = []
        for i in range(n):
            rows = []
            a = adj[i]
            while a:
                low = a & -a
                rows.append(m[low.bit_length() - 1])
                a ^= low
            if rows:
                row = [sum(col) for col in zip(*rows)]
            else:
                row = [0] * n
            row[i] += prev
            t.append(row)
        m = t
        tr = 0
        for i in range(n):
            a = adj[i]
            while a:
                low = a & -a
                tr += m[low.bit_length() - 1][i]
                a ^= low
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("Faddeev-LeVerrier division not exact")
        c[k] = q
    return tuple(c)


def jacobi_eigenvalues(flat: list[float], n: int) -> list[float]:
    """Eigenvalues (ascending) of the symmetric n x n matrix given in
    row-major flat form, by cyclic Jacobi rotations.

    Converges when the off-diagonal Frobenius norm drops below 1e-12 * n.
    """
    if n == 0:
        return []
    a = [[float(flat[i * n + j]) for j in range(n)] for i in range(n)]
    target = 1e-12 * n
    for _ in range(_JACOBI_MAX_SWEEPS):
        off = 0.0
        for i in range(n):
            ai = a[i]
            for j in range(i + 1, n):
                off += 2.0 * ai[j] * ai[j]
        if sqrt(off) < target:
            return sorted(a[i][i] for i in range(n))
        for p in range(n - 1):
            ap = a[p]
            for q in range(p + 1, n):
                apq = ap[q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - ap[p]) / (2.0 * apq)
                if abs(theta) > 1e12:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = 1.0 / (abs(theta) + sqrt(1.0 + theta * theta))
                    if theta < 0.0:
                        t = -t
                cs = 1.0 / sqrt(1.0 + t * t)
                sn = t * cs
                aq = a[q]
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = a[i][p]
                    aiq = a[i][q]
                    a[i][p] = ap[i] = cs * aip - sn * aiq
                    a[i][q] = aq[i] = sn * aip + cs * aiq
                ap[p] -= t * apq
                aq[q] += t * apq
                ap[q] = aq[p] = 0.0
    raise SpectralResolutionError(
        f"Jacobi did not converge in {_JACOBI_MAX_SWEEPS} sweeps"
    )


def cluster_count(values_sorted: list[float], tol: float) -> int:
    """Number of clusters when consecutive gaps >= tol start a new one."""
    if not values_sorted:
        return 0
    count = 1
    prev = values_sorted[0]
    for v in values_sorted[1:]:
        if v - prev >= tol:
            count += 1
        prev = v
    return count


def pack_charpoly(coeffs: tuple[int, ...]) -> bytes:
    """Stable dict key for a charpoly: little-endian int64 array.  Only
    valid for coefficient ranges the sweep can produce (n <= 8)."""
    return struct.pack(f"<{len(coeffs)}q", *coeffs)


def unpack_charpoly(key: bytes) -> tuple[int, ...]:
    return struct.unpack(f"<{len(key) // 8}q", key)


def sweep_masks(
    n: int, start: int, stop: int, tol: float
) -> tuple[int, int, dict[bytes, list[int]], list[int]]:
    """Scan the labeled-graph edge masks [start, stop) on n vertices.

    Per graph: exact charpoly, numeric eigenvalues, and the cluster count
    at ``tol``.  Returns (total, irregular_count, stats, regular_masks)
    where stats maps packed charpoly -> [graph_count, min_clusters,
    max_clusters] and regular_masks lists the masks of degree-regular
    graphs for full classification by the caller.
    """
    if n > 8:
        raise ValueError("mask sweep supports n <= 8")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    stats: dict[bytes, list[int]] = {}
    regular: list[int] = []
    irregular = 0
    for mask in range(start, stop):
        adj = [0] * n
        m = mask
        while m:
            low = m & -m
            i, j = pairs[low.bit_length() - 1]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            m ^= low
        deg0 = adj[0].bit_count()
        if all(a.bit_count() == deg0 for a in adj):
            regular.append(mask)
        else:
            irregular += 1
        coeffs = charpoly_adj(tuple(adj), n)
        key = pack_charpoly(coeffs)
        flat = [0.0] * (n * n)
        for i in range(n):
            a = adj[i]
            while a:
                low = a & -a
                flat[i * n + low.bit_length() - 1] = 1.0
                a ^= low
        clusters = cluster_count(jacobi_eigenvalues(flat, n), tol)
        entry = stats.get(key)
        if entry is None:
            stats[key] = [1, clusters, clusters]
        else:
            entry[0] += 1
            if clusters < entry[1]:
                entry[1] = clusters
            if clusters > entry[2]:
                entry[2] = clusters
    return stop - start, irregular, stats, regular
