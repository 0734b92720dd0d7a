# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot loops; semantics mirror ``_slow``.

The int64 charpoly path is capped at FAST_CHARPOLY_MAX_N: the
Faddeev-LeVerrier intermediates of a 0/1 matrix are bounded well inside
int64 up to n = 10 (loose bound ~3e15 against 9.2e18), and anything
larger is delegated to the big-integer reference implementation.
"""

from libc.math cimport fabs, sqrt
from libc.stdlib cimport free, malloc
from cpython.bytes cimport PyBytes_FromStringAndSize

from ..errors import SpectralResolutionError
from ._slow import (
    charpoly_adj as _bigint_charpoly,
    cluster_count,
    pack_charpoly,
    unpack_charpoly,
)

KERNEL_KIND = "cython"
FAST_CHARPOLY_MAX_N = 10

cdef extern from *:
    """
    static inline int nm_popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int nm_ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int nm_popcount64(unsigned long long) nogil
    int nm_ctz64(unsigned long long) nogil


cdef int _charpoly_ll(unsigned long long* rows, int n, long long* out) nogil:
    """Faddeev-LeVerrier in int64; returns -1 when a division is not
    exact (an overflow symptom, impossible for n <= 10)."""
    cdef long long m[100]
    cdef long long t[100]
    cdef long long c[11]
    cdef int i, j, k, col
    cdef long long tr, prev
    cdef unsigned long long a
    for i in range(n * n):
        m[i] = 0
    c[0] = 1
    for k in range(1, n + 1):
        prev = c[k - 1]
        for i in range(n):
            for col in range(n):
                t[i * n + col] = 0
            a = rows[i]
            while a:
                j = nm_ctz64(a)
                a &= a - 1
                for col in range(n):
                    t[i * n + col] += m[j * n + col]
            t[i * n + i] += prev
        for i in range(n * n):
            m[i] = t[i]
        tr = 0
        for i in range(n):
            a = rows[i]
            while a:
                j = nm_ctz64(a)
                a &= a - 1
                tr += m[j * n + i]
        if (-tr) % k != 0:
            return -1
        c[k] = (-tr) / k
    for i in range(n + 1):
        out[i] = c[i]
    return 0


def charpoly_adj(adj, int n):
    """Exact integer characteristic polynomial; int64 fast path for
    n <= FAST_CHARPOLY_MAX_N, big-integer fallback beyond."""
    if n > FAST_CHARPOLY_MAX_N:
        return _bigint_charpoly(adj, n)
    cdef unsigned long long rows[10]
    cdef long long out[11]
    cdef int i
    for i in range(n):
        rows[i] = adj[i]
    if _charpoly_ll(rows, n, out) != 0:
        raise ArithmeticError("Faddeev-LeVerrier division not exact")
    return tuple(out[i] for i in range(n + 1))


cdef int _jacobi(double* a, int n, double* evs) nogil:
    """Cyclic Jacobi on the symmetric n x n matrix ``a`` (destroyed);
    eigenvalues land ascending in ``evs``.  Converges when the
    off-diagonal Frobenius norm drops below 1e-12 * n; returns -1 when
    100 sweeps are not enough."""
    cdef double target = 1e-12 * n
    cdef int sweep, p, q, i, j
    cdef double off, apq, app, aqq, theta, t, cs, sn, aip, aiq, key
    if n == 0:
        return 0
    for sweep in range(100):
        off = 0.0
        for p in range(n):
            for q in range(p + 1, n):
                off += 2.0 * a[p * n + q] * a[p * n + q]
        if sqrt(off) < target:
            for i in range(n):
                evs[i] = a[i * n + i]
            for i in range(1, n):
                key = evs[i]
                j = i - 1
                while j >= 0 and evs[j] > key:
                    evs[j + 1] = evs[j]
                    j -= 1
                evs[j + 1] = key
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p * n + q]
                if apq == 0.0:
                    continue
                app = a[p * n + p]
                aqq = a[q * n + q]
                theta = (aqq - app) / (2.0 * apq)
                if fabs(theta) > 1e12:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = 1.0 / (fabs(theta) + sqrt(1.0 + theta * theta))
                    if theta < 0.0:
                        t = -t
                cs = 1.0 / sqrt(1.0 + t * t)
                sn = t * cs
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = a[i * n + p]
                    aiq = a[i * n + q]
                    a[i * n + p] = cs * aip - sn * aiq
                    a[p * n + i] = a[i * n + p]
                    a[i * n + q] = sn * aip + cs * aiq
                    a[q * n + i] = a[i * n + q]
                a[p * n + p] = app - t * apq
                a[q * n + q] = aqq + t * apq
                a[p * n + q] = 0.0
                a[q * n + p] = 0.0
    return -1


def jacobi_eigenvalues(flat, int n):
    """Eigenvalues (ascending) of a symmetric matrix in row-major flat
    form, by cyclic Jacobi rotations."""
    if n == 0:
        return []
    cdef double* a = <double*> malloc(n * n * sizeof(double))
    cdef double* evs = <double*> malloc(n * sizeof(double))
    if a == NULL or evs == NULL:
        free(a)
        free(evs)
        raise MemoryError()
    cdef int i
    try:
        for i in range(n * n):
            a[i] = flat[i]
        if _jacobi(a, n, evs) < 0:
            raise SpectralResolutionError("Jacobi did not converge in 100 sweeps")
        return [evs[i] for i in range(n)]
    finally:
        free(a)
        free(evs)


def sweep_masks(int n, long long start, long long stop, double tol):
    """Scan labeled-graph edge masks [start, stop) on n <= 8 vertices;
    see ``_slow.sweep_masks`` for the contract."""
    if n > 8:
        raise ValueError("mask sweep supports n <= 8")
    cdef int ui[28]
    cdef int vi[28]
    cdef int nb = 0
    cdef int i, j, b, deg0, cl
    cdef long long mask, m
    cdef unsigned long long rows[8]
    cdef unsigned long long a
    cdef long long coeffs[9]
    cdef double amat[64]
    cdef double evs[8]
    cdef bint reg
    for j in range(1, n):
        for i in range(j):
            ui[nb] = i
            vi[nb] = j
            nb += 1
    stats = {}
    regular = []
    cdef long long irregular = 0
    for mask in range(start, stop):
        for i in range(n):
            rows[i] = 0
        m = mask
        while m:
            b = nm_ctz64(<unsigned long long> m)
            m &= m - 1
            rows[ui[b]] |= (<unsigned long long> 1) << vi[b]
            rows[vi[b]] |= (<unsigned long long> 1) << ui[b]
        deg0 = nm_popcount64(rows[0])
        reg = True
        for i in range(1, n):
            if nm_popcount64(rows[i]) != deg0:
                reg = False
                break
        if reg:
            regular.append(mask)
        else:
            irregular += 1
        if _charpoly_ll(rows, n, coeffs) != 0:
            raise ArithmeticError("Faddeev-LeVerrier division not exact")
        for i in range(n * n):
            amat[i] = 0.0
        for i in range(n):
            a = rows[i]
            while a:
                j = nm_ctz64(a)
                a &= a - 1
                amat[i * n + j] = 1.0
        if _jacobi(amat, n, evs) < 0:
            raise SpectralResolutionError("Jacobi did not converge in 100 sweeps")
        cl = 1
        for i in range(1, n):
            if evs[i] - evs[i - 1] >= tol:
                cl += 1
        # key layout matches struct.pack('<%dq'): x86-64 is little-endian
        key = PyBytes_FromStringAndSize(<char*> coeffs, 8 * (n + 1))
        entry = stats.get(key)
        if entry is None:
            stats[key] = [1, cl, cl]
        else:
            entry[0] += 1
            if cl < entry[1]:
                entry[1] = cl
            if cl > entry[2]:
                entry[2] = cl
    return stop - start, irregular, stats, regular
