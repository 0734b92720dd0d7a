"""Exact integer polynomial arithmetic: primitive-PRS gcd, exact division
by monic divisors, and Yun squarefree decomposition.

Polynomials are lists of Python ints, coefficient of x^i at index i
(low to high).  Everything stays in arbitrary-precision integers; the
monic-input entry points never leave Z[x] (Gauss's lemma: monic integer
polynomials have monic integer gcds and quotients).
"""

from __future__ import annotations

from math import gcd as int_gcd


def trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: list[int]) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(p) - 1


def derivative(p: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(p) if i >= 1]


def content(p: list[int]) -> int:
    c = 0
    for x in p:
        c = int_gcd(c, abs(x))
    return c


def primitive(p: list[int]) -> list[int]:
    c = content(p)
    if c <= 1:
        return list(p)
    return [x // c for x in p]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b, up to a constant factor (callers take
    primitive parts, so the lc(b)^e normalization is irrelevant)."""
    r = list(a)
    db = degree(b)
    lb = b[-1]
    while degree(r) >= db and r:
        d = degree(r)
        c = r[-1]
        r = [lb * x for x in r]
        for i in range(db + 1):
            r[d - db + i] -= c * b[i]
        trim(r)
    return r


def gcd_int(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd in Z[x] with positive leading coefficient."""
    a = trim(list(a))
    b = trim(list(b))
    if not a:
        a, b = b, a
    if not b:
        if not a:
            return []
        out = primitive(a)
        return [-x for x in out] if out[-1] < 0 else out
    a = primitive(a)
    b = primitive(b)
    while b:
        a, b = b, primitive(_pseudo_rem(a, b))
    return [-x for x in a] if a[-1] < 0 else a


def div_exact_monic(f: list[int], g: list[int]) -> list[int]:
    """Exact quotient f / g for monic g; raises if the division leaves a
    remainder (which would indicate a caller bug)."""
    if not g or g[-1] != 1:
        raise ValueError("divisor must be monic")
    r = list(f)
    dg = degree(g)
    q = [0] * max(degree(r) - dg + 1, 0)
    while degree(r) >= dg and r:
        d = degree(r)
        c = r[-1]
        q[d - dg] = c
        for i in range(dg + 1):
            r[d - dg + i] -= c * g[i]
        trim(r)
    if r:
        raise ValueError("division is not exact")
    return q


def squarefree_degree(p: list[int]) -> int:
    """deg(p / gcd(p, p')): the number of distinct complex roots of p.

    For characteristic polynomials of symmetric integer matrices all
    roots are real, so this is the distinct-eigenvalue count.
    """
    p = trim(list(p))
    if degree(p) <= 0:
        return 0
    return degree(p) - degree(gcd_int(p, derivative(p)))


def squarefree_decomposition(p: list[int]) -> list[tuple[int, list[int]]]:
    """Yun's algorithm for monic p: returns [(multiplicity, factor), ...]
    with p = prod factor^multiplicity, factors monic, squarefree, pairwise
    coprime, and only nonconstant factors listed."""
    p = trim(list(p))
    if not p or p[-1] != 1:
        raise ValueError("squarefree decomposition expects a monic input")
    if degree(p) == 0:
        return []
    dp = derivative(p)
    g = gcd_int(p, dp)
    if g[-1] != 1:
        raise ValueError("gcd of a monic polynomial is not monic")
    out: list[tuple[int, list[int]]] = []
    c = div_exact_monic(p, g)
    d = [x - y for x, y in _padded(div_exact_monic(dp, g), derivative(c))]
    i = 1
    while degree(c) > 0:
        a = gcd_int(c, trim(d))
        if degree(a) > 0:
            out.append((i, a))
        c = div_exact_monic(c, a)
        d = [x - y for x, y in _padded(div_exact_monic(trim(d), a), derivative(c))]
        i += 1
    return out


def _padded(a: list[int], b: list[int]):
    m = max(len(a), len(b))
    return zip(a + [0] * (m - len(a)), b + [0] * (m - len(b)))


def eval_at_int(p: list[int], x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc
