import itertools
import random

import pytest

import oracles
from neumaier.cliques import (
    cliques_of_order,
    extension_hypothesis_holds,
    is_equitable_bipartition,
    max_clique_order,
    maximal_cliques,
    outside_counts,
    regular_cliques,
)
from neumaier.graphs import (
    bits,
    complete,
    complete_multipartite,
    cycle,
    from_edge_mask,
    from_edges,
    johnson2,
    petersen,
    rook,
)
from neumaier.regularity import (
    clique_bound_s,
    edge_regular_params,
    exact_clique_s,
    is_complete_multipartite,
    is_regular,
)


def masks(n):
    return range(1 << (n * (n - 1) // 2))


def as_sets(bitsets):
    return {oracles.bitset_to_set(c) for c in bitsets}


def test_maximal_cliques_examples():
    assert list(maximal_cliques(complete(4))) == [0b1111]
    c5 = as_sets(maximal_cliques(cycle(5)))
    assert c5 == {frozenset(e) for e in cycle(5).edges()}
    pet = as_sets(maximal_cliques(petersen()))
    assert len(pet) == 15
    assert pet == {frozenset(e) for e in petersen().edges()}


def test_maximal_cliques_against_subset_oracle():
    rng = random.Random(5)
    for _ in range(80):
        n = rng.randint(1, 7)
        nb = n * (n - 1) // 2
        g = from_edge_mask(n, rng.getrandbits(nb) if nb else 0)
        got = list(maximal_cliques(g))
        assert len(got) == len(set(got))  # exactly-once emission
        assert as_sets(got) == oracles.brute_maximal_cliques(g)


def test_regular_cliques_rook():
    reports = regular_cliques(rook(3))
    assert len(reports) == 6
    assert all(r.order == 3 and r.nexus == 1 and r.is_regular for r in reports)
    # rows and columns of the 3x3 grid
    expected = {frozenset({0, 1, 2}), frozenset({3, 4, 5}), frozenset({6, 7, 8}),
                frozenset({0, 3, 6}), frozenset({1, 4, 7}), frozenset({2, 5, 8})}
    assert {oracles.bitset_to_set(r.members) for r in reports} == expected


def test_regular_cliques_petersen_and_octahedron():
    assert regular_cliques(petersen()) == []
    reports = regular_cliques(complete_multipartite(3, 2))
    assert len(reports) == 8
    assert all(r.order == 3 and r.nexus == 2 for r in reports)
    with pytest.raises(ValueError):
        regular_cliques(complete(5))


def test_outside_counts():
    g = rook(3)
    row = 0b111  # vertices 0,1,2
    assert outside_counts(g, row) == [1] * 6


def test_equitable_bipartition_rook_row():
    res = is_equitable_bipartition(rook(3), 0b111)
    assert res.equitable
    assert res.quotient == ((2, 2), (1, 3))
    assert sorted(res.eigenvalues) == [1.0, 4.0]


def test_equitable_bipartition_negative_cases():
    pet = petersen()
    edge = 0b11 if pet.has_edge(0, 1) else None
    first_edge = next(iter(pet.edges()))
    c = (1 << first_edge[0]) | (1 << first_edge[1])
    assert not is_equitable_bipartition(pet, c).equitable
    assert not is_equitable_bipartition(pet, 1).equitable  # single vertex
    with pytest.raises(ValueError):
        is_equitable_bipartition(pet, 0)
    with pytest.raises(ValueError):
        is_equitable_bipartition(pet, (1 << 10) - 1)


def test_cliques_of_order_examples():
    assert len(list(cliques_of_order(complete(4), 2))) == 6
    triangles = as_sets(cliques_of_order(rook(3), 3))
    assert len(triangles) == 6  # rows and columns only
    assert triangles == oracles.brute_cliques_of_order(rook(3), 3)
    assert list(cliques_of_order(petersen(), 3)) == []
    with pytest.raises(ValueError):
        list(cliques_of_order(petersen(), 0))


def test_cliques_of_order_oracle():
    rng = random.Random(6)
    for _ in range(40):
        n = rng.randint(1, 7)
        nb = n * (n - 1) // 2
        g = from_edge_mask(n, rng.getrandbits(nb) if nb else 0)
        for t in range(1, 5):
            assert as_sets(cliques_of_order(g, t)) == oracles.brute_cliques_of_order(
                g, t
            )


def test_extension_hypothesis_families():
    assert extension_hypothesis_holds(rook(3), 1, 2).holds
    assert extension_hypothesis_holds(rook(4), 1, 3).holds
    assert extension_hypothesis_holds(complete_multipartite(3, 2), 2, 2).holds
    assert extension_hypothesis_holds(complete_multipartite(4, 3), 3, 3).holds


def test_extension_hypothesis_johnson_fails():
    # triangular graphs have two kinds of 3-cliques; the ones formed by
    # the three pairs inside a 3-set are maximal at order 3, so they do
    # not extend to the (s+1)=4 stars (verified by subset brute force)
    res = extension_hypothesis_holds(johnson2(5), 2, 3)
    assert not res.holds
    witness = oracles.bitset_to_set(res.witness)
    g = johnson2(5)
    big = oracles.brute_cliques_of_order(g, 4)
    assert not any(witness <= c for c in big)


def test_extension_hypothesis_failure_witness():
    # triangle plus a hanging edge: the edge (3,4) extends to no triangle
    g = from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
    res = extension_hypothesis_holds(g, 1, 2)
    assert not res.holds
    assert oracles.bitset_to_set(res.witness) == frozenset({3, 4})


def test_extension_hypothesis_argument_errors():
    with pytest.raises(ValueError):
        extension_hypothesis_holds(rook(3), 0, 2)
    with pytest.raises(ValueError):
        extension_hypothesis_holds(petersen(), 1, 2)  # no 3-cliques at all


def test_clique_order_bound_small_sweep():
    # edge-regular non-multipartite graphs: every clique has order at most
    # s+1, and a clique attains s+1 exactly when its outside-adjacency
    # counts are constant (Cauchy-Schwarz equality).  Those cliques are
    # the regular cliques precisely when the forced nexus is positive,
    # i.e. k > s; for k = s the constant is 0 and no clique is regular.
    for n in range(3, 7):
        for m in masks(n):
            g = from_edge_mask(n, m)
            if g.edge_count() == 0:
                continue
            erg = edge_regular_params(g)
            if erg is None or is_complete_multipartite(g)[0]:
                continue
            s = clique_bound_s(erg)
            omega = max_clique_order(g)
            assert omega <= int(s) + 1
            s_int = exact_clique_s(erg)
            constant = {
                c
                for t in range(1, omega + 1)
                for c in cliques_of_order(g, t)
                if len(set(outside_counts(g, c))) == 1
            }
            if s_int is None:
                # irrational s is never attained, so no clique anywhere in
                # the graph can have constant outside counts
                assert constant == set()
            else:
                attained = set(cliques_of_order(g, s_int + 1))
                assert constant == attained
                regs = {r.members for r in regular_cliques(g)}
                if erg.k > s_int:
                    assert regs == attained
                else:
                    assert regs == set()


def test_multipartite_transversal_cliques():
    # complete multipartite: regular cliques = transversals, e = s = parts-1
    for p in range(2, 5):
        for size in range(2, 4):
            g = complete_multipartite(p, size)
            reports = regular_cliques(g)
            assert len(reports) == size**p
            assert all(r.order == p and r.nexus == p - 1 for r in reports)


def test_regular_iff_equitable_positive_on_regular_graphs():
    for n in range(2, 7):
        for m in masks(n):
            g = from_edge_mask(n, m)
            if not is_regular(g) or g.edge_count() == 0:
                continue
            from neumaier.graphs import is_complete

            if is_complete(g):
                continue
            for c in maximal_cliques(g):
                counts = outside_counts(g, c)
                reg = counts[0] > 0 and len(set(counts)) == 1
                eq = is_equitable_bipartition(g, c)
                assert reg == (eq.equitable and eq.quotient[1][0] > 0)
