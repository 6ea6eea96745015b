from collections import Counter
from itertools import permutations, product
from math import factorial

import pytest

from genusdist.combinatorics import partitions_of
from genusdist.digraphs import (
    EulerianDigraph,
    bipartite_digraph,
    bouquet,
    dipole,
    directed_cycle,
    total_embeddings,
)
from genusdist.errors import BudgetExceededError, DomainError
from genusdist.genus_core import fan_gamma, gamma_constellation, gamma_digraph
from genusdist.oracle import (
    GenusHistogram,
    RotationSystem,
    alternating_rotations,
    class_tuple_counts,
    count_factorizations,
    enumerate_bieulerian_4tuples,
    enumerate_embeddings,
    enumerate_factorizations,
    face_trace,
    factorization_space_size,
    resolve_workers,
)


def test_factorization_examples():
    assert enumerate_factorizations(3, 3, [3]) == {0: 2, 1: 16, 2: 6}
    for m in (2, 3, 4):
        assert enumerate_factorizations(m, 1, [1]) == {0: 1}
    assert enumerate_factorizations(2, 3, [3]) == {0: 2, 1: 2}


def test_factorizations_match_formula_small():
    for n in range(1, 5):
        for lam in partitions_of(n):
            for m in (2, 3):
                assert enumerate_factorizations(m, n, lam).matches(gamma_constellation(m, n, lam))


def test_budget_refusal():
    size = factorization_space_size(4, 5, [5])
    with pytest.raises(BudgetExceededError) as info:
        enumerate_factorizations(4, 5, [5], budget=size - 1)
    assert info.value.size == size
    with pytest.raises(BudgetExceededError):
        enumerate_embeddings(dipole(5), budget=10)


def test_worker_count_does_not_change_results():
    ref = enumerate_factorizations(3, 5, [3, 2], workers=1)
    assert enumerate_factorizations(3, 5, [3, 2], workers=3) == ref
    D = bipartite_digraph([2, 2])
    assert enumerate_embeddings(D, workers=1) == enumerate_embeddings(D, workers=4)


def test_resolve_workers_env(monkeypatch):
    monkeypatch.setenv("GENUSDIST_THREADS", "3")
    assert resolve_workers(None) == 3
    assert resolve_workers(2) == 2
    monkeypatch.delenv("GENUSDIST_THREADS")
    assert resolve_workers(None) == 1


def test_histogram():
    h = GenusHistogram({0: 2, 2: 6})
    assert h.to_coeffs() == (2, 0, 6)
    assert h.matches((2, 0, 6)) and not h.matches((2, 6))
    assert h.total() == 8


@pytest.mark.parametrize("d", range(0, 5))
def test_alternating_rotations_against_all_cyclic_orders(d):
    outs = [2 * i for i in range(d)]
    ins = [2 * i + 1 for i in range(d)]
    ours = list(alternating_rotations(outs, ins))
    assert len(ours) == len(set(ours)) == (factorial(d) * factorial(d - 1) if d else 1)
    if d == 0:
        return
    # brute force: every cyclic order of all 2d darts, normalized to start at outs[0]
    brute = set()
    for p in permutations(outs + ins):
        k = p.index(outs[0])
        rot = p[k:] + p[:k]
        if all((rot[i] + rot[(i + 1) % len(rot)]) % 2 for i in range(len(rot))):
            brute.add(rot)
    assert brute == set(ours)


def test_face_trace_examples():
    tri = directed_cycle(3)
    # vertex v: out-dart of edge v, in-dart of edge v-1
    rot = RotationSystem(tuple((2 * v, 2 * ((v - 1) % 3) + 1) for v in range(3)))
    assert face_trace(tri, rot)[0] == 2

    D = dipole(2)  # edges 0,1: 1->0; edges 2,3: 0->1
    counts = Counter()
    for r0, r1 in product(alternating_rotations([4, 6], [1, 3]), alternating_rotations([0, 2], [5, 7])):
        f, faces = face_trace(D, RotationSystem((r0, r1)))
        counts[f] += 1
    assert counts == {4: 2, 2: 2}  # two planar, two toroidal


def test_face_trace_rejects_bad_rotations():
    D = dipole(2)
    with pytest.raises(DomainError):
        face_trace(D, RotationSystem(((4, 6, 1, 3), (0, 5, 2, 7))))
    with pytest.raises(DomainError):
        face_trace(D, RotationSystem(((4, 1),)))


def test_embedding_examples():
    assert enumerate_embeddings(dipole(2)) == {0: 2, 1: 2}
    assert enumerate_embeddings(directed_cycle(3)) == {0: 1}
    assert enumerate_embeddings(bouquet(3)) == {0: 10, 1: 2}


@pytest.mark.parametrize("n", range(1, 5))
def test_embeddings_match_formula(n):
    for lam in partitions_of(n):
        D = bipartite_digraph(lam)
        h = enumerate_embeddings(D)
        assert h.matches(gamma_digraph(n, lam))
        assert h.total() == total_embeddings(D)


@pytest.mark.parametrize("edges,k", [
    ([(0, 1), (1, 0), (0, 1), (1, 0)], 2),
    ([(0, 1), (1, 2), (2, 0), (0, 2), (2, 1), (1, 0)], 3),
    ([(0, 0), (0, 1), (1, 0), (1, 1)], 2),
    ([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (2, 0)], 4),
])
def test_total_count_law(edges, k):
    D = EulerianDigraph(k, edges)
    assert enumerate_embeddings(D).total() == total_embeddings(D)


def test_bieulerian_4tuples():
    assert enumerate_bieulerian_4tuples(2, [2]) == {0: 1, 1: 1}
    assert enumerate_bieulerian_4tuples(1, [1]) == {0: 1}
    assert enumerate_bieulerian_4tuples(3, [3]) == {0: 2, 1: 16, 2: 6}
    for lam in partitions_of(4):
        assert enumerate_bieulerian_4tuples(4, lam) == enumerate_factorizations(3, 4, lam)


def test_class_tuple_counts():
    c = class_tuple_counts(3, 2)
    assert sum(c.values()) == factorial(3)
    assert c[(3,), (3,)] == 2
    assert count_factorizations([[3], [3], [3]]) == 2
    assert count_factorizations([[1, 1, 1, 1]]) == 1


@pytest.mark.slow
def test_large_fan_matches_oracle():
    # handle 0 with in-degree 6 split 5 + 1 across the forest components
    D = EulerianDigraph(6, [(1, 2), (2, 3), (3, 4), (1, 0), (2, 0), (3, 0), (4, 0), (4, 0),
                            (0, 1), (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (5, 0)])
    hist = enumerate_embeddings(D, workers=2)
    assert hist.to_coeffs() == (160, 16000, 249120, 766400, 350720)
    assert hist.matches(fan_gamma(D, 0))
