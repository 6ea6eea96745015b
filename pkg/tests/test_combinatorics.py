from collections import Counter
from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from genusdist.combinatorics import (
    Partition,
    Permutation,
    all_permutations,
    canonical_n_cycle,
    compose,
    conjugacy_class_size,
    content_polynomial,
    cycle_type,
    dimension,
    enumerate_class,
    hook_partition,
    identity,
    inverse,
    num_cycles,
    parse_partition,
    partition_count,
    partitions_of,
)
from genusdist.errors import DomainError
from genusdist.polyring import ExactPoly, evaluate, falling_factorial_H


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, 0])
    lam = Partition([3, 1, 1])
    assert lam.n == 5 and lam.length == 3
    assert lam.multiplicities() == {3: 1, 1: 2}
    assert sum(i * k for i, k in lam.multiplicities().items()) == lam.n
    assert str(lam) == "3,1,1"
    assert parse_partition("1,3,1") == lam
    assert lam.conjugate() == Partition([3, 1, 1])
    assert Partition([2, 2]).conjugate() == Partition([2, 2])


def test_partitions_of_examples():
    assert partitions_of(1) == [Partition([1])]
    assert [list(p) for p in partitions_of(4)] == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert len(partitions_of(6)) == 11
    assert partitions_of(0) == [Partition()]
    with pytest.raises(DomainError):
        partitions_of(-1)


@pytest.mark.parametrize("n", range(1, 16))
def test_partitions_of_against_recurrence(n):
    ps = partitions_of(n)
    assert len(ps) == partition_count(n)
    assert len(set(ps)) == len(ps)
    assert all(p.n == n for p in ps)
    # reverse-lexicographic
    assert ps == sorted(ps, reverse=True)


def test_class_size_examples():
    assert conjugacy_class_size([1, 1, 1]) == 1
    assert conjugacy_class_size([2, 1]) == 3
    assert conjugacy_class_size([5]) == 24


@pytest.mark.parametrize("n", range(1, 6))
def test_class_sizes_by_enumerating_sn(n):
    counts = Counter(cycle_type(p) for p in permutations(range(n)))
    for lam in partitions_of(n):
        assert conjugacy_class_size(lam) == counts[lam]


@pytest.mark.parametrize("n", range(1, 8))
def test_class_sizes_sum_to_factorial(n):
    assert sum(conjugacy_class_size(lam) for lam in partitions_of(n)) == factorial(n)


def test_hook_partition():
    assert hook_partition(5, 0) == (5,)
    assert hook_partition(5, 4) == (1, 1, 1, 1, 1)
    assert hook_partition(5, 2) == (3, 1, 1)
    with pytest.raises(DomainError):
        hook_partition(5, 5)
    assert hook_partition(4, 1).is_hook() and not Partition([2, 2]).is_hook()


def test_content_polynomial_examples():
    x = ExactPoly([0, 1])
    assert content_polynomial([1]) == x
    assert content_polynomial([2, 2]) == x * x * (x + 1) * (x - 1)
    assert content_polynomial([]) == ExactPoly([1])


@pytest.mark.parametrize("n", range(1, 8))
def test_content_polynomial_of_hooks(n):
    for a in range(n):
        h = content_polynomial(hook_partition(n, a))
        assert h == falling_factorial_H(n, a)
        assert evaluate(h, 1) == (factorial(n) if a == 0 else 0)


def test_dimension():
    assert dimension([6]) == 1
    assert dimension([2, 2]) == 2
    for n in range(1, 8):
        for a in range(n):
            assert dimension(hook_partition(n, a)) == comb(n - 1, a)
        assert sum(dimension(t) ** 2 for t in partitions_of(n)) == factorial(n)


def test_permutation_basics():
    s = Permutation.from_one_based([2, 1, 3])
    assert cycle_type(s) == (2, 1)
    assert compose(s, inverse(s)) == identity(3)
    c = canonical_n_cycle(5)
    assert cycle_type(c) == (5,) and num_cycles(c) == 1
    # compose(s, t) applies t first
    s = Permutation.from_cycles(3, [(0, 1)])
    t = Permutation.from_cycles(3, [(1, 2)])
    assert compose(s, t)[1] == s[t[1]]
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


@pytest.mark.parametrize("n", range(1, 6))
def test_enumerate_class_matches_size(n):
    seen = set()
    for lam in partitions_of(n):
        elems = list(enumerate_class(lam))
        assert len(elems) == len(set(elems)) == conjugacy_class_size(lam)
        assert all(cycle_type(p) == lam for p in elems)
        seen.update(elems)
    assert seen == set(all_permutations(n))


def test_enumerate_class_22():
    assert len(list(enumerate_class([2, 2]))) == 3


perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(n)).map(Permutation))


@given(perms)
def test_inverse_gives_identity(p):
    assert cycle_type(compose(p, inverse(p))) == (1,) * len(p)
    assert cycle_type(inverse(p)) == cycle_type(p)


@given(perms, st.randoms())
def test_cycle_type_is_class_invariant(p, rnd):
    q = list(range(len(p)))
    rnd.shuffle(q)
    q = Permutation(q)
    assert cycle_type(compose(compose(q, p), inverse(q))) == cycle_type(p)
