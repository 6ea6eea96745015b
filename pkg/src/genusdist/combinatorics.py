"""Partitions, permutations and conjugacy classes of the symmetric group.

Permutations are stored 0-based: ``Permutation((1, 0, 2))`` sends 0->1, 1->0,
2->2 (in 1-based terms the transposition (1 2)).  Products compose right to
left, ``compose(s, t)(i) == s[t[i]]``.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations as _iter_perms
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .errors import DomainError
from .polyring import ExactPoly

__all__ = [
    "Partition",
    "parse_partition",
    "partitions_of",
    "partition_count",
    "conjugacy_class_size",
    "hook_partition",
    "content_polynomial",
    "dimension",
    "Permutation",
    "compose",
    "inverse",
    "identity",
    "cycle_type",
    "num_cycles",
    "canonical_n_cycle",
    "enumerate_class",
    "all_permutations",
]


class Partition(tuple):
    """Integer partition as a non-increasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise DomainError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"partition parts must be non-increasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        """``{i: m_i}`` for each part size ``i`` that occurs."""
        return dict(Counter(self))

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def is_hook(self) -> bool:
        return len(self) <= 1 or self[1] == 1

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return ",".join(map(str, self))


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"``; parts may appear in any order."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise DomainError(f"malformed partition {text!r}") from exc
    return Partition(sorted(parts, reverse=True))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, ``[n]`` first."""
    if n < 0:
        raise DomainError(f"cannot partition a negative integer ({n})")
    return list(_partitions(n))


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, cap), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal recurrence (independent of the enumerator)."""
    p = [1] + [0] * n
    for k in range(1, n + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > k:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[k - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= k:
                total += sign * p[k - g2]
            j += 1
        p[k] = total
    return p[n]


def conjugacy_class_size(lam: Sequence[int]) -> int:
    """``n! / prod_i (i^{m_i} m_i!)``."""
    lam = Partition(lam)
    denom = prod(i ** m * factorial(m) for i, m in lam.multiplicities().items())
    return factorial(lam.n) // denom


def hook_partition(n: int, a: int) -> Partition:
    """The hook ``[n-a, 1^a]``."""
    if n < 1 or not 0 <= a <= n - 1:
        raise DomainError(f"hook leg must satisfy 0 <= a <= n-1, got n={n}, a={a}")
    return Partition([n - a] + [1] * a)


def content_polynomial(theta: Sequence[int]) -> ExactPoly:
    """``prod_w (x + c(w))`` over the cells of the Ferrers diagram.

    A cell in row ``j`` (from the bottom, 0-based) and column ``i`` has content
    ``i - j``.
    """
    theta = Partition(theta)
    return ExactPoly.from_roots(-(i - j) for j, row in enumerate(theta) for i in range(row))


def dimension(theta: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``theta`` (hook-length formula)."""
    theta = Partition(theta)
    conj = theta.conjugate()
    hooks = 1
    for j, row in enumerate(theta):
        for i in range(row):
            hooks *= (row - i - 1) + (conj[i] - j - 1) + 1
    return factorial(theta.n) // hooks


# permutations


class Permutation(tuple):
    """A permutation of ``{0, ..., n-1}`` given by its image tuple."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise DomainError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def from_one_based(cls, images: Iterable[int]) -> "Permutation":
        return cls(i - 1 for i in images)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 0-based cycles, e.g. ``from_cycles(3, [(0, 1)])``."""
        img = list(range(n))
        for cyc in cycles:
            for k, x in enumerate(cyc):
                img[x] = cyc[(k + 1) % len(cyc)]
        return cls(img)

    @property
    def n(self) -> int:
        return len(self)

    def cycles(self) -> list[tuple[int, ...]]:
        return _cycles(self)

    def __mul__(self, other):
        return compose(self, other)

    def __repr__(self):
        return f"Permutation({list(self)})"


def _cycles(p: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return out


def identity(n: int) -> Permutation:
    return Permutation(range(n))


def compose(s: Sequence[int], t: Sequence[int]) -> Permutation:
    """``s ∘ t``: apply ``t`` first."""
    if len(s) != len(t):
        raise DomainError(f"size mismatch: {len(s)} vs {len(t)}")
    return Permutation(tuple(s[i] for i in t))


def inverse(s: Sequence[int]) -> Permutation:
    inv = [0] * len(s)
    for i, j in enumerate(s):
        inv[j] = i
    return Permutation(inv)


def num_cycles(p: Sequence[int]) -> int:
    n = len(p)
    seen = bytearray(n)
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        x = start
        while not seen[x]:
            seen[x] = 1
            x = p[x]
    return count


def cycle_type(p: Sequence[int]) -> Partition:
    return Partition(sorted((len(c) for c in _cycles(p)), reverse=True))


def canonical_n_cycle(n: int) -> Permutation:
    """``0 -> 1 -> ... -> n-1 -> 0``."""
    return Permutation(tuple((i + 1) % n for i in range(n)))


def all_permutations(n: int) -> Iterator[Permutation]:
    for p in _iter_perms(range(n)):
        yield Permutation(p)


def enumerate_class(mu: Sequence[int]) -> Iterator[Permutation]:
    """Every permutation of cycle type ``mu``, each exactly once.

    Each permutation is produced from its unique decomposition in which the
    next cycle always contains the smallest point not yet used; the sequence
    of cycle lengths then runs over the distinct orderings of ``mu``.
    """
    mu = Partition(mu)
    n = mu.n

    def rec(remaining: list[int], lengths: tuple[int, ...], img: list[int]):
        if not lengths:
            yield Permutation(img)
            return
        length = lengths[0]
        lead, rest = remaining[0], remaining[1:]
        for others in _iter_perms(rest, length - 1):
            cyc = (lead,) + others
            for k, x in enumerate(cyc):
                img[x] = cyc[(k + 1) % length]
            used = set(others)
            yield from rec([r for r in rest if r not in used], lengths[1:], img)

    for order in _distinct_orderings(tuple(mu)):
        yield from rec(list(range(n)), order, list(range(n)))


@lru_cache(maxsize=None)
def _distinct_orderings(parts: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(set(_iter_perms(parts))))
