"""Irreducible characters of the symmetric group.

Two independent routes are provided.  :func:`mn_character` is the general
Murnaghan-Nakayama recursion (rim hooks removed through beta-sets), while
:func:`hook_character` reads hook characters off the generating polynomial
:func:`r_poly`.  The Frobenius formula for counting factorizations of the
identity is built on the general route.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Sequence

from .combinatorics import (
    Partition,
    conjugacy_class_size,
    dimension,
    partitions_of,
)
from .errors import ConsistencyError, DomainError
from .polyring import ExactPoly

__all__ = [
    "CharacterCache",
    "HookCharVector",
    "mn_character",
    "r_poly",
    "hook_character",
    "hook_char_vector",
    "frobenius_count",
    "character_table",
]


def _remove_rim_hooks(theta: Partition, r: int):
    """Yield ``(sign, theta')`` for every rim hook of length ``r`` in ``theta``."""
    ell = len(theta)
    beta = [theta[i] + (ell - 1 - i) for i in range(ell)]
    beads = set(beta)
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        # leg length = beads strictly between the new and old position
        height = sum(1 for c in beta if target < c < b)
        new_beta = sorted((c if c != b else target for c in beta), reverse=True)
        parts = [new_beta[i] - (ell - 1 - i) for i in range(ell)]
        yield (-1) ** height, Partition(p for p in parts if p > 0)


class CharacterCache:
    """Memo table ``(theta, mu) -> chi^theta_mu`` safe for concurrent use.

    A lookup miss computes outside the lock; two threads racing on the same key
    compute the same integer, so the second write is harmless.
    """

    def __init__(self):
        self._table: dict[tuple[Partition, Partition], int] = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._table)

    def clear(self):
        with self._lock:
            self._table.clear()

    def get(self, theta: Partition, mu: Partition) -> int:
        key = (theta, mu)
        try:
            return self._table[key]
        except KeyError:
            pass
        value = self._compute(theta, mu)
        with self._lock:
            self._table[key] = value
        return value

    def _compute(self, theta: Partition, mu: Partition) -> int:
        if not mu:
            return 1
        r, rest = mu[0], Partition(mu[1:])
        return sum(sign * self.get(sub, rest) for sign, sub in _remove_rim_hooks(theta, r))


_default_cache = CharacterCache()


def mn_character(theta: Sequence[int], mu: Sequence[int], cache: CharacterCache | None = None) -> int:
    """``chi^theta_mu`` by the Murnaghan-Nakayama rule, largest part of ``mu`` first."""
    theta, mu = Partition(theta), Partition(mu)
    if theta.n != mu.n:
        raise DomainError(f"weight mismatch: |theta|={theta.n}, |mu|={mu.n}")
    return (_default_cache if cache is None else cache).get(theta, mu)


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    parts = partitions_of(n)
    return {(th, mu): mn_character(th, mu) for th in parts for mu in parts}


def r_poly(n: int, lam: Sequence[int]) -> ExactPoly:
    """``prod_j (1 - z^{lam_j}) / (1 - z)`` as an exact polynomial in ``z``."""
    lam = Partition(lam)
    if lam.n != n or n < 1:
        raise DomainError(f"{list(lam)} is not a partition of {n}")
    num = ExactPoly([1])
    for part in lam:
        num = num * ExactPoly([1] + [0] * (part - 1) + [-1])
    quot, rem = divmod(num, ExactPoly([1, -1]))
    if not rem.is_zero():
        raise ConsistencyError(f"(1 - z) does not divide the product for {list(lam)}")
    return quot


@dataclass(frozen=True)
class HookCharVector:
    n: int
    lam: Partition
    values: tuple[int, ...]

    def __getitem__(self, a: int) -> int:
        return self.values[a]


def hook_char_vector(n: int, lam: Sequence[int]) -> HookCharVector:
    """``(chi^{[n-a,1^a]}_lam for a in 0..n-1)`` from the coefficients of :func:`r_poly`."""
    r = r_poly(n, lam)
    values = []
    for a in range(n):
        c = r[a]
        if c.denominator != 1:
            raise ConsistencyError("non-integral coefficient in r_poly")
        values.append((-1) ** a * int(c))
    return HookCharVector(n, Partition(lam), tuple(values))


def hook_character(n: int, a: int, lam: Sequence[int]) -> int:
    if not 0 <= a <= n - 1:
        raise DomainError(f"hook leg must satisfy 0 <= a <= n-1, got n={n}, a={a}")
    return hook_char_vector(n, lam)[a]


def frobenius_count(cycle_types: Sequence[Sequence[int]]) -> int:
    """Number of tuples ``(s_1, ..., s_k)`` with ``s_i`` of type ``mu_i`` and product the identity.

    ``prod |C(mu_i)| / n! * sum_theta (f^theta)^(2-k) prod chi^theta_{mu_i}``,
    accumulated in exact rationals.
    """
    mus = [Partition(mu) for mu in cycle_types]
    if not mus:
        raise DomainError("need at least one cycle type")
    n = mus[0].n
    if any(mu.n != n for mu in mus):
        raise DomainError("all cycle types must have the same weight")
    k = len(mus)
    total = Fraction(0)
    for theta in partitions_of(n):
        chis = [mn_character(theta, mu) for mu in mus]
        if any(c == 0 for c in chis):
            continue
        total += Fraction(dimension(theta)) ** (2 - k) * prod(chis)
    total *= Fraction(prod(conjugacy_class_size(mu) for mu in mus), factorial(n))
    if total.denominator != 1 or total < 0:
        raise ConsistencyError(f"Frobenius sum is not a non-negative integer: {total}")
    return int(total)
