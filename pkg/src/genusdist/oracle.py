"""Brute-force ground truth.

Everything here enumerates labeled objects one by one; no character theory is
used.  The search can be split across processes along the outermost loop;
partial histograms are merged by exact addition so the result never depends
on the worker count.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterable, Sequence

from .combinatorics import Partition, conjugacy_class_size, cycle_type, enumerate_class, num_cycles
from .digraphs import EulerianDigraph, total_embeddings
from .errors import BudgetExceededError, ConsistencyError, DomainError

__all__ = [
    "DEFAULT_BUDGET",
    "GenusHistogram",
    "RotationSystem",
    "factorization_space_size",
    "enumerate_factorizations",
    "alternating_rotations",
    "embedding_space_size",
    "face_trace",
    "enumerate_embeddings",
    "enumerate_bieulerian_4tuples",
    "class_tuple_counts",
    "count_factorizations",
    "resolve_workers",
]

DEFAULT_BUDGET = 10 ** 8


class GenusHistogram(Counter):
    """Exact ``genus -> count`` map."""

    def to_coeffs(self) -> tuple[int, ...]:
        if not self:
            return (0,)
        return tuple(self.get(g, 0) for g in range(max(self) + 1))

    def matches(self, coeffs: Sequence[int]) -> bool:
        """Coefficientwise equality with a genus polynomial (or its ``coeffs``)."""
        coeffs = getattr(coeffs, "coeffs", coeffs)
        return self.to_coeffs() == tuple(coeffs)

    def __repr__(self):
        return f"GenusHistogram({dict(sorted(self.items()))})"


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("GENUSDIST_THREADS", "1") or 1)
    return max(1, int(workers))


def _chunks(items: list, k: int) -> list[list]:
    # contiguous, deterministic split
    size, extra = divmod(len(items), k)
    out, start = [], 0
    for i in range(k):
        end = start + size + (1 if i < extra else 0)
        if end > start:
            out.append(items[start:end])
        start = end
    return out


def _run(fn, outer: list, shared: tuple, workers: int) -> GenusHistogram:
    workers = min(resolve_workers(workers), max(1, len(outer)))
    total = GenusHistogram()
    if workers == 1:
        total.update(fn(outer, *shared))
        return total
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, chunk, *shared) for chunk in _chunks(outer, workers)]
        for fut in futures:
            total.update(fut.result())
    return total


def _check_budget(size: int, budget: int | None, what: str):
    if budget is not None and size > budget:
        raise BudgetExceededError(size, budget, what)


# factorizations phi s_0 s_1 ... s_{m-1} = id


def factorization_space_size(m: int, n: int, lam: Sequence[int]) -> int:
    """Tuples actually visited: the last factor is solved, not enumerated."""
    return conjugacy_class_size(lam) * factorial(n - 1) * factorial(n) ** (m - 2)


def _compose(p, q):
    return tuple([p[i] for i in q])


def _factorization_worker(phis, sigma0s, free_count, n, m, ell):
    hist = Counter()
    perms = list(permutations(range(n)))
    # cycle counts of the free factors s_1 .. s_{m-2}
    cyc = {p: num_cycles(p) for p in perms}
    base = (m - 1) * n - ell
    for phi in phis:
        for s0 in sigma0s:
            start = _compose(phi, s0)
            stack = [(start, 1, 0)]
            while stack:
                partial, cyc_sum, depth = stack.pop()
                if depth == free_count:
                    # s_{m-1} = partial^{-1} has as many cycles as partial
                    twice = base - cyc_sum - num_cycles(partial)
                    if twice % 2:
                        raise ConsistencyError("odd Euler characteristic in a factorization")
                    hist[1 + twice // 2] += 1
                    continue
                for s in perms:
                    stack.append((_compose(partial, s), cyc_sum + cyc[s], depth + 1))
    return hist


def enumerate_factorizations(m: int, n: int, lam: Sequence[int], budget: int | None = DEFAULT_BUDGET,
                             workers: int | None = 1) -> GenusHistogram:
    """Genus histogram of all ``(phi, s_0, ..., s_{m-1})`` with ``phi`` of type ``lam``,
    ``s_0`` an n-cycle and product the identity."""
    if m < 2:
        raise DomainError(f"m must be at least 2, got {m}")
    lam = Partition(lam)
    if lam.n != n or n < 1:
        raise DomainError(f"{list(lam)} is not a partition of {n}")
    _check_budget(factorization_space_size(m, n, lam), budget, "factorization space")
    phis = [tuple(p) for p in enumerate_class(lam)]
    sigma0s = [tuple(p) for p in enumerate_class([n])]
    return _run(_factorization_worker, phis, (sigma0s, m - 2, n, m, len(lam)), workers)


# embeddings of Eulerian digraphs
#
# Dart 2i is the tail end of edge i (an out-dart at its tail vertex), dart
# 2i+1 the head end.  A rotation system gives each vertex a cyclic order of
# its darts; face-oriented embeddings are exactly those in which out- and
# in-darts alternate at every vertex.


@dataclass(frozen=True)
class RotationSystem:
    """``orders[v]`` is the cyclic order of darts around vertex ``v``."""

    orders: tuple[tuple[int, ...], ...]

    def successor(self) -> dict[int, int]:
        succ = {}
        for order in self.orders:
            for k, d in enumerate(order):
                succ[d] = order[(k + 1) % len(order)]
        return succ

    def is_alternating(self) -> bool:
        return all(
            len(order) % 2 == 0 and all((order[k] + order[(k + 1) % len(order)]) % 2 == 1 for k in range(len(order)))
            for order in self.orders
            if order
        )


def _vertex_darts(D: EulerianDigraph, v: int) -> tuple[list[int], list[int]]:
    outs = [2 * i for i in D.out_edges(v)]
    ins = [2 * i + 1 for i in D.in_edges(v)]
    return outs, ins


def alternating_rotations(outs: Sequence[int], ins: Sequence[int]) -> Iterable[tuple[int, ...]]:
    """Alternating cyclic orders, each listed once starting from ``outs[0]``."""
    if not outs:
        yield ()
        return
    first, rest = outs[0], list(outs[1:])
    for po in permutations(rest):
        o = (first,) + po
        for pi in permutations(ins):
            order = []
            for a, b in zip(o, pi):
                order += (a, b)
            yield tuple(order)


def embedding_space_size(D: EulerianDigraph) -> int:
    return total_embeddings(D)


def _face_cycles(succ, num_darts):
    seen = bytearray(num_darts)
    faces = []
    for start in range(num_darts):
        if seen[start]:
            continue
        face = []
        d = start
        while not seen[d]:
            seen[d] = 1
            face.append(d)
            d = succ[d ^ 1]
        faces.append(face)
    return faces


def face_trace(D: EulerianDigraph, rot: RotationSystem) -> tuple[int, list[list[int]]]:
    """Trace faces by ``d -> succ(reverse(d))``; return ``(face_count, faces)``.

    Every face must consist of darts of one kind (all traversed along, or all
    against, the edge orientation); a mixed face raises ConsistencyError.
    """
    if len(rot.orders) != D.num_vertices:
        raise DomainError("rotation system does not match the digraph")
    for v, order in enumerate(rot.orders):
        outs, ins = _vertex_darts(D, v)
        if sorted(order) != sorted(outs + ins):
            raise DomainError(f"rotation at vertex {v} does not list its darts")
    if not rot.is_alternating():
        raise DomainError("rotation system is not alternating")
    faces = _face_cycles(rot.successor(), 2 * D.num_edges)
    for face in faces:
        if len({d & 1 for d in face}) != 1:
            raise ConsistencyError(f"face {face} is not uniformly oriented")
    return len(faces), faces


def _genus(v: int, e: int, f: int) -> int:
    twice = 2 - v + e - f
    if twice % 2 or twice < 0:
        raise ConsistencyError(f"Euler characteristic gives non-integral genus (v={v}, e={e}, f={f})")
    return twice // 2


def _embedding_worker(first_choices, rest_choices, num_darts, num_vertices, num_edges):
    hist = Counter()
    succ = [0] * num_darts
    for combo in product(first_choices, *rest_choices):
        for order in combo:
            k = len(order)
            for i in range(k):
                succ[order[i]] = order[(i + 1) % k]
        seen = bytearray(num_darts)
        faces = 0
        for s in range(num_darts):
            if seen[s]:
                continue
            faces += 1
            d = s
            kind = d & 1
            while not seen[d]:
                seen[d] = 1
                if d & 1 != kind:
                    raise ConsistencyError("traced a face that is not uniformly oriented")
                d = succ[d ^ 1]
        hist[_genus(num_vertices, num_edges, faces)] += 1
    return hist


def enumerate_embeddings(D: EulerianDigraph, budget: int | None = DEFAULT_BUDGET,
                         workers: int | None = 1) -> GenusHistogram:
    """Genus histogram over all face-oriented embeddings (alternating rotation systems)."""
    if D.num_edges == 0:
        return GenusHistogram({0: 1})
    _check_budget(embedding_space_size(D), budget, "rotation-system space")
    per_vertex = [list(alternating_rotations(*_vertex_darts(D, v))) for v in range(D.num_vertices)]
    # outermost coordinate: the vertex with most choices gives the best split
    order = sorted(range(D.num_vertices), key=lambda v: -len(per_vertex[v]))
    outer = per_vertex[order[0]]
    rest = [per_vertex[v] for v in order[1:]]
    return _run(_embedding_worker, outer, (rest, 2 * D.num_edges, D.num_vertices, D.num_edges), workers)


# 4-tuples (phi_w, s_w, phi_b, s_b) with phi_w s_w phi_b s_b = id


def _bieulerian_worker(sigma_bs, sigma_ws, perms, n):
    hist = Counter()
    cyc = {p: num_cycles(p) for p in perms}
    for sb in sigma_bs:
        for sw in sigma_ws:
            head = cyc[sw] + 1
            for pb in perms:
                # phi_w = (s_w phi_b s_b)^{-1}
                rest = _compose(sw, _compose(pb, sb))
                twice = 2 * n + 2 - head - cyc[pb] - cyc[rest]
                if twice % 2:
                    raise ConsistencyError("odd Euler characteristic in a rotation system")
                hist[twice // 2] += 1
    return hist


def enumerate_bieulerian_4tuples(n: int, lam: Sequence[int], budget: int | None = DEFAULT_BUDGET,
                                 workers: int | None = 1) -> GenusHistogram:
    """Rotation-system 4-tuples with an n-cycle black rotation and white rotation of type ``lam``."""
    lam = Partition(lam)
    if lam.n != n or n < 1:
        raise DomainError(f"{list(lam)} is not a partition of {n}")
    size = factorial(n - 1) * conjugacy_class_size(lam) * factorial(n)
    _check_budget(size, budget, "rotation-system 4-tuple space")
    sigma_bs = [tuple(p) for p in enumerate_class([n])]
    sigma_ws = [tuple(p) for p in enumerate_class(lam)]
    perms = list(permutations(range(n)))
    return _run(_bieulerian_worker, sigma_bs, (sigma_ws, perms, n), workers)


# exhaustive class-tuple counts (for checking the Frobenius formula)


def class_tuple_counts(n: int, k: int, budget: int | None = DEFAULT_BUDGET) -> Counter:
    """``{(type(s_1), ..., type(s_k)): count}`` over all ``s_1 ... s_k = id`` in S_n."""
    if k < 1:
        raise DomainError("k must be at least 1")
    _check_budget(factorial(n) ** (k - 1), budget, "class-tuple space")
    perms = list(permutations(range(n)))
    types = {p: cycle_type(p) for p in perms}
    out = Counter()
    ident = tuple(range(n))
    for head in product(perms, repeat=k - 1):
        partial = ident
        for s in head:
            partial = _compose(partial, s)
        # last factor is partial^{-1}, same cycle type
        out[tuple(types[s] for s in head) + (types[partial],)] += 1
    return out


def count_factorizations(cycle_types: Sequence[Sequence[int]], budget: int | None = DEFAULT_BUDGET) -> int:
    """Exhaustive count of ``s_1 ... s_k = id`` with prescribed cycle types."""
    mus = [Partition(mu) for mu in cycle_types]
    if not mus:
        raise DomainError("need at least one cycle type")
    n = mus[0].n
    if any(mu.n != n for mu in mus):
        raise DomainError("all cycle types must have the same weight")
    size = 1
    for mu in mus[:-1]:
        size *= conjugacy_class_size(mu)
    _check_budget(size, budget, "factorization space")
    classes = [[tuple(p) for p in enumerate_class(mu)] for mu in mus[:-1]]
    target = mus[-1]
    count = 0
    ident = tuple(range(n))
    for head in product(*classes):
        partial = ident
        for s in head:
            partial = _compose(partial, s)
        if cycle_type(partial) == target:
            count += 1
    return count
