"""Labeled Eulerian digraphs and the standard families built from them."""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial, prod
from pathlib import Path
from typing import Sequence

from .combinatorics import Partition
from .errors import DomainError, NotEulerianError

__all__ = [
    "EulerianDigraph",
    "bipartite_digraph",
    "dipole",
    "bouquet",
    "directed_cycle",
    "total_embeddings",
]


@dataclass(frozen=True)
class EulerianDigraph:
    """Directed multigraph on ``0..num_vertices-1``; edge ``i`` is ``edges[i] = (tail, head)``.

    Loops and parallel edges are allowed.  Construction checks that every
    vertex is balanced and the underlying graph is connected.
    """

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(t), int(h)) for t, h in self.edges))
        if self.num_vertices < 1:
            raise DomainError("a digraph needs at least one vertex")
        for t, h in self.edges:
            if not (0 <= t < self.num_vertices and 0 <= h < self.num_vertices):
                raise DomainError(f"edge ({t}, {h}) references a missing vertex")
        outd, ind = self.out_degrees(), self.in_degrees()
        bad = [v for v in range(self.num_vertices) if outd[v] != ind[v]]
        if bad:
            raise NotEulerianError(f"vertices {bad} have in-degree != out-degree")
        if not self._connected():
            raise NotEulerianError("underlying graph is not connected")

    def out_degrees(self) -> list[int]:
        d = [0] * self.num_vertices
        for t, _ in self.edges:
            d[t] += 1
        return d

    def in_degrees(self) -> list[int]:
        d = [0] * self.num_vertices
        for _, h in self.edges:
            d[h] += 1
        return d

    def half_degree(self, v: int) -> int:
        return self.out_degrees()[v]

    def out_edges(self, v: int) -> list[int]:
        return [i for i, (t, _) in enumerate(self.edges) if t == v]

    def in_edges(self, v: int) -> list[int]:
        return [i for i, (_, h) in enumerate(self.edges) if h == v]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def _connected(self) -> bool:
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for t, h in self.edges:
            parent[find(t)] = find(h)
        return len({find(v) for v in range(self.num_vertices)}) == 1

    # JSON: {"vertices": k, "edges": [[tail, head], ...]}

    def to_json_dict(self) -> dict:
        return {"vertices": self.num_vertices, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "EulerianDigraph":
        try:
            return cls(int(data["vertices"]), tuple(tuple(e) for e in data["edges"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed digraph JSON: {exc}") from exc

    @classmethod
    def load(cls, path) -> "EulerianDigraph":
        return cls.from_json_dict(json.loads(Path(path).read_text()))

    def dump(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_json_dict()) + "\n")


def bipartite_digraph(lam: Sequence[int]) -> EulerianDigraph:
    """``D_{n,lam}``: black vertex 0 of half-degree n, white vertex i of half-degree lam[i-1].

    Edges ``0..n-1`` leave the white vertices (in order), edges ``n..2n-1``
    leave the black vertex.
    """
    lam = Partition(lam)
    if not lam:
        raise DomainError("empty partition")
    white_out, black_out = [], []
    for i, part in enumerate(lam, start=1):
        white_out += [(i, 0)] * part
        black_out += [(0, i)] * part
    return EulerianDigraph(len(lam) + 1, tuple(white_out + black_out))


def dipole(n: int) -> EulerianDigraph:
    return bipartite_digraph([n])


def bouquet(n: int) -> EulerianDigraph:
    """One vertex with ``n`` loops."""
    return EulerianDigraph(1, tuple((0, 0) for _ in range(n)))


def directed_cycle(k: int) -> EulerianDigraph:
    return EulerianDigraph(k, tuple((i, (i + 1) % k) for i in range(k)))


def _alternating_orders(d: int) -> int:
    # cyclic orders of d out- and d in-darts that alternate
    if d == 0:
        return 1
    return factorial(d) * factorial(d - 1)


def total_embeddings(D: EulerianDigraph) -> int:
    """Number of face-oriented embeddings: ``prod_v d_v! (d_v - 1)!``."""
    return prod(_alternating_orders(d) for d in D.out_degrees())
