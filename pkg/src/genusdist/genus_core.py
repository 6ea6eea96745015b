"""Genus polynomials of one-face constellations and of Eulerian digraphs.

For ``m >= 2`` and ``lam |- n`` the constellation polynomial counts
factorizations ``phi s_0 s_1 ... s_{m-1} = id`` with ``phi`` of type ``lam``
and ``s_0`` an n-cycle, by genus.  It is obtained from the auxiliary
polynomial

    P(t) = |C(lam)|/n * t^len(lam) * sum_a (-1)^a H_{n,a}(t)^(m-1) chi^{[n-a,1^a]}_lam

through ``[x^g] Gamma = [t^((m-1)n + 1 - 2g)] P``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .characters import mn_character, r_poly
from .combinatorics import (
    Partition,
    conjugacy_class_size,
    content_polynomial,
    hook_partition,
)
from .digraphs import EulerianDigraph, total_embeddings
from .errors import ConsistencyError, DomainError, NotAFanError
from .polyring import ExactPoly, apply_operator, falling_factorial_H

__all__ = [
    "GenusPolynomial",
    "PPoly",
    "p_poly",
    "p_to_gamma",
    "gamma_constellation",
    "gamma_digraph",
    "digraph_prefactor",
    "bouquet_gamma",
    "dipole_gamma",
    "fan_partition",
    "fan_gamma",
    "format_poly",
]

FAMILIES = ("constellation", "digraph", "bouquet", "dipole", "fan")

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def format_poly(coeffs: Sequence[int], var: str = "x", ascii: bool = False) -> str:
    """``"12 + 96x + 36x²"``; zero terms are skipped, a unit coefficient is dropped."""
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        power = "" if k == 1 else (f"^{k}" if ascii else str(k).translate(_SUPERSCRIPTS))
        terms.append(f"{'' if c == 1 else c}{var}{power}")
    return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class GenusPolynomial:
    """Genus-indexed counts ``coeffs[g]`` plus where they came from."""

    coeffs: tuple[int, ...]
    family: str = "constellation"
    m: int | None = None
    n: int | None = None
    lam: Partition | None = None
    extra: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        cs = [int(c) for c in self.coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if any(c < 0 for c in cs):
            raise ConsistencyError(f"negative genus count in {cs}")
        object.__setattr__(self, "coeffs", tuple(cs))
        if self.lam is not None:
            object.__setattr__(self, "lam", Partition(self.lam))
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def total(self) -> int:
        return sum(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def as_dict(self) -> dict[int, int]:
        """Histogram form ``{genus: count}`` without zero entries."""
        return {g: c for g, c in enumerate(self.coeffs) if c}

    def __str__(self):
        return format_poly(self.coeffs)

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "m": self.m,
            "n": self.n,
            "lambda": list(self.lam) if self.lam is not None else None,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "GenusPolynomial":
        lam = data.get("lambda")
        return cls(
            coeffs=tuple(int(c) for c in data["coeffs"]),
            family=data["family"],
            m=data.get("m"),
            n=data.get("n"),
            lam=Partition(lam) if lam is not None else None,
        )


@dataclass(frozen=True)
class PPoly:
    poly: ExactPoly
    m: int
    n: int
    lam: Partition

    @property
    def top_exponent(self) -> int:
        return (self.m - 1) * self.n + 1


def _check_args(m: int, n: int, lam) -> Partition:
    if m < 2:
        raise DomainError(f"m must be at least 2, got {m}")
    lam = Partition(lam)
    if n < 1 or lam.n != n:
        raise DomainError(f"{list(lam)} is not a partition of {n}")
    return lam


@lru_cache(maxsize=None)
def _h_power(n: int, a: int, e: int) -> ExactPoly:
    return content_polynomial(hook_partition(n, a)) ** e


def p_poly(m: int, n: int, lam: Sequence[int], route: str = "character") -> PPoly:
    """The auxiliary polynomial in ``t`` for ``(m, n, lam)``.

    ``route="character"`` sums over hooks with characters from the
    Murnaghan-Nakayama recursion and hook content polynomials.
    ``route="operator"`` applies ``r_poly(n, lam)`` as a polynomial in the
    backward shift to ``H_{n,0}(t)^(m-1)``.
    """
    lam = _check_args(m, n, lam)
    if route == "character":
        body = ExactPoly()
        for a in range(n):
            chi = mn_character(hook_partition(n, a), lam)
            if chi:
                body = body + _h_power(n, a, m - 1).scale((-1) ** a * chi)
    elif route == "operator":
        body = apply_operator(r_poly(n, lam), falling_factorial_H(n, 0) ** (m - 1))
    else:
        raise DomainError(f"unknown route {route!r}")
    scale = Fraction(conjugacy_class_size(lam), n)
    poly = ExactPoly.monomial(len(lam)) * body.scale(scale)
    return PPoly(poly, m, n, lam)


def p_to_gamma(p: PPoly) -> GenusPolynomial:
    """``[x^g] Gamma = [t^(top - 2g)] P`` with parity and integrality enforced."""
    top = p.top_exponent
    coeffs = []
    for k, c in enumerate(p.poly.coeffs):
        if c == 0:
            continue
        if (top - k) % 2:
            raise ConsistencyError(f"t^{k} has the wrong parity for top exponent {top}")
        if c.denominator != 1 or c < 0:
            raise ConsistencyError(f"coefficient {c} of t^{k} is not a non-negative integer")
    if p.poly.degree > top:
        raise ConsistencyError("P has degree above (m-1)n+1")
    for g in range(top // 2 + 1):
        coeffs.append(int(p.poly[top - 2 * g]))
    return GenusPolynomial(tuple(coeffs), "constellation", p.m, p.n, p.lam)


def gamma_constellation(m: int, n: int, lam: Sequence[int], route: str = "character") -> GenusPolynomial:
    return p_to_gamma(p_poly(m, n, lam, route))


def digraph_prefactor(lam: Sequence[int]) -> Fraction:
    """``(prod lam_i!)^2 * prod m_i(lam)! / n!``."""
    lam = Partition(lam)
    num = prod(factorial(p) for p in lam) ** 2 * prod(factorial(k) for k in lam.multiplicities().values())
    return Fraction(num, factorial(lam.n))


def gamma_digraph(n: int, lam: Sequence[int], route: str = "character") -> GenusPolynomial:
    """Genus polynomial of face-oriented embeddings of ``D_{n,lam}``."""
    lam = _check_args(3, n, lam)
    base = gamma_constellation(3, n, lam, route)
    c = digraph_prefactor(lam)
    coeffs = []
    for v in base.coeffs:
        w = c * v
        if w.denominator != 1:
            raise ConsistencyError(f"digraph genus count {w} is not an integer")
        coeffs.append(int(w))
    return GenusPolynomial(tuple(coeffs), "digraph", 3, n, lam)


def bouquet_gamma(n: int) -> GenusPolynomial:
    """Directed bouquet of ``n`` loops; same distribution as ``D_{n,[1^n]}``."""
    g = gamma_digraph(n, [1] * n)
    return GenusPolynomial(g.coeffs, "bouquet", 3, n, g.lam)


def dipole_gamma(n: int) -> GenusPolynomial:
    g = gamma_digraph(n, [n])
    return GenusPolynomial(g.coeffs, "dipole", 3, n, g.lam)


def fan_partition(D: EulerianDigraph, handle: int) -> Partition:
    """Partition of the handle's in-degree by the forest component each in-edge comes from.

    Raises :class:`NotAFanError` unless deleting ``handle`` leaves a forest.
    """
    if not 0 <= handle < D.num_vertices:
        raise DomainError(f"handle {handle} is not a vertex")
    parent = list(range(D.num_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t, h in D.edges:
        if t == handle and h == handle:
            raise NotAFanError(f"loop at handle {handle}")
        if handle in (t, h):
            continue
        rt, rh = find(t), find(h)
        if rt == rh:
            raise NotAFanError(f"removing vertex {handle} leaves a cycle through edge ({t}, {h})")
        parent[rt] = rh
    counts: dict[int, int] = {}
    for t, h in D.edges:
        if h == handle:
            counts[find(t)] = counts.get(find(t), 0) + 1
    if not counts:
        raise NotAFanError(f"handle {handle} has no incident edges")
    return Partition(sorted(counts.values(), reverse=True))


def fan_gamma(D: EulerianDigraph, handle: int) -> GenusPolynomial:
    """Genus polynomial of an Eulerian fan, proportional to that of ``D_{n,lam}``.

    The constant is fixed by the total number of face-oriented embeddings,
    ``prod_v d_v! (d_v - 1)!``.
    """
    lam = fan_partition(D, handle)
    base = gamma_digraph(lam.n, lam)
    c = Fraction(total_embeddings(D), base.total())
    coeffs = []
    for v in base.coeffs:
        w = c * v
        if w.denominator != 1:
            raise ConsistencyError(f"fan genus count {w} is not an integer (scale {c})")
        coeffs.append(int(w))
    return GenusPolynomial(tuple(coeffs), "fan", 3, lam.n, lam, extra={"handle": handle, "scale": c})
