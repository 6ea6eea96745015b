"""Exact univariate polynomials over the rationals.

Polynomials are dense, constant term first, with :class:`fractions.Fraction`
coefficients.  Everything here is exact; the real-root counting below is a
Sturm-chain certificate and never touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import DomainError

__all__ = [
    "ExactPoly",
    "falling_factorial_H",
    "shift",
    "apply_operator",
    "derivative",
    "evaluate",
    "poly_gcd",
    "squarefree_part",
    "squarefree_decomposition",
    "sturm_chain",
    "sturm_count",
    "count_real_roots",
]


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c)
    return Fraction(c)


class ExactPoly:
    """Immutable dense polynomial with rational coefficients.

    ``ExactPoly([c0, c1, c2])`` is ``c0 + c1*t + c2*t**2``.  Trailing zeros are
    stripped, so the zero polynomial has ``coeffs == ()`` and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ExactPoly is immutable")

    # constructors

    @classmethod
    def constant(cls, c) -> "ExactPoly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "ExactPoly":
        if k < 0:
            raise DomainError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "ExactPoly":
        """Monic polynomial ``prod (t - r)``."""
        p = cls([1])
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    # basic queries

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, ExactPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ExactPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ExactPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_strings(self) -> list[str]:
        """Coefficient strings, constant term first (the JSON wire form)."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "ExactPoly":
        return cls(Fraction(s) for s in items)

    # ring operations

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ExactPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ExactPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return ExactPoly(out)

    __rmul__ = __mul__

    def scale(self, k) -> "ExactPoly":
        k = _frac(k)
        return ExactPoly(c * k for c in self.coeffs)

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative power of a polynomial")
        result = ExactPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        if len(rem) - 1 < dq:
            return ExactPoly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j, d in enumerate(other.coeffs):
                    rem[k + j] -= c * d
        return ExactPoly(quot), ExactPoly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "ExactPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def __call__(self, x):
        return evaluate(self, x)


def _coerce(x) -> ExactPoly:
    if isinstance(x, ExactPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return ExactPoly([x])
    raise TypeError(f"cannot coerce {type(x).__name__} to ExactPoly")


def evaluate(p: ExactPoly, x) -> Fraction:
    """Horner evaluation at a rational point."""
    x = _frac(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def derivative(p: ExactPoly, order: int = 1) -> ExactPoly:
    cs = list(p.coeffs)
    for _ in range(order):
        cs = [k * cs[k] for k in range(1, len(cs))]
    return ExactPoly(cs)


def taylor_shift(p: ExactPoly, h) -> ExactPoly:
    """Return ``p(t + h)``."""
    h = _frac(h)
    cs = p.coeffs
    d = len(cs)
    out = [Fraction(0)] * d
    for i, c in enumerate(cs):
        if c == 0:
            continue
        hp = Fraction(1)
        # c * (t+h)^i = c * sum_j C(i,j) h^(i-j) t^j
        for j in range(i, -1, -1):
            out[j] += c * comb(i, j) * hp
            hp *= h
    return ExactPoly(out)


def shift(p: ExactPoly, times: int = 1) -> ExactPoly:
    """Backward shift: ``p(t) -> p(t - times)``."""
    if times == 0:
        return p
    return taylor_shift(p, -times)


def apply_operator(r: ExactPoly, p: ExactPoly) -> ExactPoly:
    """Evaluate the shift-operator polynomial ``r(T)`` on ``p``.

    ``sum_k [z^k]r * p(t - k)``.
    """
    out = ExactPoly()
    for k, c in enumerate(r.coeffs):
        if c:
            out = out + shift(p, k).scale(c)
    return out


def falling_factorial_H(n: int, a: int) -> ExactPoly:
    """``prod_{k=-a}^{n-a-1} (t + k)``; the content polynomial of the hook [n-a, 1^a]."""
    if n < 1 or not 0 <= a <= n - 1:
        raise DomainError(f"need 0 <= a <= n-1, got n={n}, a={a}")
    return ExactPoly.from_roots(-k for k in range(-a, n - a))


# gcd and square-free reduction


def poly_gcd(p: ExactPoly, q: ExactPoly) -> ExactPoly:
    """Monic gcd (zero if both are zero)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: ExactPoly) -> ExactPoly:
    if p.is_zero():
        raise DomainError("square-free part of the zero polynomial")
    if p.degree <= 0:
        return ExactPoly([1])
    return (p // poly_gcd(p, derivative(p))).monic()


def squarefree_decomposition(p: ExactPoly) -> list[tuple[ExactPoly, int]]:
    """Yun's algorithm: monic square-free, pairwise coprime ``(f_i, i)`` with ``p = lc * prod f_i^i``.

    Factors equal to 1 are omitted.
    """
    if p.is_zero():
        raise DomainError("square-free decomposition of the zero polynomial")
    out = []
    if p.degree <= 0:
        return out
    dp = derivative(p)
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - derivative(b)
    i = 1
    while b.degree > 0:
        f = poly_gcd(b, d)
        if f.degree > 0:
            out.append((f, i))
        b = b // f
        c = d // f
        d = c - derivative(b)
        i += 1
    return out


# Sturm chains

_INF = float("inf")


def sturm_chain(p: ExactPoly) -> list[ExactPoly]:
    """Sturm sequence of the square-free part of ``p``."""
    f = squarefree_part(p)
    chain = [f, derivative(f)]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    return chain[:-1]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_at(q: ExactPoly, x) -> int:
    if x == _INF:
        return _sign(q.leading)
    if x == -_INF:
        return _sign(q.leading) * (-1) ** (q.degree % 2)
    return _sign(evaluate(q, x))


def _variations(chain: Sequence[ExactPoly], x) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_count(p: ExactPoly, lo=-_INF, hi=_INF) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    Endpoints are rationals (anything ``Fraction`` accepts) or ``±inf``.
    """
    if p.is_zero():
        raise DomainError("Sturm count of the zero polynomial")
    if lo not in (_INF, -_INF):
        lo = _frac(lo)
    if hi not in (_INF, -_INF):
        hi = _frac(hi)
    if not lo < hi:
        return 0
    chain = sturm_chain(p)
    return _variations(chain, lo) - _variations(chain, hi)


def count_real_roots(p: ExactPoly, lo=-_INF, hi=_INF) -> int:
    """Real roots in ``(lo, hi]`` counted with multiplicity."""
    return sum(i * sturm_count(f, lo, hi) for f, i in squarefree_decomposition(p))
