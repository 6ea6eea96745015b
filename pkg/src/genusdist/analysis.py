"""Log-concavity, real-rootedness certificates and genus moments.

The transformed genus variable is ``X = (m-1)n + 1 - 2g``, i.e. the exponent
of ``t`` in the auxiliary polynomial, for a uniformly random factorization.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import NamedTuple, Sequence

from .characters import r_poly
from .combinatorics import Partition
from .errors import DomainError
from .genus_core import GenusPolynomial, gamma_constellation
from .polyring import ExactPoly, count_real_roots, sturm_count

__all__ = [
    "LogConcavity",
    "RootCertificate",
    "MomentReport",
    "is_log_concave",
    "certify_real_rooted_nonpositive",
    "harmonic",
    "expected_X",
    "variance_X",
    "variance_correction_m3",
    "expected_genus",
    "variance_genus",
    "moments_from_gamma",
    "asymptotic_params",
    "moment_report",
]


class LogConcavity(NamedTuple):
    holds: bool | None  # None: sequence has an internal zero
    index: int | None  # first k with a_k^2 < a_{k-1} a_{k+1}

    def __bool__(self):
        return bool(self.holds)


def is_log_concave(coeffs: Sequence[int]) -> LogConcavity:
    """Exact check of ``a_k^2 >= a_{k-1} a_{k+1}`` on the strictly positive range.

    Leading and trailing zeros are ignored; an internal zero makes the test
    not applicable.  Indices in the result refer to the original sequence.
    """
    coeffs = list(getattr(coeffs, "coeffs", coeffs))
    if not coeffs:
        raise DomainError("empty sequence")
    nz = [k for k, c in enumerate(coeffs) if c != 0]
    if not nz:
        return LogConcavity(None, None)
    lo, hi = nz[0], nz[-1]
    seg = coeffs[lo:hi + 1]
    if any(c < 0 for c in seg):
        raise DomainError("log-concavity is defined for non-negative sequences")
    if any(c == 0 for c in seg):
        return LogConcavity(None, None)
    for k in range(1, len(seg) - 1):
        if seg[k] * seg[k] < seg[k - 1] * seg[k + 1]:
            return LogConcavity(False, lo + k)
    return LogConcavity(True, None)


@dataclass(frozen=True)
class RootCertificate:
    degree: int
    real_roots: int  # with multiplicity
    positive_roots: int  # distinct, by Sturm on (0, inf)
    nonnegative_coeffs: bool
    real_rooted: bool
    all_roots_nonpositive: bool | None  # None when not real-rooted

    def __bool__(self):
        return self.real_rooted and bool(self.all_roots_nonpositive)

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "real_roots": self.real_roots,
            "positive_roots": self.positive_roots,
            "nonnegative_coeffs": self.nonnegative_coeffs,
            "real_rooted": self.real_rooted,
            "all_roots_nonpositive": self.all_roots_nonpositive,
        }


def certify_real_rooted_nonpositive(gamma) -> RootCertificate:
    """Exact Sturm certificate that every root is real and ``<= 0``.

    Accepts a :class:`GenusPolynomial`, an :class:`ExactPoly` or a coefficient
    sequence (constant term first).
    """
    if isinstance(gamma, ExactPoly):
        p = gamma
    else:
        p = ExactPoly(getattr(gamma, "coeffs", gamma))
    if p.is_zero():
        raise DomainError("cannot certify the zero polynomial")
    deg = p.degree
    nonneg = all(c >= 0 for c in p.coeffs)
    if deg == 0:
        return RootCertificate(0, 0, 0, nonneg, True, True)
    real = count_real_roots(p)
    positive = sturm_count(p, 0, float("inf"))
    real_rooted = real == deg
    nonpos = (positive == 0) if real_rooted else None
    return RootCertificate(deg, real, positive, nonneg, real_rooted, nonpos)


# moments


@lru_cache(maxsize=64)
def harmonic(n: int, power: int = 1) -> Fraction:
    return sum((Fraction(1, k ** power) for k in range(1, n + 1)), Fraction(0))


def _check(m: int, n: int, lam) -> Partition:
    if m < 3:
        raise DomainError(f"moment formulas need m >= 3, got {m}")
    lam = Partition(lam)
    if lam.n != n or n < 1:
        raise DomainError(f"{list(lam)} is not a partition of {n}")
    return lam


def expected_X(m: int, n: int, lam: Sequence[int]) -> Fraction:
    """``len(lam) + (m-1) H_n``."""
    lam = _check(m, n, lam)
    return len(lam) + (m - 1) * harmonic(n)


def variance_correction_m3(n: int, lam: Sequence[int]) -> Fraction:
    """``2/n^2 * sum_{k=1}^{n-1} [z^k] R_{n,lam} / C(n-1, k-1)^2``; the extra term at m = 3."""
    r = r_poly(n, lam)
    # every C(n-1, j) divides lcm(1..n); sum over that common denominator,
    # stepping q_k = lcm / C(n-1, k-1) by small-integer ratios
    common = lcm(*range(1, n + 1))
    q = common
    numer = 0
    for k in range(1, n):
        c = r[k]
        if c:
            numer += int(c) * q * q
        q, rem = divmod(q * k, n - k)
        if rem:
            raise ArithmeticError("binomial does not divide lcm(1..n)")
    return Fraction(2 * numer, n * n * common * common)


def variance_X(m: int, n: int, lam: Sequence[int]) -> Fraction:
    lam = _check(m, n, lam)
    base = (m - 1) * (harmonic(n) - harmonic(n, 2))
    if m == 3:
        base += variance_correction_m3(n, lam)
    return base


def expected_genus(m: int, n: int, lam: Sequence[int]) -> Fraction:
    return ((m - 1) * n + 1 - expected_X(m, n, lam)) / 2


def variance_genus(m: int, n: int, lam: Sequence[int]) -> Fraction:
    return variance_X(m, n, lam) / 4


class Moments(NamedTuple):
    mean_genus: Fraction
    var_genus: Fraction
    mean_X: Fraction
    var_X: Fraction


def moments_from_gamma(gamma: GenusPolynomial, m: int | None = None, n: int | None = None) -> Moments:
    """Exact moments of the normalized genus distribution ``coeffs / total``.

    ``m`` and ``n`` (for the ``X`` shift) default to the polynomial's metadata;
    without them only the genus moments are meaningful and ``X`` uses shift 0.
    """
    coeffs = getattr(gamma, "coeffs", gamma)
    m = m if m is not None else getattr(gamma, "m", None)
    n = n if n is not None else getattr(gamma, "n", None)
    total = sum(coeffs)
    if total == 0:
        raise DomainError("zero distribution")
    e1 = Fraction(sum(g * c for g, c in enumerate(coeffs)), total)
    e2 = Fraction(sum(g * g * c for g, c in enumerate(coeffs)), total)
    var_g = e2 - e1 * e1
    top = (m - 1) * n + 1 if m is not None and n is not None else 0
    return Moments(e1, var_g, top - 2 * e1, 4 * var_g)


def asymptotic_params(m: int, n: int, lam: Sequence[int], precision: int = 50) -> tuple[Decimal, Decimal]:
    """Centre and variance of the limiting normal law of the genus.

    ``mu = ((m-1)n - len(lam))/2 - (m-1)/2 ln n`` and ``sigma^2 = (m-1)/4 ln n``.
    At ``n = 1`` this degenerates to ``sigma^2 = 0``, which is returned as is.
    """
    lam = _check(m, n, lam)
    with localcontext() as ctx:
        ctx.prec = precision + 10
        ln_n = Decimal(n).ln()
        mu = Decimal((m - 1) * n - len(lam)) / 2 - Decimal(m - 1) / 2 * ln_n
        sigma2 = Decimal(m - 1) / 4 * ln_n
        ctx.prec = precision
        return +mu, +sigma2


def _ratio(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class MomentReport:
    m: int
    n: int
    lam: Partition
    mean_X: Fraction
    var_X: Fraction
    mean_genus: Fraction
    var_genus: Fraction
    mu: Decimal
    sigma2: Decimal
    precision: int
    direct: Moments | None = None

    @property
    def direct_agrees(self) -> bool | None:
        if self.direct is None:
            return None
        return self.direct.mean_X == self.mean_X and self.direct.var_X == self.var_X

    def to_json_dict(self) -> dict:
        out = {
            "m": self.m,
            "n": self.n,
            "lambda": list(self.lam),
            "E[X]": _ratio(self.mean_X),
            "Var[X]": _ratio(self.var_X),
            "E[g]": _ratio(self.mean_genus),
            "Var[g]": _ratio(self.var_genus),
            "mu_m": {"value": str(self.mu), "precision": self.precision},
            "sigma_m^2": {"value": str(self.sigma2), "precision": self.precision},
        }
        if self.direct is not None:
            out["direct_agrees"] = self.direct_agrees
        return out


def moment_report(m: int, n: int, lam: Sequence[int], precision: int = 50, direct_max_n: int = 12) -> MomentReport:
    """Closed-form moments; cross-checked against the full distribution when ``n <= direct_max_n``."""
    lam = _check(m, n, lam)
    direct = moments_from_gamma(gamma_constellation(m, n, lam, route="operator")) if n <= direct_max_n else None
    mu, sigma2 = asymptotic_params(m, n, lam, precision)
    return MomentReport(
        m, n, lam,
        expected_X(m, n, lam), variance_X(m, n, lam),
        expected_genus(m, n, lam), variance_genus(m, n, lam),
        mu, sigma2, precision, direct,
    )
