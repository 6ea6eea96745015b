from fractions import Fraction
from math import factorial

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from genusdist.errors import DomainError
from genusdist.polyring import (
    ExactPoly,
    apply_operator,
    count_real_roots,
    derivative,
    evaluate,
    falling_factorial_H,
    poly_gcd,
    shift,
    squarefree_decomposition,
    squarefree_part,
    sturm_count,
    taylor_shift,
)

t = ExactPoly([0, 1])
INF = float("inf")

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.lists(small, max_size=6).map(ExactPoly)
int_polys = st.lists(st.integers(-4, 4), max_size=5).map(ExactPoly)


def to_sympy(p):
    x = sympy.Symbol("x")
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)] or [0], x, domain="QQ")


def test_normalization():
    assert ExactPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert ExactPoly([0, 0]).is_zero() and ExactPoly([0]).coeffs == ()
    assert ExactPoly([Fraction(2, 4)])[0] == Fraction(1, 2)
    assert ExactPoly([1, 2])[5] == 0


def test_ring_examples():
    assert (t + 1) * (t - 1) == t ** 2 - 1
    assert (t * (t + 1)) ** 2 == ExactPoly([0, 0, 1, 2, 1])
    assert (t + 3) * ExactPoly() == ExactPoly()
    q, r = divmod(t ** 3 - 1, t - 1)
    assert q == t ** 2 + t + 1 and r.is_zero()
    assert str(t ** 2 - 2 * t + 1) == "1 - 2*t + t^2"


def test_string_round_trip():
    p = ExactPoly([12, 96, 36])
    assert p.to_strings() == ["12", "96", "36"]
    assert ExactPoly.from_strings(p.to_strings()) == p
    q = ExactPoly([Fraction(-1, 3), 2])
    assert ExactPoly.from_strings(q.to_strings()) == q


def test_falling_factorial_examples():
    assert falling_factorial_H(2, 0) == t ** 2 + t
    assert falling_factorial_H(2, 1) == t ** 2 - t
    assert evaluate(falling_factorial_H(3, 1), 1) == 0
    assert evaluate(falling_factorial_H(4, 0), 1) == 24
    with pytest.raises(DomainError):
        falling_factorial_H(3, 3)


def test_shift_examples():
    assert shift(t ** 2) == t ** 2 - 2 * t + 1
    assert shift(ExactPoly([7])) == ExactPoly([7])
    assert shift(falling_factorial_H(4, 0), 2) == falling_factorial_H(4, 2)
    for n in range(1, 7):
        for a in range(n):
            assert shift(falling_factorial_H(n, 0), a) == falling_factorial_H(n, a)


def test_apply_operator_examples():
    p = t ** 3 + 2 * t
    assert apply_operator(ExactPoly([1]), p) == p
    assert apply_operator(t, p) == shift(p)
    assert apply_operator(1 - t, t ** 2) == 2 * t - 1


def test_derivative_examples():
    assert derivative(t ** 3) == 3 * t ** 2
    assert derivative(t ** 3, 2) == 6 * t
    assert derivative(ExactPoly([5])).is_zero()
    # second derivative of a shifted square at t = 1
    n, k = 3, 1
    val = evaluate(derivative(shift(falling_factorial_H(n, 0) ** 2, k), 2), 1)
    assert val == 2 * (factorial(n - k) * factorial(k - 1)) ** 2 == 8


def test_sturm_examples():
    assert sturm_count(t ** 2 - 1, -INF, 0) == 1
    assert sturm_count(t ** 2 + 1) == 0
    assert sturm_count(ExactPoly([12, 96, 36]), -INF, 0) == 2
    assert sturm_count(t ** 2 - 1, -1, 1) == 1  # half-open (lo, hi]
    with pytest.raises(DomainError):
        sturm_count(ExactPoly())


def test_multiplicities():
    p = (t + 1) ** 3 * (t - 2) * (t ** 2 + 1)
    assert sturm_count(p) == 2
    assert count_real_roots(p) == 4
    dec = squarefree_decomposition(p)
    assert {i for _, i in dec} == {1, 3}
    assert squarefree_part(p) == ((t + 1) * (t - 2) * (t ** 2 + 1)).monic()


@given(polys, polys)
def test_add_mul_match_sympy(p, q):
    assert to_sympy(p + q) == to_sympy(p) + to_sympy(q)
    assert to_sympy(p * q) == to_sympy(p) * to_sympy(q)


@given(polys, polys.filter(lambda q: not q.is_zero()))
def test_divmod_matches_sympy(p, q):
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree
    sq, sr = sympy.div(to_sympy(p), to_sympy(q))
    assert to_sympy(quo) == sq and to_sympy(rem) == sr


@given(polys, polys)
def test_gcd_matches_sympy(p, q):
    if p.is_zero() and q.is_zero():
        return
    g = poly_gcd(p, q)
    assert to_sympy(g) == sympy.gcd(to_sympy(p), to_sympy(q)).monic()


@settings(max_examples=60)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=5), st.lists(st.integers(-3, 3), max_size=3))
def test_root_counts_match_sympy(roots, quad_shifts):
    # real roots from `roots`, plus quadratic factors with or without real roots
    p = ExactPoly.from_roots(roots)
    for s in quad_shifts:
        p = p * (t ** 2 + s)
    assert sturm_count(p) == len(set(sympy.real_roots(to_sympy(p))))
    assert count_real_roots(p) == len(sympy.real_roots(to_sympy(p)))
    nonpos = [r for r in set(sympy.real_roots(to_sympy(p))) if r <= 0]
    assert sturm_count(p, -INF, 0) == len(nonpos)


@given(int_polys, int_polys)
def test_shift_is_ring_homomorphism(p, q):
    assert shift(p * q) == shift(p) * shift(q)
    assert shift(p + q) == shift(p) + shift(q)


@given(polys, small)
def test_taylor_shift_evaluates(p, h):
    assert evaluate(taylor_shift(p, h), 2) == evaluate(p, 2 + h)


@given(int_polys, int_polys, int_polys)
def test_operator_composition(r1, r2, p):
    assert apply_operator(r1 * r2, p) == apply_operator(r1, apply_operator(r2, p))


@given(polys, small)
def test_evaluate_matches_sympy(p, x):
    assert evaluate(p, x) == to_sympy(p).eval(sympy.Rational(x.numerator, x.denominator))
