from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from diophrec.errors import DomainError, InvalidInputError
from diophrec.exact import (
    AlgebraicNumber,
    UniPoly,
    alg_arith,
    alg_compare,
    charpoly,
    isolate_real_roots,
    poly_gcd,
    real_root_count,
    refine,
    sqrt,
    squarefree,
    sturm_sequence,
)
from diophrec.exact.polynomial import count_roots, qdivmod

X = sympy.Symbol("X")
mpmath.mp.dps = 40

small = st.integers(-20, 20)
polys = st.lists(small, min_size=1, max_size=6).map(lambda c: UniPoly(tuple(c)))


def to_sym(p: UniPoly):
    return sum(c * X ** i for i, c in enumerate(p.coeffs))


def tribonacci_alpha():
    (alpha,) = isolate_real_roots(UniPoly((-1, -1, -1, 1)))
    return alpha


# -- UniPoly ------------------------------------------------------------------

def test_unipoly_strips_and_renders():
    p = UniPoly((-1, -1, -1, 1, 0, 0))
    assert p.coeffs == (-1, -1, -1, 1)
    assert p.degree == 3
    assert str(p) == "X^3 - X^2 - X - 1"
    assert UniPoly(()).degree == -1


def test_unipoly_rejects_fractional_coefficients():
    with pytest.raises(InvalidInputError):
        UniPoly((Fraction(1, 2), 1))


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p - p).is_zero()


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_division_reconstructs(p, q):
    quo, rem = qdivmod(p.coeffs, q.coeffs)
    back = sum(c * X ** i for i, c in enumerate(quo)) * to_sym(q) \
        + sum(c * X ** i for i, c in enumerate(rem))
    assert sympy.expand(back - to_sym(p)) == 0
    nonzero = [i for i, c in enumerate(rem) if c]
    assert not nonzero or max(nonzero) < q.degree


@given(polys, polys)
def test_gcd_matches_sympy(p, q):
    if p.is_zero() and q.is_zero():
        return
    g = poly_gcd(p, q)
    expected = sympy.Poly(sympy.gcd(to_sym(p), to_sym(q)), X)
    assert sympy.Poly(to_sym(g), X).monic() == expected.monic()


def test_charpoly_matches_sympy():
    m = [[2, -1, 0], [1, 3, 4], [0, 5, -2]]
    got = charpoly(m)
    exp = sympy.Matrix(m).charpoly(X).all_coeffs()[::-1]
    assert [Fraction(int(c)) for c in exp] == got


# -- root isolation -------------------------------------------------------------

def test_tribonacci_root():
    roots = isolate_real_roots(UniPoly((-1, -1, -1, 1)))
    assert len(roots) == 1
    assert roots[0].approx == pytest.approx(1.839286755, abs=1e-9)


def test_rational_roots_are_points():
    roots = isolate_real_roots(UniPoly((-1, 0, 1)))
    assert [r.interval for r in roots] == [(-1, -1), (1, 1)]


def test_cubic_with_one_real_root():
    roots = isolate_real_roots(UniPoly((-1, -3, -2, 1)))
    assert len(roots) == 1
    assert roots[0].approx == pytest.approx(3.0796, abs=1e-4)


def test_zero_polynomial_rejected():
    with pytest.raises(InvalidInputError):
        isolate_real_roots(UniPoly(()))


@settings(max_examples=100, deadline=None)
@given(st.lists(small, min_size=4, max_size=4).filter(lambda c: c[3] != 0))
def test_root_count_against_sympy(c):
    p = UniPoly(tuple(c))
    roots = isolate_real_roots(p)
    expected = sorted(set(sympy.Poly(to_sym(p), X).real_roots()))
    assert len(roots) == len(expected) == real_root_count(p)
    for r, e in zip(roots, expected):
        assert r.lo <= e <= r.hi
        if not r.is_rational:
            sq = squarefree(p)
            assert sq.sign_at(r.lo) * sq.sign_at(r.hi) < 0
    seq = sturm_sequence(squarefree(p))
    assert count_roots(seq, None, None) == len(roots)


@settings(max_examples=100, deadline=None)
@given(st.lists(small, min_size=4, max_size=4).filter(lambda c: c[3] != 0))
def test_root_count_against_float_sampling(c):
    # sign changes on a dense float grid never exceed the exact count
    import numpy as np
    p = UniPoly(tuple(c))
    xs = np.linspace(-25, 25, 20001)
    vals = np.polyval(list(reversed(c)), xs)
    changes = int(np.sum(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0))
    assert changes <= len(isolate_real_roots(p))


# -- refinement and comparison -------------------------------------------------

def test_refine_sqrt2():
    x = refine(AlgebraicNumber(UniPoly((-2, 0, 1)), 1, 2), Fraction(1, 100))
    assert x.hi - x.lo < Fraction(1, 100)
    assert Fraction(141, 100) <= x.lo and x.hi <= Fraction(142, 100)


@pytest.mark.parametrize("coeffs,lo,hi,value", [
    ((-1, -1, -1, 1), 1, 2, 1.8393),
    ((-1, -3, -2, 1), 3, 4, 3.0796),
])
def test_refine_cubics(coeffs, lo, hi, value):
    x = AlgebraicNumber(UniPoly(coeffs), lo, hi).refine(Fraction(1, 10 ** 4))
    assert x.hi - x.lo < Fraction(1, 10 ** 4)
    assert x.lo - Fraction(1, 10 ** 4) <= Fraction(str(value)) <= x.hi + Fraction(1, 10 ** 4)


@given(st.fractions(min_value=-3, max_value=3, max_denominator=1000))
def test_refine_preserves_order(q):
    x = sqrt(2)
    assert alg_compare(x, q) == alg_compare(x.refine(Fraction(1, 10 ** 12)), q)


def test_comparisons():
    assert alg_compare(sqrt(2), Fraction(3, 2)) == -1
    assert alg_compare(tribonacci_alpha(), 2) == -1
    assert alg_compare(sqrt(4), 2) == 0
    m = (398 - 68 * sqrt(34)) / 27
    assert alg_compare(m, 0) == 1


# -- arithmetic ------------------------------------------------------------------

def test_sqrt2_squared_is_two():
    r = sqrt(2) * sqrt(2)
    assert r.is_rational and r.as_rational() == 2


def test_alpha_squared():
    a = tribonacci_alpha()
    assert (a ** 2).approx == pytest.approx(3.3830, abs=1e-4)


def test_inverse_cube_root_of_region_minimum():
    m = AlgebraicNumber.from_interval(UniPoly((23, -100742, 81675)), 0, Fraction(1, 100))
    assert m.inv().root(3).approx == pytest.approx(16.3606583169, abs=1e-9)


def test_inverse_of_zero():
    with pytest.raises(DomainError):
        alg_arith(AlgebraicNumber.from_rational(0), None, "inv")


nums = st.sampled_from([2, 3, 5, 7, 10]).map(sqrt) | st.fractions(-5, 5, max_denominator=20).map(
    AlgebraicNumber.from_rational)


@settings(max_examples=40, deadline=None)
@given(nums, nums)
def test_arith_against_mpmath(x, y):
    fx, fy = mpmath.mpf(x.approx), mpmath.mpf(y.approx)
    s = alg_arith(x, y, "add")
    p = alg_arith(x, y, "mul")
    assert s.approx == pytest.approx(float(fx + fy), abs=1e-12)
    assert p.approx == pytest.approx(float(fx * fy), abs=1e-12)
    assert s.lo <= s.hi
    # defining polynomial changes sign across the isolating interval
    if not s.is_rational:
        assert s.defining.sign_at(s.lo) * s.defining.sign_at(s.hi) < 0
    assert alg_arith(x, None, "neg").approx == -x.approx
    if x.sign() != 0:
        assert (x * alg_arith(x, None, "inv")) == 1


def test_exact_identity_for_tribonacci_minimum():
    m = (398 - 68 * sqrt(34)) / 27
    assert (27 * m + 68 * sqrt(34) - 398) == 0


def test_to_decimal():
    assert sqrt(2).to_decimal(10) == "1.414213562"
    assert AlgebraicNumber.from_rational(Fraction(1, 8)).to_decimal(3) == "0.125"
