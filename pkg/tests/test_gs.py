from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gstower.arith import Method
from gstower.errors import DomainError
from gstower.gs import (
    DepthTerm,
    GSPolynomial,
    find_witness,
    gs_eval,
    gs_eval_bounded,
    min_cut_level,
)

P12 = GSPolynomial(12, (DepthTerm.plain(2, 31),))
P289 = GSPolynomial(289, (DepthTerm.plain(2, 9553),))


def test_eval_worked_example():
    assert gs_eval(P12, Fraction(6, 31)) == Fraction(-5, 31)
    assert gs_eval(P12, Fraction(6, 31)) == 1 - Fraction(12**2, 4 * 31)


def test_eval_at_zero_and_one():
    assert gs_eval(P12, 0) == 1
    assert gs_eval(GSPolynomial(2, (DepthTerm.plain(2, 1),)), 1) == 0


def test_eval_refuses_huge_depth():
    poly = P12.with_term(DepthTerm.power(2, 40, 1))
    with pytest.raises(DomainError, match="gs_eval_bounded"):
        gs_eval(poly, Fraction(1, 2))


def test_depth_term_validation():
    with pytest.raises(DomainError):
        DepthTerm.plain(1, 3)
    with pytest.raises(DomainError):
        DepthTerm.power(4, 2, 1)
    with pytest.raises(DomainError):
        DepthTerm.power(2, -1, 1)
    with pytest.raises(DomainError):
        DepthTerm.plain(2, 0)
    assert DepthTerm.power(3, 0, 1).depth_value() == 1


def test_merged_combines_equal_depths():
    poly = GSPolynomial(5, (DepthTerm.plain(2, 3), DepthTerm.plain(3, 1), DepthTerm.plain(2, 4),
                            DepthTerm.power(2, 3, 1), DepthTerm.power(2, 3, 2)))
    m = poly.merged()
    assert m.terms == (DepthTerm.plain(2, 7), DepthTerm.plain(3, 1), DepthTerm.power(2, 3, 3))
    assert gs_eval(m, Fraction(1, 3)) == gs_eval(poly, Fraction(1, 3))


def test_bounded_with_tail_is_negative():
    poly = P12.with_term(DepthTerm.power(2, 2, 24))
    b = gs_eval_bounded(poly, Fraction(6, 31))
    assert b.upper < 0
    assert b.upper >= gs_eval(poly, Fraction(6, 31))


def test_bounded_without_tails_is_exact():
    b = gs_eval_bounded(P289, Fraction(1, 7))
    assert b.upper == gs_eval(P289, Fraction(1, 7)) and not b.trail


def test_bounded_huge_tail_positive_poly():
    poly = GSPolynomial(1, (DepthTerm.power(2, 20, 1),))
    b = gs_eval_bounded(poly, Fraction(1, 2))
    assert Fraction(1, 2) < b.upper <= Fraction(1, 2) + Fraction(1, 2**20)
    assert any(v.method is Method.DIRECTED_ROUNDING for v in b.trail)


def test_find_witness_worked_example():
    w = find_witness(P12)
    assert w.t0 == Fraction(6, 31) and w.value == Fraction(-5, 31) and not w.from_grid


def test_find_witness_289():
    w = find_witness(P289)
    assert w.t0 == Fraction(289, 19106) and w.value == Fraction(-45309, 38212)


def test_find_witness_none_on_square():
    # (1 - t)^2 >= 0
    assert find_witness(GSPolynomial(2, (DepthTerm.plain(2, 1),))) is None


def test_find_witness_grid_for_mixed_depths():
    # no depth-2 terms: the d/2r candidate does not exist; 1 - 3t + t^3 < 0 near 1/2
    poly = GSPolynomial(3, (DepthTerm.plain(3, 1),))
    w = find_witness(poly)
    assert w.from_grid and w.t0 == Fraction(1, 2) and w.value == Fraction(-3, 8)


def _brute_k(poly, t0, p, tail):
    """Least k >= 1 with tail * t0^(p^k) < -P(t0), by exact arithmetic."""
    slack = -gs_eval(poly, t0)
    k = 1
    while tail * t0 ** (p**k) >= slack:
        k += 1
    return k


@pytest.mark.parametrize("poly,t0,p,tail,expected", [
    (P12, Fraction(6, 31), 2, 24, 2),
    (P12, Fraction(6, 31), 2, 1, 1),
    (P289, Fraction(289, 19106), 2, 578, None),
])
def test_min_cut_level(poly, t0, p, tail, expected):
    k, w = min_cut_level(poly, t0, p, tail)
    if expected is None:
        expected = _brute_k(poly, t0, p, tail)
    assert k == expected == _brute_k(poly, t0, p, tail)
    assert w.value < 0 and all(v.less for _, v, _ in w.tail_bounds)
    if k > 1:
        worse = gs_eval_bounded(poly.with_term(DepthTerm.power(p, k - 1, tail)), t0)
        assert worse.upper >= 0


def test_min_cut_level_needs_negative_start():
    with pytest.raises(DomainError):
        min_cut_level(P12, Fraction(1, 100), 2, 24)


polys = st.builds(
    lambda d, terms: GSPolynomial(d, tuple(DepthTerm.plain(w, c) for w, c in terms)),
    st.integers(1, 60),
    st.lists(st.tuples(st.integers(2, 8), st.integers(1, 500)), max_size=4),
)
ts = st.fractions(min_value=Fraction(1, 1000), max_value=Fraction(999, 1000), max_denominator=1000)


@settings(max_examples=200, deadline=None)
@given(polys)
def test_eval_at_zero_is_one(poly):
    assert gs_eval(poly, 0) == 1


@settings(max_examples=100, deadline=None)
@given(polys, ts)
def test_eval_matches_repeated_multiplication(poly, t):
    val = 1 - poly.d * t
    for term in poly.terms:
        x = Fraction(1)
        for _ in range(term.depth):
            x *= t
        val += term.count * x
    assert gs_eval(poly, t) == val


@settings(max_examples=100, deadline=None)
@given(polys, ts, st.integers(2, 3), st.integers(0, 5), st.integers(1, 50))
def test_bounded_dominates_exact(poly, t, p, k, count):
    poly = poly.with_term(DepthTerm.power(p, k, count))
    assert gs_eval_bounded(poly, t).upper >= gs_eval(poly, t)


@settings(max_examples=20, deadline=None)
@given(polys, ts, st.integers(1, 50))
def test_bound_non_increasing_in_k(poly, t, count):
    # k = 17, 18 cross the exact/directed switch at 2^16
    prev = None
    for k in range(1, 19):
        u = gs_eval_bounded(poly.with_term(DepthTerm.power(2, k, count)), t).upper
        if prev is not None:
            assert u <= prev
        prev = u


@settings(max_examples=100, deadline=None)
@given(polys)
def test_witness_soundness(poly):
    w = find_witness(poly, grid_level=6)
    if w is not None:
        assert 0 < w.t0 < 1
        assert w.value < 0 and gs_eval(poly, w.t0) <= w.value
