"""Type-sum tests: raw vs literal, counts, the partial-fraction identity."""

from fractions import Fraction

import pytest

from macdunkl import MultiPoly, Ring, exact_div, monomial_symmetric
from macdunkl.multipoly import partitions_upto, vandermonde
from macdunkl.verify.typesums import (
    TYPE_SHAPE,
    type_sum_closed_apply,
    type_sum_raw_apply,
    type_sum_raw_literal,
    type_term_count,
)

RQ = Ring.q()


def test_type1_count_example():
    # r/6 (n-r)(n-r-1)(n-r-2) binom(n,r) at (4,1) gives 4
    assert type_term_count(4, 1, 1) == 4


def test_counts_match_product_formulas():
    from macdunkl import binom

    def formulas(n, r):
        return {
            1: Fraction(r, 6) * (n - r) * (n - r - 1) * (n - r - 2) * binom(n, r),
            2: Fraction(r * (r - 1) * (r - 2), 6) * (n - r) * binom(n, r),
            3: Fraction(r * (r - 1), 2) * (n - r) * (n - r - 1) * (n - r - 2) * binom(n, r),
            4: Fraction((n - r) * (n - r - 1), 2) * r * (r - 1) * (r - 2) * binom(n, r),
            5: Fraction(r * (r - 1) * (r - 2), 6)
            * (n - r)
            * (n - r - 1)
            * (n - r - 2)
            * binom(n, r),
            6: r * (r - 1) * (n - r) * (n - r - 1) * binom(n, r),
        }

    for n, r in ((6, 3), (7, 3), (7, 4), (8, 4)):
        want = formulas(n, r)
        for tid in range(1, 7):
            assert type_term_count(n, r, tid) == want[tid], (n, r, tid)


def test_partial_fraction_unit():
    # x1^2/((x1-x2)(x1-x3)) + x2^2/((x2-x1)(x2-x3)) + x3^2/((x3-x1)(x3-x2)) = 1
    n = 3
    v = vandermonde(n)
    acc = MultiPoly.zero(n, RQ)
    for i in (1, 2, 3):
        rest = [j for j in (1, 2, 3) if j != i]
        den = MultiPoly.const(n, 1, RQ)
        for j in rest:
            den = den * (MultiPoly.variable(i, n, RQ) - MultiPoly.variable(j, n, RQ))
        acc = acc + exact_div(v, den) * MultiPoly.variable(i, n, RQ) ** 2
    assert exact_div(acc, v) == MultiPoly.const(n, 1, RQ)


def test_empty_pattern_gives_zero():
    f = monomial_symmetric((1,), 4)
    # type 5 needs r >= 3 and n-r >= 3
    assert type_sum_raw_apply(4, 1, 5, f) == MultiPoly.zero(4, RQ)
    assert type_sum_raw_apply(4, 3, 2, f) == type_sum_raw_literal(4, 3, 2, f)


@pytest.mark.parametrize("tid", [1, 2, 3, 4, 5, 6])
def test_raw_matches_literal_small(tid):
    for n, r in ((4, 1), (4, 3), (5, 2), (5, 3)):
        for lam in ((1,), (2,), (1, 1)):
            f = monomial_symmetric(lam, n)
            fast = type_sum_raw_apply(n, r, tid, f)
            slow = type_sum_raw_literal(n, r, tid, f)
            assert fast == slow, (tid, n, r, lam)


@pytest.mark.parametrize("tid", [1, 2, 3, 4, 5, 6])
def test_raw_matches_literal_n6(tid):
    n, r = 6, 3
    for lam in ((2,), (1, 1)):
        f = monomial_symmetric(lam, n)
        assert type_sum_raw_apply(n, r, tid, f) == type_sum_raw_literal(n, r, tid, f)


@pytest.mark.parametrize("tid", [1, 2, 3, 4, 5, 6])
def test_raw_equals_closed_at_6_3_degree2(tid):
    n, r = 6, 3
    for lam in partitions_upto(2, n):
        f = monomial_symmetric(lam, n)
        raw = type_sum_raw_apply(n, r, tid, f)
        closed = type_sum_closed_apply(n, r, tid, f)
        assert raw == closed, (tid, lam)
