"""t-binomial tests: recurrences, product formula, jets, closed Taylor forms."""

from fractions import Fraction

import pytest

from macdunkl import BetaPoly, DomainError, binom
from macdunkl.rings import jet_exp, HJet
from macdunkl.tbinom import (
    TPoly,
    scaled_t_binomial_jet,
    scaled_taylor_coeff_closed,
    t_binomial,
    t_binomial_jet,
    t_binomial_product,
    taylor_coeff_closed,
)


def test_tbinom_2_1():
    assert t_binomial(2, 1) == TPoly((1, 1))


def test_tbinom_4_2():
    assert t_binomial(4, 2) == TPoly((1, 1, 2, 1, 1))


def test_tbinom_out_of_range():
    with pytest.raises(DomainError):
        t_binomial(3, 4)
    with pytest.raises(DomainError):
        t_binomial(3, -1)


def test_recurrence_with_power_on_second_term():
    assert t_binomial(4, 2) == t_binomial(3, 1) + TPoly.t_power(2) * t_binomial(3, 2)


def test_both_recurrences_hold():
    for n in range(1, 13):
        for r in range(0, n + 1):
            lhs = t_binomial(n, r)
            first = (t_binomial(n - 1, r - 1) if r >= 1 else TPoly()) + (
                TPoly.t_power(r) * t_binomial(n - 1, r) if r <= n - 1 else TPoly()
            )
            second = (
                TPoly.t_power(n - r) * t_binomial(n - 1, r - 1) if r >= 1 else TPoly()
            ) + (t_binomial(n - 1, r) if r <= n - 1 else TPoly())
            assert lhs == first
            assert lhs == second


def test_product_formula_agrees_with_recurrence():
    for n in range(0, 13):
        for r in range(0, n + 1):
            assert t_binomial(n, r) == t_binomial_product(n, r)


def test_symmetry():
    for n in range(0, 13):
        for r in range(0, n + 1):
            assert t_binomial(n, r) == t_binomial(n, n - r)


def test_structure_invariants():
    for n in range(0, 11):
        for r in range(0, n + 1):
            p = t_binomial(n, r)
            assert p.degree() == r * (n - r)
            assert p.coeff_sum() == binom(n, r)
            assert all(isinstance(c, int) and c > 0 for c in p.coeffs)


def test_jet_2_1_is_one_plus_exp():
    jet = t_binomial_jet(2, 1, 4)
    assert jet.coeff(0) == BetaPoly.const(2)
    assert jet.coeff(1) == BetaPoly.var()
    assert jet.coeff(2) == BetaPoly.term(Fraction(1, 2), 2)


def test_jet_constant_terms():
    assert t_binomial_jet(5, 2, 4).coeff(0) == BetaPoly.const(10)


def test_jet_h1_3_1():
    assert t_binomial_jet(3, 1, 4).coeff(1) == BetaPoly.term(3, 1)


def test_closed_forms_match_jets():
    for n in range(0, 11):
        for r in range(0, n + 1):
            jet = t_binomial_jet(n, r, 4)
            for k in range(5):
                assert taylor_coeff_closed(n, r, k) == jet.coeff(k), (n, r, k)


def test_scaled_closed_forms_match_jets_k_le_3():
    for n in range(0, 11):
        for r in range(0, n + 1):
            jet = scaled_t_binomial_jet(n, r, 4, half=True)
            for k in range(4):
                assert scaled_taylor_coeff_closed(n, r, k) == jet.coeff(k), (n, r, k)


def test_scaled_h4_uses_half_exponent():
    """The h^4 closed form of the scaled t-binomial matches the
    t^(r(r-1)/2) scaling, not t^(r(r-1)), wherever the two differ."""
    mismatch_full = 0
    for n in range(0, 11):
        for r in range(0, n + 1):
            closed = scaled_taylor_coeff_closed(n, r, 4)
            assert closed == scaled_t_binomial_jet(n, r, 4, half=True).coeff(4), (n, r)
            if closed != scaled_t_binomial_jet(n, r, 4, half=False).coeff(4):
                mismatch_full += 1
    assert mismatch_full > 0


def test_closed_examples():
    assert taylor_coeff_closed(3, 1, 1) == BetaPoly.term(3, 1)
    assert taylor_coeff_closed(2, 1, 2) == BetaPoly.term(Fraction(1, 2), 2)
    assert taylor_coeff_closed(2, 1, 4) == BetaPoly.term(Fraction(1, 24), 4)
    assert scaled_taylor_coeff_closed(2, 1, 1) == BetaPoly.term(1, 1)
    assert scaled_taylor_coeff_closed(2, 2, 3) == BetaPoly.term(Fraction(1, 6), 3)
    for n in range(1, 8):
        assert scaled_taylor_coeff_closed(n, 1, 4) == taylor_coeff_closed(n, 1, 4)


def test_scaled_jet_against_direct_product():
    jet = scaled_t_binomial_jet(2, 2, 4, half=True)
    assert jet == jet_exp(HJet.single(1, BetaPoly.var(), 4))
