import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from zetacot.exact import PiPower
from zetacot.oracle import (
    FAULT_ENV,
    BernoulliTable,
    bernoulli,
    recurrence_residual,
    zeta_dirichlet,
    zeta_even_bernoulli,
)


@pytest.mark.parametrize(
    "n, expected",
    [(0, Fraction(1)), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (4, Fraction(-1, 30)), (12, Fraction(-691, 2730))],
)
def test_bernoulli_values(n, expected):
    assert bernoulli(n) == expected


def test_recurrence_residual_vanishes():
    for m in range(1, 101):
        assert recurrence_residual(m) == 0


def test_odd_bernoulli_vanish():
    for k in range(1, 51):
        assert bernoulli(2 * k + 1) == 0


def test_fresh_table_matches_global():
    t = BernoulliTable()
    assert [t[n] for n in range(40)] == [bernoulli(n) for n in range(40)]
    assert recurrence_residual(30, t) == 0


def test_fault_hook_flips_one_sign(monkeypatch):
    monkeypatch.setenv(FAULT_ENV, "2")
    assert bernoulli(2) == Fraction(-1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert recurrence_residual(2) != 0


@pytest.mark.parametrize(
    "s, coeff", [(1, Fraction(1, 6)), (2, Fraction(1, 90)), (3, Fraction(1, 945)), (4, Fraction(1, 9450))]
)
def test_zeta_even_bernoulli(s, coeff):
    assert zeta_even_bernoulli(s) == PiPower(coeff, 2 * s)


def test_zeta_even_bernoulli_rejects_zero():
    with pytest.raises(ValueError):
        zeta_even_bernoulli(0)


@pytest.mark.parametrize("s", [0, 1, -3])
def test_dirichlet_rejects_small_s(s):
    with pytest.raises(ValueError):
        zeta_dirichlet(s, 128)


def test_dirichlet_zeta2_is_pi_squared_over_six():
    z = zeta_dirichlet(2, 128)
    with mpmath.workprec(400):
        assert z.contains(mpmath.pi**2 / 6)
    assert z.error_bound < mpmath.ldexp(1, -120)
    assert z.to_string(17).startswith("1.644934066848226")


@pytest.mark.parametrize("s, prefix", [(3, "1.2020569031595942"), (5, "1.0369277551433699")])
def test_dirichlet_odd_values_self_consistent(s, prefix):
    lo = zeta_dirichlet(s, 128)
    hi = zeta_dirichlet(s, 256)
    assert lo.agrees_with(hi)
    assert lo.contains(hi.value)
    assert lo.to_string(20).startswith(prefix)


def test_dirichlet_against_partial_sum_bracket():
    # Independent bracket: S_K + int_K^inf x^-3 dx <= zeta(3) <= S_K + K^-3 + int_K^inf
    K = 2000
    head = sum(Fraction(1, n**3) for n in range(1, K))
    lower = head + Fraction(1, 2 * K * K)
    upper = lower + Fraction(1, K**3)
    z = zeta_dirichlet(3, 64)
    with mpmath.workprec(200):
        assert mpmath.mpf(lower.numerator) / lower.denominator <= z.value
        assert z.value <= mpmath.mpf(upper.numerator) / upper.denominator


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 40), st.integers(24, 200))
def test_dirichlet_precision_monotone(s, p):
    assert zeta_dirichlet(s, 2 * p).error_bound <= zeta_dirichlet(s, p).error_bound


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 40), st.integers(16, 256))
def test_dirichlet_bound_meets_contract(s, p):
    z = zeta_dirichlet(s, p)
    assert z.error_bound < mpmath.ldexp(1, -(p - 8))
    with mpmath.workprec(p + 64):
        assert z.contains(mpmath.zeta(s))
