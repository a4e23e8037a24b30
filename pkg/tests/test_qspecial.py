"""Tests for the q-deformed special functions.

Expected values marked "exact" come from Fraction arithmetic on the defining
recurrences; long decimals were frozen from a 40-digit mpmath evaluation of
the same series/products.
"""

import math
from fractions import Fraction

import numpy as np
import pytest
from numpy.testing import assert_allclose

from qcoherent import (
    DEFAULT_CONTROL,
    Deformation,
    NonConvergenceError,
    SeriesControl,
    ZeroFactorWarning,
    jackson_e,
    jackson_e_tail_bound,
    log_jackson_e_pos,
    log_q_factorial,
    log_q_factorial_via_gamma,
    maths_q_number,
    q_factorial_ratio,
    q_number,
    q_number_array,
    sum_series,
)

E_HALF_QUARTER = 1.589487352687581149433  # E_{0.5}(0.25), 40-digit series


def qnum_exact(n, q):
    """[n]_q as an exact Fraction: sum of q^{-k}."""
    return sum(q**-k for k in range(1, n + 1)) if n else Fraction(0)


def qfact_exact(n, q):
    out = Fraction(1)
    for k in range(1, n + 1):
        out *= qnum_exact(k, q)
    return out


class TestDeformation:
    def test_classical_flag(self):
        assert Deformation(1.0).classical
        assert not Deformation(0.5).classical

    @pytest.mark.parametrize("bad", [0.0, -0.3, 1.2, math.nan, math.inf])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(ValueError):
            Deformation(bad)


class TestSeriesControl:
    def test_defaults(self):
        assert DEFAULT_CONTROL.rel_tol == 1e-14
        assert DEFAULT_CONTROL.max_terms == 10_000

    @pytest.mark.parametrize("kwargs", [{"rel_tol": 0.0}, {"rel_tol": -1e-3}, {"max_terms": 0}])
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            SeriesControl(**kwargs)

    def test_max_terms_enforced(self):
        with pytest.raises(NonConvergenceError):
            sum_series(iter(lambda: 1.0, None), SeriesControl(max_terms=50))


class TestQNumber:
    def test_zero(self):
        assert q_number(0, Deformation(0.5)) == 0.0

    def test_exact_values(self):
        assert q_number(1, Deformation(0.8)) == pytest.approx(1.25, rel=1e-15)
        assert q_number(2, Deformation(0.5)) == pytest.approx(6.0, rel=1e-15)
        assert q_number(3, Deformation(0.8)) == pytest.approx(4.765625, rel=1e-14)

    def test_classical_is_n(self):
        d = Deformation(1.0)
        assert [q_number(n, d) for n in range(6)] == [0.0, 1.0, 2.0, 3.0, 4.0, 5.0]

    def test_maths_companion(self):
        d = Deformation(0.5)
        assert maths_q_number(2, d) == pytest.approx(1.5, rel=1e-15)
        # [n]_q = q^{-n} {n}_q
        for n in range(1, 10):
            assert q_number(n, d) == pytest.approx(0.5 ** (-n) * maths_q_number(n, d), rel=1e-14)

    @pytest.mark.parametrize("q", [0.5, 0.7, 0.9])
    def test_exceeds_n_for_deformed(self, q):
        d = Deformation(q)
        for n in range(1, 51):
            assert q_number(n, d) > n

    def test_classical_limit_near_one(self):
        d = Deformation(1.0 - 1e-6)
        for n in range(1, 51):
            assert abs(q_number(n, d) - n) < 1e-4 * n

    def test_array_matches_scalar(self):
        d = Deformation(0.7)
        arr = q_number_array(20, d)
        assert_allclose(arr, [q_number(n, d) for n in range(21)], rtol=1e-13)


class TestLogQFactorial:
    def test_empty_product(self):
        assert log_q_factorial(0, Deformation(0.6)) == 0.0

    def test_small_exact(self):
        assert log_q_factorial(2, Deformation(0.8)) == pytest.approx(math.log(3.515625), rel=1e-14)
        assert log_q_factorial(5, Deformation(0.5)) == pytest.approx(math.log(312480), rel=1e-14)

    def test_matches_fraction_oracle(self):
        for qf, q in [(Fraction(1, 2), 0.5), (Fraction(4, 5), 0.8)]:
            d = Deformation(q)
            for n in range(0, 25):
                expected = math.log(qfact_exact(n, qf)) if n else 0.0
                assert log_q_factorial(n, d) == pytest.approx(expected, rel=1e-12, abs=1e-12)

    def test_increments_strictly_increasing(self):
        d = Deformation(0.7)
        values = [log_q_factorial(n, d) for n in range(40)]
        increments = np.diff(values)
        assert np.all(np.diff(increments) > 0)

    @pytest.mark.parametrize("q", [0.5, 0.7, 0.9])
    def test_two_accumulation_routes_agree(self, q):
        # direct ln[k] accumulation vs the q-gamma split, n <= 200
        d = Deformation(q)
        for n in (1, 2, 5, 20, 50, 100, 200):
            a = log_q_factorial(n, d)
            b = log_q_factorial_via_gamma(n, d)
            assert abs(a - b) <= 1e-12 * abs(b)

    def test_classical_is_lgamma(self):
        d = Deformation(1.0)
        assert log_q_factorial(10, d) == pytest.approx(math.lgamma(11), rel=1e-15)


class TestFactorialRatio:
    def test_base_cases(self):
        assert q_factorial_ratio(0, Deformation(0.8)) == 1.0
        assert q_factorial_ratio(5, Deformation(1.0)) == 1.0

    def test_exact_values(self):
        assert q_factorial_ratio(1, Deformation(0.8)) == pytest.approx(1.25, rel=1e-13)
        assert q_factorial_ratio(2, Deformation(0.8)) == pytest.approx(1.7578125, rel=1e-13)
        assert q_factorial_ratio(3, Deformation(0.8)) == pytest.approx(2.7923583984375, rel=1e-13)

    def test_monotone_in_n_and_q(self):
        # grows with n, grows as q decreases (stronger deformation)
        for q in (0.94, 0.96, 0.98):
            d = Deformation(q)
            vals = [q_factorial_ratio(n, d) for n in range(31)]
            assert all(b > a for a, b in zip(vals, vals[1:]))
            assert all(v >= 1.0 for v in vals)
        d_strong, d_weak = Deformation(0.94), Deformation(0.98)
        for n in range(1, 31):
            assert q_factorial_ratio(n, d_strong) > q_factorial_ratio(n, d_weak)


def jackson_series_oracle(w, q, terms=200):
    """Independent evaluation: E_q(w) = sum_n q^{n(n-1)/2} w^n / ({n}_q! (1-q)^n)."""
    total, term = 0.0, 1.0
    for n in range(terms):
        total += term
        maths_np1 = (1.0 - q ** (n + 1)) / (1.0 - q)
        term = term * q**n * w / (maths_np1 * (1.0 - q))
    return total


class TestJacksonE:
    def test_at_zero(self):
        assert jackson_e(0.0, Deformation(0.5)) == 1.0 + 0.0j

    def test_frozen_value(self):
        val = jackson_e(0.25, Deformation(0.5))
        assert val.imag == 0.0
        assert val.real == pytest.approx(E_HALF_QUARTER, rel=1e-10)

    @pytest.mark.parametrize("q", [0.5, 0.7, 0.9])
    def test_product_matches_series(self, q):
        d = Deformation(q)
        for w in np.linspace(0.0, 10.0, 11):
            prod = jackson_e(w, d).real
            series = jackson_series_oracle(float(w), q)
            assert prod == pytest.approx(series, rel=1e-10)

    def test_monotone_for_positive_argument(self):
        d = Deformation(0.9)
        vals = [jackson_e(w, d).real for w in np.linspace(0.1, 5.0, 25)]
        assert all(b > a for a, b in zip(vals, vals[1:]))
        assert all(v > 1.0 for v in vals)

    def test_zero_factor_warns_and_returns_zero(self):
        # w = -1 kills the k = 0 factor exactly
        with pytest.warns(ZeroFactorWarning):
            assert jackson_e(-1.0, Deformation(0.5)) == 0.0

    def test_complex_argument(self):
        d = Deformation(0.6)
        val = jackson_e(0.3 + 0.2j, d)
        series = sum_series(
            _complex_series_terms(0.3 + 0.2j, 0.6), SeriesControl(rel_tol=1e-15), lookahead=2
        )
        assert abs(val - series) <= 1e-12 * abs(series)

    def test_nonconvergence_near_one(self):
        with pytest.raises(NonConvergenceError):
            jackson_e(10.0, Deformation(0.9999))

    def test_tail_bound_positive_and_small(self):
        d = Deformation(0.7)
        bound = jackson_e_tail_bound(2.0, d)
        assert 0.0 <= bound < 1e-13

    def test_classical_rejected(self):
        with pytest.raises(ValueError):
            jackson_e(1.0, Deformation(1.0))

    def test_log_form_matches_product(self):
        d = Deformation(0.8)
        xs = np.linspace(0.0, 20.0, 9)
        logs = log_jackson_e_pos(xs, d)
        for x, lg in zip(xs, logs):
            assert math.exp(lg) == pytest.approx(jackson_e(float(x), d).real, rel=1e-13)


def _complex_series_terms(w, q):
    term = complex(1.0)
    n = 0
    while True:
        yield term
        maths_np1 = (1.0 - q ** (n + 1)) / (1.0 - q)
        term = term * q**n * w / (maths_np1 * (1.0 - q))
        n += 1


class TestSumSeries:
    def test_geometric(self):
        total = sum_series((0.5**n for n in range(10**6)), SeriesControl())
        assert total == pytest.approx(2.0, rel=1e-13)

    def test_cap_raises(self):
        with pytest.raises(NonConvergenceError):
            sum_series((1.0 / (n + 1) for n in range(10**7)), SeriesControl(max_terms=100))
