"""Tests for the pair-correlation engine and its approximations.

Synthetic zero tables (short, seeded-random) make brute-force O(N^2)
oracles affordable; real-data trend checks live with the acceptance
tests, which have the full generated table in scope.
"""

import math
import os

import numpy as np
import pytest

from zetavar import paircorr as pc
from zetavar.errors import CoverageError
from zetavar.zeros import make_table


@pytest.fixture(scope="module")
def random_table():
    rng = np.random.default_rng(3)
    g = np.sort(rng.uniform(5.0, 400.0, 300))
    g += np.arange(300) * 1e-6  # break exact ties
    return make_table(g)


def brute_value(g, alpha, delta, T):
    sub = g[g <= T]
    u = sub[:, None] - sub[None, :] - delta
    s = np.sum(np.exp(1j * alpha * math.log(T) * u) * 4.0 / (4.0 + u * u))
    return s * 2.0 * math.pi / (T * math.log(T))


class TestWeight:
    def test_values(self):
        assert pc.weight_w(0.0) == 1.0
        assert pc.weight_w(2.0) == 0.5

    def test_even(self):
        u = np.linspace(-9, 9, 37)
        assert np.array_equal(pc.weight_w(u), pc.weight_w(-u))


class TestFDelta:
    def test_single_zero_diagonal(self):
        t1 = make_table([14.13])
        T = 14.13
        est = pc.f_delta(t1, 0.7, 0.0, T, window=50.0)
        assert est.value == pytest.approx(2 * math.pi / (T * math.log(T)))
        assert est.pairs_used == 1
        assert est.truncation_bound >= 0.0

    def test_windowed_matches_brute_force(self, random_table):
        g = random_table.ordinates
        T = 380.0
        for alpha, delta in ((0.4, 0.0), (0.9, 1.3), (2.0, -0.8)):
            est = pc.f_delta(random_table, alpha, delta, T, window=120.0)
            brute = brute_value(g, alpha, delta, T)
            assert abs(est.value - brute) <= est.truncation_bound

    def test_symmetry_relations(self, random_table):
        T = 380.0
        e_pos = pc.f_delta(random_table, 0.8, 1.0, T, window=120.0)
        e_neg_a = pc.f_delta(random_table, -0.8, 1.0, T, window=120.0)
        e_neg_d = pc.f_delta(random_table, 0.8, -1.0, T, window=120.0)
        tol = 2.0 * e_pos.truncation_bound + 1e-12
        assert abs(np.conj(e_pos.value) - e_neg_a.value) <= tol
        assert abs(e_neg_a.value - e_neg_d.value) <= tol

    def test_plain_f_is_real(self, random_table):
        est = pc.f_delta(random_table, 0.6, 0.0, 380.0, window=120.0)
        assert abs(est.value.imag) <= est.truncation_bound + 1e-9

    def test_deterministic_across_thread_counts(self, random_table):
        vals = []
        try:
            for n in ("1", "4", "8"):
                os.environ["ZETAVAR_THREADS"] = n
                vals.append(
                    pc.f_delta(random_table, 0.8, 1.0, 380.0, window=120.0).value
                )
        finally:
            os.environ.pop("ZETAVAR_THREADS", None)
        assert vals[0] == vals[1] == vals[2]

    def test_domain_errors(self, random_table):
        with pytest.raises(CoverageError):
            pc.f_delta(random_table, 0.5, 0.0, 1e4)
        with pytest.raises(ValueError):
            pc.f_delta(random_table, 0.5, 0.0, 380.0, window=1.5)


class TestFSigma0:
    def test_reduces_to_plain_f_at_one(self, random_table):
        a = pc.f_delta(random_table, 0.5, 0.0, 380.0, window=120.0).value
        b = pc.f_sigma0(random_table, 0.5, 380.0, 1.0, window=120.0).value
        assert a == b

    def test_nonnegative_and_even(self, random_table):
        for sigma0 in (0.6, 1.0, 1.4):
            e_pos = pc.f_sigma0(random_table, 0.7, 380.0, sigma0, window=120.0)
            e_neg = pc.f_sigma0(random_table, -0.7, 380.0, sigma0, window=120.0)
            assert e_pos.value.real >= -e_pos.truncation_bound
            assert abs(e_pos.value - e_neg.value) <= 2 * e_pos.truncation_bound

    def test_domain(self, random_table):
        for bad in (0.5, 1.5, 2.0):
            with pytest.raises(ValueError):
                pc.f_sigma0(random_table, 0.5, 380.0, bad)


class TestClosedForms:
    def test_gm_endpoints(self):
        T = 100.0
        assert pc.gm_asymptotic(0.0, T) == pytest.approx(math.log(T))
        assert pc.gm_asymptotic(1.0, T) == pytest.approx(
            T**-2 * math.log(T) + 1.0
        )
        assert pc.gm_asymptotic(0.5, math.e) == pytest.approx(
            math.e**-1 + 0.5
        )

    def test_gm_domain(self):
        with pytest.raises(ValueError):
            pc.gm_asymptotic(1.2, 100.0)
        with pytest.raises(ValueError):
            pc.gm_asymptotic(0.5, 1.0)

    def test_chan_reduces_to_gm_at_zero_shift(self):
        for alpha in (0.0, 0.3, 1.0):
            assert pc.chan_approx(alpha, 0.0, 1e4) == pytest.approx(
                pc.gm_asymptotic(alpha, 1e4)
            )

    def test_chan_modulus_bound(self):
        T = 1e4
        for delta in (-3.0, 0.5, 8.0):
            for alpha in (0.0, 0.4, 1.0):
                v = pc.chan_approx(alpha, delta, T)
                assert abs(v) <= T ** (-2 * alpha) * math.log(T) + alpha + 1e-12

    def test_chan_error_budget_shapes(self):
        b1, b2, b3 = pc.chan_error_budget(0.5, 1.0, 1e5)
        assert b1 == pytest.approx(1.0 / math.sqrt(math.log(1e5)))
        assert b2 == pytest.approx(1e5 ** -1.0)
        assert b3 > 0

    def test_conjectured_plateau(self):
        assert pc.chan_conjecture(1.5, 0.0, 1e5) == 1.0 + 0j
        for alpha in (1.0, 2.5, -3.0):
            v = pc.chan_conjecture(alpha, 1.0, 1e5)
            assert abs(v) == pytest.approx(pc.weight_w(1.0))
        a = pc.chan_conjecture(2.0, 1.0, 1e5)
        b = pc.chan_conjecture(-2.0, 1.0, 1e5)
        assert np.conj(a) == pytest.approx(b)
        with pytest.raises(ValueError):
            pc.chan_conjecture(0.5, 1.0, 1e5)


class TestTailIntegral:
    def test_zero_shift_vanishes_identically(self, random_table):
        val, err = pc.tail_integral(random_table, 0.0, 380.0, 6.0,
                                    n_grid=33, window=120.0)
        assert val == 0.0

    def test_matches_brute_force_grid(self, random_table):
        g = random_table.ordinates
        T, A, n = 380.0, 4.0, 17
        val, err = pc.tail_integral(random_table, 1.0, T, A,
                                    n_grid=n, window=120.0)
        alphas = np.linspace(1.0, A, n)
        y = np.array(
            [
                (
                    brute_value(g, a, 0.0, T).real
                    - brute_value(g, a, 1.0, T).real
                )
                / a**2
                for a in alphas
            ]
        )
        h = alphas[1] - alphas[0]
        brute = h / 3 * (y[0] + y[-1] + 4 * y[1::2].sum() + 2 * y[2:-1:2].sum())
        assert abs(val - brute) <= err

    def test_integrand_nonnegative_up_to_truncation(self, random_table):
        T = 380.0
        for alpha in (1.0, 2.0, 3.5):
            f0 = pc.f_delta(random_table, alpha, 0.0, T, window=120.0)
            fd = pc.f_delta(random_table, alpha, 1.0, T, window=120.0)
            assert f0.value.real - fd.value.real >= -(
                f0.truncation_bound + fd.truncation_bound
            )

    def test_grid_validation(self, random_table):
        with pytest.raises(ValueError):
            pc.tail_integral(random_table, 1.0, 380.0, 0.9, window=120.0)
        with pytest.raises(ValueError):
            pc.tail_integral(random_table, 1.0, 380.0, 4.0, n_grid=8,
                             window=120.0)

    def test_conjectural_tail(self):
        assert pc.tail_conjectural(0.0, 1e5, 6.0) == 0.0
        # plateau value integrates to something below int 2/a^2 = 2/A
        for delta in (0.5, 1.0, 3.0):
            v = pc.tail_conjectural(delta, 1e5, 6.0)
            assert 0.0 <= v <= 2.0 / 6.0 + 1e-12

    def test_f_tail_matches_brute_force_grid(self, random_table):
        g = random_table.ordinates
        T, A, n = 380.0, 4.0, 17
        val, err = pc.f_tail_estimate(random_table, T, A, n_grid=n,
                                      window=120.0)
        alphas = np.linspace(1.0, A, n)
        y = np.array(
            [brute_value(g, a, 0.0, T).real / a**2 for a in alphas]
        )
        h = alphas[1] - alphas[0]
        brute = h / 3 * (y[0] + y[-1] + 4 * y[1::2].sum() + 2 * y[2:-1:2].sum())
        assert abs(val - brute) <= err
        assert val > 0.0


class TestFujiiReduction:
    def test_zero_shift_gives_zero_pair(self, random_table):
        lhs, rhs = pc.fujii_reduction_check(random_table, 0.0, 380.0, 6.0,
                                            window=120.0, n_grid=33)
        assert lhs == 0.0
        assert rhs == 0.0

    def test_small_shift_gap_scales_linearly(self, random_table):
        # |lhs - rhs| = O(delta): fit the constant and check it stays sane
        T = 380.0
        gaps = []
        for delta in (0.05, 0.1, 0.2):
            lhs, rhs = pc.fujii_reduction_check(
                random_table, delta, T, 6.0, window=120.0, n_grid=33
            )
            gaps.append(abs(lhs - rhs) / delta)
        assert max(gaps) < 10.0

    def test_delta_cap(self, random_table):
        with pytest.raises(ValueError):
            pc.fujii_reduction_check(random_table, 11.0, 380.0, 6.0)
