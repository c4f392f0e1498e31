# encoding='utf-8'

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from hypercheb.algebra.spectral import (
    RootOfUnityTable,
    TruncatedSeries,
    root_table,
    apply_omega,
    project_delta,
    project_delta_omega_sum,
    hyperbolic_series,
    exp_series,
    geometric_series,
    m_geometric_series,
    evaluate,
    check_order,
)
from hypercheb.utils.base import DomainError, DimensionError


def random_series(rng, order=32):
    return TruncatedSeries(rng.normal(size=order + 1) + 1j * rng.normal(size=order + 1))


class TestRootOfUnityTable:
    @pytest.mark.parametrize('m', [2, 3, 4, 5, 7])
    def test_unit_modulus_and_products(self, m):
        w = RootOfUnityTable(m)
        assert_allclose(np.abs(w.powers), 1.0, atol=1e-14)
        for s in range(m):
            for t in range(m):
                assert abs(w.powers[s] * w.powers[t] - w.power(s + t)) < 1e-13

    @pytest.mark.parametrize('m', [2, 3, 4, 6])
    def test_character_sums(self, m):
        w = root_table(m)
        for k in range(-m, 2 * m):
            expected = m if k % m == 0 else 0
            assert abs(w.character_sum(k) - expected) < 1e-12

    def test_powers_read_only(self):
        with pytest.raises(ValueError):
            root_table(3).powers[0] = 2

    def test_bad_order(self):
        with pytest.raises(DomainError):
            check_order(1)
        with pytest.raises(DomainError):
            RootOfUnityTable(0)


class TestTruncatedSeries:
    def test_product_truncates(self):
        one_plus_z = TruncatedSeries([1, 1])
        assert_allclose((one_plus_z * one_plus_z).coeffs, [1, 2])

    def test_order_mismatch(self):
        with pytest.raises(DimensionError):
            TruncatedSeries([1, 2]) + TruncatedSeries([1, 2, 3])

    def test_evaluate_horner(self):
        f = exp_series(24)
        assert abs(evaluate(f, 0.3) - math.exp(0.3)) < 1e-14
        assert abs(evaluate(f, 0.2 + 0.1j) - f.evaluate(0.2 + 0.1j)) < 1e-14


class TestApplyOmega:
    def test_exp_m2_gives_exp_minus(self):
        g = apply_omega(exp_series(6), root_table(2), 1)
        assert_allclose(g.coeffs, [(-1) ** j / math.factorial(j) for j in range(7)], atol=1e-15)

    def test_s0_identity(self):
        f = random_series(np.random.default_rng(1), 10)
        assert apply_omega(f, root_table(4), 0).allclose(f)

    def test_geometric_m3(self):
        w = root_table(3)
        g = apply_omega(geometric_series(8), w, 1)
        assert_allclose(g.coeffs, [w.power(j) for j in range(9)], atol=1e-14)

    def test_bad_s(self):
        with pytest.raises(DomainError):
            apply_omega(exp_series(4), root_table(3), 3)


class TestProjectDelta:
    def test_exp_m3_k1(self):
        f = project_delta(exp_series(10), root_table(3), 1)
        expected = [1.0 / math.factorial(j) if j % 3 == 1 else 0.0 for j in range(11)]
        assert_allclose(f.coeffs, expected)

    def test_zero_series(self):
        zero = TruncatedSeries(np.zeros(9))
        assert project_delta(zero, root_table(3), 2).max_abs() == 0

    def test_geometric_m3_k2(self):
        f = project_delta(geometric_series(10), root_table(3), 2)
        assert_allclose(f.coeffs, [1.0 if j % 3 == 2 else 0.0 for j in range(11)])
        assert f.allclose(m_geometric_series(3, 2, 10))

    @pytest.mark.parametrize('m', [2, 3, 4, 5])
    def test_orthogonality_completeness_eigen(self, m):
        rng = np.random.default_rng(m)
        w = root_table(m)
        f = random_series(rng)
        zero = TruncatedSeries(np.zeros(f.coeffs.size))
        total = zero
        for k in range(m):
            fk = project_delta(f, w, k)
            total = total + fk
            for j in range(m):
                assert project_delta(fk, w, j).allclose(fk if j == k else zero)
            assert apply_omega(fk, w, 1).allclose(fk.scale(w.power(k)))
        assert total.allclose(f)

    @pytest.mark.parametrize('m', [2, 3, 5])
    def test_omega_sum_path(self, m):
        f = random_series(np.random.default_rng(10 + m))
        w = root_table(m)
        for k in range(m):
            assert project_delta_omega_sum(f, w, k).allclose(project_delta(f, w, k))


class TestHyperbolicSeries:
    def test_cosh_prefix(self):
        assert_allclose(hyperbolic_series(2, 0, 4).coeffs, [1, 0, 0.5, 0, 1.0 / 24])

    def test_m3_k0(self):
        assert_allclose(hyperbolic_series(3, 0, 6).coeffs, [1, 0, 0, 1.0 / 6, 0, 0, 1.0 / 720])

    @pytest.mark.parametrize('m', [2, 3, 4, 5])
    def test_partition_of_exp(self, m):
        total = hyperbolic_series(m, 0)
        for k in range(1, m):
            total = total + hyperbolic_series(m, k)
        assert total.allclose(exp_series())

    def test_errors(self):
        with pytest.raises(DomainError):
            hyperbolic_series(3, 3, 4)
        with pytest.raises(DomainError):
            hyperbolic_series(3, 0, -1)
