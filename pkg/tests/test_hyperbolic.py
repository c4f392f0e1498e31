# encoding='utf-8'

import cmath

import numpy as np
import pytest
from numpy.testing import assert_allclose
from traitlets.config import Config

from hypercheb.functions import hyperbolic
from hypercheb.functions.hyperbolic import (
    HyperbolicEvaluator,
    eval_h,
    eval_point,
    h0,
    convolution_check,
    product_identity_check,
    grading_check,
    derivative_check,
    series_agreement,
    generator_matrix,
    exponential_form_check,
)
from hypercheb.utils.base import DomainError, RangeError

ALPHAS = [0.7, -1.3, 0.4 + 0.9j, complex(-1.1, -0.5), 2.0j]


class TestEvalH:
    @pytest.mark.parametrize('z', ALPHAS)
    def test_m2_is_cosh_sinh(self, z):
        assert abs(eval_h(2, 0, z) - cmath.cosh(z)) < 1e-13
        assert abs(eval_h(2, 1, z) - cmath.sinh(z)) < 1e-13

    @pytest.mark.parametrize('m', [2, 3, 4, 5])
    def test_origin(self, m):
        for k in range(m):
            assert eval_h(m, k, 0) == (1 if k == 0 else 0)

    @pytest.mark.parametrize('m', [2, 3, 4])
    def test_series_matches_euler(self, m):
        for z in ALPHAS + [0.02, 0.005 + 0.003j]:
            for k in range(m):
                assert series_agreement(m, k, z) < 1e-12

    def test_small_argument_uses_series(self):
        z = 1e-3
        assert eval_h(3, 2, z) == eval_h(3, 2, z, method='series')

    def test_range_error(self):
        with pytest.raises(RangeError):
            eval_h(2, 0, 800.0)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            eval_h(3, 3, 0.5)
        with pytest.raises(DomainError):
            eval_h(1, 0, 0.5)


class TestEvalPoint:
    @pytest.mark.parametrize('m', [2, 3, 4, 6])
    def test_sum_is_exp(self, m):
        for alpha in ALPHAS:
            point = eval_point(m, alpha)
            assert abs(sum(point.h) - cmath.exp(alpha)) < 1e-12 * max(1, abs(cmath.exp(alpha)))

    def test_matches_eval_h(self):
        point = eval_point(4, 0.3 - 0.8j)
        for k in range(4):
            assert abs(point[k] - eval_h(4, k, 0.3 - 0.8j)) < 1e-13
        assert point[5] == point[1]


class TestIdentities:
    @pytest.mark.parametrize('m', [2, 3, 4])
    def test_convolution(self, m):
        rng = np.random.default_rng(m)
        for _ in range(20):
            alpha, beta = rng.uniform(-2, 2, size=2) + 1j * rng.uniform(-2, 2, size=2)
            for k in range(m):
                assert convolution_check(m, alpha, beta, k) < 1e-10

    @pytest.mark.parametrize('m', [2, 3, 4])
    def test_product_identity(self, m):
        for alpha, beta in zip(ALPHAS, ALPHAS[::-1]):
            assert product_identity_check(m, alpha, beta) < 1e-10

    @pytest.mark.parametrize('m', [3, 4, 5])
    def test_grading(self, m):
        for k in range(m):
            assert grading_check(m, k, 0.8 + 0.3j) < 1e-12

    @pytest.mark.parametrize('m', [2, 3, 4])
    def test_derivative(self, m):
        for k in range(m):
            assert derivative_check(m, k, 0.6 - 0.2j) < 1e-5

    def test_m2_reduces_to_cosh_addition(self):
        a, b = 0.4, 1.1
        assert abs(h0(2, a + b) - (np.cosh(a) * np.cosh(b) + np.sinh(a) * np.sinh(b))) < 1e-13


class TestGenerator:
    def test_cyclic_shift(self):
        gamma = generator_matrix(3)
        assert_allclose(gamma, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])

    @pytest.mark.parametrize('m', [2, 3, 4, 5])
    def test_exponential_form(self, m):
        for alpha in ALPHAS:
            assert exponential_form_check(m, alpha) < 1e-10


class TestConfig:
    def test_configurable_radius(self):
        conf = Config()
        conf.HyperbolicEvaluator.series_radius = 0.5
        evaluator = HyperbolicEvaluator(config=conf)
        assert evaluator.series_radius == 0.5
        assert abs(evaluator.eval_h(3, 1, 0.3) - eval_h(3, 1, 0.3, method='euler')) < 1e-14

    def test_module_configure(self):
        conf = Config()
        conf.HyperbolicEvaluator.series_order = 40
        try:
            assert hyperbolic.configure(conf).series_order == 40
            assert hyperbolic.default_evaluator().series_order == 40
        finally:
            hyperbolic.configure(Config())
