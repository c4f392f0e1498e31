# encoding='utf-8'

import math

import pytest
from numpy.testing import assert_allclose

from hypercheb.sequences.chebyshev import (
    KIND_GRADE,
    StreamIndex,
    classical_T,
    classical_U,
    classical_identities_check,
    m2_group_element,
    stream_eval,
    characteristic_coefficients,
    constrained_variables,
    recurrence_eval,
    binet_eval,
    three_way_check,
    root_magnitude,
    general_k_check,
    identity_list_check,
    genfun,
    genfun_check,
    symbolic_main_stream,
    delta_selector,
    kind_selector,
    expand_poly,
    expand_poly_m2,
    eval_expansion_on_surface,
    find_kind_grade,
    m2_expansion_check,
)
from hypercheb.utils.base import DomainError, RangeError

ALPHAS = [0.9, -0.6, 0.4 + 0.7j, complex(-1.2, 0.5)]


class TestClassical:
    def test_first_values(self):
        assert classical_T(0, 2.0) == 1.0
        assert classical_T(1, 2.0) == 2.0
        assert classical_T(2, 2.0) == 7.0
        assert classical_U(0, 2.0) == 0.0
        assert classical_U(1, 2.0) == 1.0
        assert classical_U(2, 2.0) == 4.0

    @pytest.mark.parametrize('n', [0, 1, 3, 7])
    def test_hyperbolic_forms(self, n):
        t = 0.8
        x = math.cosh(t)
        assert abs(classical_T(n, x) - math.cosh(n * t)) < 1e-12 * math.cosh(n * t)
        assert abs(classical_U(n, x) - math.sinh(n * t) / math.sinh(t)) < 1e-11 * max(1, math.cosh(n * t))

    @pytest.mark.parametrize('n,m', [(3, 2), (0, 4), (5, 5), (1, 6)])
    def test_identities(self, n, m):
        h_res = classical_identities_check(n, m, 1.5)
        assert set(h_res) == {'composition', 'addition', 'subtraction', 'parity_a', 'parity_b', 'volume'}
        assert max(h_res.values()) < 1e-9

    def test_identities_with_large_terms(self):
        h_res = classical_identities_check(6, 6, 2.6676)
        assert h_res['subtraction'] < 1e-12
        assert h_res['volume'] < 1e-12
        assert h_res['parity_a'] == 0 and h_res['parity_b'] == 0

    def test_identities_need_real_branch(self):
        with pytest.raises(DomainError):
            classical_identities_check(2, 1, 0.5)

    def test_group_element(self):
        x = 1.3
        for n, k in [(2, 3), (-1, 4), (-3, -2), (0, 5)]:
            product = m2_group_element(x, n) @ m2_group_element(x, k)
            assert product.max_residual(m2_group_element(x, n + k)) < 1e-10
            assert abs(m2_group_element(x, n).determinant() - 1) < 1e-9
        with pytest.raises(DomainError):
            m2_group_element(0.9, 2)


class TestStreams:
    def test_index_value(self):
        assert abs(StreamIndex(3, 0, 2).value - 4) < 1e-15
        assert abs(StreamIndex(3, 1, 2).value - 2) < 1e-15
        with pytest.raises(DomainError):
            StreamIndex(-1, 0, 3)
        with pytest.raises(DomainError):
            StreamIndex(0, 3, 3)

    def test_identifications(self):
        alpha = 0.7 - 0.2j
        x, xstar, _ = constrained_variables(3, alpha)
        assert abs(stream_eval(3, alpha, StreamIndex(0, 1, 3)) - x) < 1e-12
        assert abs(stream_eval(3, alpha, StreamIndex(1, 1, 3)) - xstar) < 1e-12
        assert max(identity_list_check(alpha).values()) < 1e-10

    def test_m2_aside_origin(self):
        assert abs(stream_eval(2, 0.8, StreamIndex(1, 1, 2)) - 1) < 1e-12

    def test_characteristic_coefficients(self):
        alpha = 0.5 + 0.3j
        x, xstar, _ = constrained_variables(3, alpha)
        assert_allclose(characteristic_coefficients(3, alpha), [3 * x, 3 * xstar, 1], atol=1e-12)
        assert_allclose(characteristic_coefficients(2, 0.8), [2 * math.cosh(0.8), 1], atol=1e-12)

    def test_recurrence_m3(self):
        alpha = 0.6
        seq = recurrence_eval(3, alpha, 6)
        assert abs(seq.main[2] - (3 * seq.x ** 2 - 2 * seq.xstar)) < 1e-12
        assert abs(seq.get(0, 0) - seq.x) < 1e-12
        assert seq.n_max == 6
        assert len(seq.stream(1)) == 7

    @pytest.mark.parametrize('m,alpha', [(2, 0.5), (3, 0.9), (3, 0.4 + 0.7j), (4, -0.6)])
    def test_recurrence_matches_direct(self, m, alpha):
        seq = recurrence_eval(m, alpha, 8)
        growth = root_magnitude(m, alpha)
        for n in range(8):
            scale = growth ** (n + 2)
            for s in range(m):
                target = stream_eval(m, alpha, StreamIndex(n, s, m))
                assert abs(seq.get(n, s) - target) < 1e-10 * max(1, abs(target), scale)

    def test_m2_aside_is_shifted_cosh(self):
        seq = recurrence_eval(2, 0.5, 6)
        assert abs(seq.get(4, 1) - math.cosh(1.5)) < 1e-12

    @pytest.mark.parametrize('m', [2, 3, 4, 5])
    def test_three_way(self, m):
        for alpha in ALPHAS:
            assert three_way_check(m, alpha, 12) < 1e-9

    def test_binet(self):
        assert abs(binet_eval(3, 0.4, 0) - 1) < 1e-15
        x, _, _ = constrained_variables(3, 0.4)
        assert abs(binet_eval(3, 0.4, 1) - x) < 1e-14
        with pytest.raises(RangeError):
            binet_eval(3, 100.0, 10)

    def test_recurrence_needs_length(self):
        with pytest.raises(DomainError):
            recurrence_eval(3, 0.5, 1)

    @pytest.mark.parametrize('grade', [0, 1, 2])
    def test_general_k(self, grade):
        for n, k in [(0, 1), (2, 3), (4, 2)]:
            assert general_k_check(3, 0.5 + 0.4j, n, k, grade) < 1e-9


class TestGeneratingFunctions:
    def test_main_stream_prefix(self):
        l_text = [p.to_text() for p in genfun(3, None, 0).series(3)]
        assert l_text == ['1', 'x', '3*x^2 - 2*x*']

    def test_aside_prefix(self):
        assert [p.to_text() for p in genfun(3, None, 1).series(3)] == ['x', 'x*', 'x**']
        assert genfun(3, None, 2).series(3)[2].to_text() == '3*x*x* - x** - 1'

    def test_symbolic_main_stream(self):
        assert symbolic_main_stream(11) == genfun(3, None, 0).series(12)

    @pytest.mark.parametrize('stream', [0, 1, 2])
    def test_numeric_agreement(self, stream):
        for alpha in ALPHAS:
            assert genfun_check(alpha, stream) < 1e-9

    def test_pole(self):
        alpha = 0.7
        assert abs(genfun(3, alpha, 0).denominator_at(math.exp(-alpha))) < 1e-12

    def test_errors(self):
        with pytest.raises(DomainError):
            genfun(4, 0.5, 0)
        with pytest.raises(DomainError):
            genfun(3, None, 0).numeric_series(4)

    def test_to_json(self):
        doc = genfun(3, 0.5, 1).to_json(4)
        assert doc['vars'] == ['x', 'x*', 'x**']
        assert doc['denominator'] == ['1', '-3*x', '3*x*', '-1']
        assert len(doc['values']) == 4


class TestSelectors:
    def test_paths_agree(self):
        for i in range(12):
            for k in range(12):
                assert delta_selector(i, k) == delta_selector(i, k, method='omega')

    def test_kinds_partition(self):
        for i in range(9):
            for k in range(9):
                assert sum(kind_selector(kind, i, k) for kind in range(3)) == 1

    def test_examples(self):
        assert delta_selector(4, 1) == 1
        assert delta_selector(4, 2) == 0
        with pytest.raises(DomainError):
            delta_selector(1, 1, m=4)
        with pytest.raises(DomainError):
            kind_selector(3, 0, 0)


class TestExpansions:
    def test_texts(self):
        assert expand_poly(0, 0).to_text() == '1'
        assert expand_poly(0, 1).to_text() == 'x'
        assert expand_poly(0, 2).to_text() == 'x^2 + 2*y*z'
        assert expand_poly(1, 1).to_text() == 'z'
        assert expand_poly(2, 1).to_text() == 'y'
        assert expand_poly_m2(3).to_text() == 'x^3 + 3*x*y^2'

    def test_integral(self):
        for kind in range(3):
            assert expand_poly(kind, 7).is_integral()

    @pytest.mark.parametrize('kind', [0, 1, 2])
    def test_on_surface(self, kind):
        for alpha in ALPHAS:
            for n in range(9):
                assert eval_expansion_on_surface(kind, n, alpha) < 1e-9

    @pytest.mark.parametrize('kind', [0, 1, 2])
    def test_kind_grade(self, kind):
        assert find_kind_grade(kind, [0.7, complex(-0.4, 0.9)]) == [KIND_GRADE[kind]]

    def test_m2(self):
        for n in range(8):
            assert m2_expansion_check(n, 0.9 - 0.3j) < 1e-10
