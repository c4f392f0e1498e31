# encoding='utf-8'

import math
from fractions import Fraction

import numpy as np
import pytest
import sympy

from hypercheb.functions.hyperbolic import h0
from hypercheb.sequences.chebyshev import binet_eval
from hypercheb.sequences.companion import (
    RecurrenceSpec,
    build_companion,
    step,
    power,
    orbit,
    orbit_terms,
    orbit_check,
    cayley_hamilton_residual,
    principal_minor_sum,
    characteristic_polynomial,
    expected_characteristic_polynomial,
    closed_form_check,
    chebyshev_generator,
)
from hypercheb.utils.base import DimensionError, DomainError

FIBONACCI = RecurrenceSpec((1, 1), (0, 1))
TRIBONACCI = RecurrenceSpec((1, 1, 1), (0, 1, 1))


def random_specs(count=8, seed=3):
    rng = np.random.default_rng(seed)
    l_spec = []
    for _ in range(count):
        m = int(rng.integers(1, 6))
        alphas = [Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4))) for _ in range(m)]
        if alphas[0] == 0:
            alphas[0] = Fraction(1)
        seeds = [Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4))) for _ in range(m)]
        l_spec.append(RecurrenceSpec(tuple(alphas), tuple(seeds)))
    return l_spec


class TestRecurrenceSpec:
    def test_mode_detection(self):
        assert FIBONACCI.exact
        assert FIBONACCI.alphas == (Fraction(1), Fraction(1))
        assert not RecurrenceSpec((0.5, 1.0), (0.0, 1.0)).exact

    def test_validation(self):
        with pytest.raises(DomainError):
            RecurrenceSpec((0.5, 1), (0, 1), exact=True)
        with pytest.raises(DimensionError):
            RecurrenceSpec((1, 1), (0, 1, 1))
        with pytest.raises(DimensionError):
            RecurrenceSpec((), ())

    def test_sequence(self):
        assert FIBONACCI.sequence(10) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
        assert TRIBONACCI.sequence(7) == [0, 1, 1, 2, 4, 7, 13, 24]

    def test_backward_terms(self):
        assert FIBONACCI.term(-1) == 1
        assert FIBONACCI.term(-2) == -1
        assert FIBONACCI.term(-5) == 5
        assert TRIBONACCI.term(-1) == 0
        assert TRIBONACCI.term(-2) == 1
        with pytest.raises(DomainError):
            RecurrenceSpec((0, 1), (0, 1)).term(-1)


class TestCompanionMatrix:
    def test_layout(self):
        a = build_companion(RecurrenceSpec((-2, 3), (0, 1)))
        assert a.matrix.tolist() == [[3, -2], [1, 0]]
        a = build_companion(RecurrenceSpec((7, 5, 4), (0, 1, 1)))
        assert a.matrix.tolist() == [[4, 5, 7], [1, 0, 0], [0, 1, 0]]
        a = build_companion(RecurrenceSpec((3,), (2,)))
        assert a.matrix.tolist() == [[3]]

    def test_step(self):
        assert step(FIBONACCI, (1, 0)) == (1, 1)
        assert step(FIBONACCI, (0, 0)) == (0, 0)
        with pytest.raises(DimensionError):
            step(FIBONACCI, (1, 0, 0))

    def test_power(self):
        a = build_companion(FIBONACCI)
        assert power(a, 0).tolist() == [[1, 0], [0, 1]]
        assert power(a, 5).tolist() == [[8, 5], [5, 3]]
        assert (power(a, 7) == power(a, 3).dot(power(a, 4))).all()
        with pytest.raises(DomainError):
            power(a, -1)

    def test_orbit(self):
        assert orbit_terms(FIBONACCI, 10) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
        assert orbit(FIBONACCI, 2) == [(1, 0), (1, 1), (2, 1)]
        assert orbit_check(FIBONACCI, 20) == 0

    @pytest.mark.parametrize('spec', random_specs())
    def test_exact_invariants(self, spec):
        a = build_companion(spec)
        m = spec.order
        assert cayley_hamilton_residual(a) == 0
        assert orbit_check(spec, 15) == 0
        assert a.trace() == spec.alphas[m - 1]
        assert a.determinant() == (-1) ** (m - 1) * spec.alphas[0]
        assert characteristic_polynomial(a) == expected_characteristic_polynomial(spec)

    def test_characteristic_polynomial_against_sympy(self):
        spec = RecurrenceSpec((Fraction(2, 3), -1, 4, Fraction(1, 2)), (0, 1, 0, 1))
        a = build_companion(spec)
        x = sympy.Symbol('x')
        dense = sympy.Matrix(4, 4, lambda i, j: sympy.Rational(str(a.matrix[i, j])))
        expected = sympy.Poly(dense.charpoly(x).as_expr(), x)
        poly = characteristic_polynomial(a)
        for (k,), coeff in poly.terms.items():
            assert sympy.Rational(str(coeff)) == expected.coeff_monomial(x ** k)
        assert len(poly.terms) == len(expected.terms())

    def test_principal_minor_sum(self):
        spec = RecurrenceSpec((2, -3, 5), (0, 1, 1))
        assert principal_minor_sum(build_companion(spec)) == 3

    def test_float_mode(self):
        spec = RecurrenceSpec((0.5 + 0.5j, -1.25, 0.75), (1.0, 0.0, -1.0))
        a = build_companion(spec)
        assert cayley_hamilton_residual(a) < 1e-12
        assert orbit_check(spec, 20) < 1e-10
        assert abs(a.determinant() - spec.alphas[0]) < 1e-12
        with pytest.raises(DomainError):
            characteristic_polynomial(a)


class TestClosedForms:
    def test_fibonacci_shift(self):
        report = closed_form_check(2, FIBONACCI, 12)
        assert not report.printed_holds
        assert report.shift == -1
        assert report.first_failure[0] == 0
        assert 'n-1' in report.describe()

    @pytest.mark.parametrize('p,q', [(1, -1), (3, 2), (Fraction(1, 2), Fraction(-3, 4))])
    def test_m2_any_pq(self, p, q):
        spec = RecurrenceSpec((-q, p), (0, 1))
        assert closed_form_check(2, spec, 10).shift == -1

    def test_tribonacci_shift(self):
        report = closed_form_check(3, TRIBONACCI, 12)
        assert report.shift == -1
        assert report.to_json()['shift'] == -1

    def test_m3_needs_unit_p(self):
        spec = RecurrenceSpec((1, 1, 2), (0, 1, 1))
        report = closed_form_check(3, spec, 8)
        assert report.shift is None
        assert 'fails' in report.describe()

    def test_errors(self):
        with pytest.raises(DimensionError):
            closed_form_check(3, FIBONACCI, 5)
        with pytest.raises(DomainError):
            closed_form_check(2, RecurrenceSpec((0, 1), (0, 1)), 5)


class TestChebyshevGenerator:
    def test_m2(self):
        alpha = 0.6
        spec = chebyshev_generator(2, alpha)
        assert abs(spec.alphas[0] + 1) < 1e-12
        assert abs(spec.alphas[1] - 2 * math.cosh(alpha)) < 1e-12
        for n, f in enumerate(orbit_terms(spec, 10)):
            assert abs(f / 2 - math.cosh(n * alpha)) < 1e-9 * math.cosh(n * alpha)

    def test_m3_matches_binet(self):
        alpha = 0.5 - 0.4j
        for n, f in enumerate(orbit_terms(chebyshev_generator(3, alpha), 10)):
            assert abs(f / 3 - binet_eval(3, alpha, n)) < 1e-9 * max(1, abs(f))
        assert abs(chebyshev_generator(3, alpha).seeds[1] - 3 * h0(3, alpha)) < 1e-12

    def test_origin_is_constant(self):
        l_f = orbit_terms(chebyshev_generator(3, 0.0), 8)
        assert all(abs(f - 3) < 1e-12 for f in l_f)
