# encoding='utf-8'

from fractions import Fraction

import pytest

from hypercheb.utils.base import (
    DomainError,
    format_float,
    format_number,
    parse_complex,
    parse_list,
    residual,
    scaled_residual,
)


class TestFormat:
    def test_exact_values(self):
        assert format_number(55) == '55'
        assert format_number(-3) == '-3'
        assert format_number(Fraction(8)) == '8'
        assert format_number(Fraction(-3, 4)) == '-3/4'

    def test_floats(self):
        assert format_number(0.1) == '0.10000000000000001'
        assert format_number(2.0) == '2'
        assert float(format_float(1 / 3)) == 1 / 3

    def test_complex(self):
        assert format_number(complex(2, 0)) == '2'
        assert format_number(complex(1, -0.5)) == '1-0.5j'


class TestParse:
    def test_complex_literals(self):
        assert parse_complex('-0.5,0.2') == complex(-0.5, 0.2)
        assert parse_complex('3') == complex(3, 0)
        with pytest.raises(DomainError):
            parse_complex('1,2,3')
        with pytest.raises(DomainError):
            parse_complex('a,b')

    def test_lists(self):
        assert parse_list('-1, 2') == [-1.0, 2.0]
        assert parse_list('1/2,-3', exact=True) == [Fraction(1, 2), Fraction(-3)]
        with pytest.raises(DomainError):
            parse_list('1,x')


class TestResidual:
    def test_absolute_below_one(self):
        assert residual(1e-12, 0.0) == 1e-12

    def test_relative_above_one(self):
        assert residual(1e6 + 1, 1e6) == pytest.approx(1 / (1e6 + 1))

    def test_scaled(self):
        assert scaled_residual(1.0 + 1e-8, 1.0, 1e8) == pytest.approx(1e-16)
