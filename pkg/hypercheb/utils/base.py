# encoding='utf-8'

"""
basic utility functions
    set_basic_log,
    load_py_config,
    parse_complex,
    parse_list,
    residual,
    scaled_residual,
    format_float,
and the exception hierarchy shared by every module
"""

import sys
import logging
from fractions import Fraction

from traitlets.config import PyFileConfigLoader


class HyperChebError(Exception):
    pass


class RangeError(HyperChebError, ArithmeticError):
    """a float evaluation left the double exponent range"""


class DomainError(HyperChebError, ValueError):
    """arguments outside the region where an operation is defined"""


class DegenerateRootsError(DomainError):
    """an omega-weighted root combination vanishes"""


class DimensionError(HyperChebError, ValueError):
    pass


def set_basic_log(log_level=logging.INFO, stream=None):
    """
    set basic logs
    :param log_level:
    :param stream: defaults to stderr, stdout is kept for documents
    :return:
    """
    root = logging.getLogger()
    root.setLevel(log_level)
    ch = logging.StreamHandler(stream or sys.stderr)
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    ch.setFormatter(formatter)
    root.addHandler(ch)


def load_py_config(in_name):
    reader = PyFileConfigLoader(in_name)
    reader.load_config()
    logging.info('load from [%s] conf: %s', in_name, reader.config)
    return reader.config


def parse_complex(text):
    """
    parse a `re,im` literal; a bare `re` is accepted as a real number
    :param text:
    :return: complex
    """
    cols = [c.strip() for c in text.split(',')]
    try:
        if len(cols) == 1:
            return complex(float(cols[0]), 0.0)
        if len(cols) == 2:
            return complex(float(cols[0]), float(cols[1]))
    except ValueError:
        pass
    raise DomainError('cannot parse complex literal [%s], expected re,im' % text)


def parse_list(text, exact=False):
    """
    parse a comma separated list of numbers
    :param text: e.g. '1,1' or '1/2,3'
    :param exact: Fractions instead of floats
    :return: list
    """
    l_item = [t.strip() for t in text.split(',') if t.strip()]
    try:
        if exact:
            return [Fraction(t) for t in l_item]
        return [float(t) for t in l_item]
    except ValueError:
        raise DomainError('cannot parse number list [%s]' % text)


def residual(lhs, rhs):
    """
    |lhs - rhs| scaled by max(1, |lhs|, |rhs|)
    absolute below unit magnitude, relative above
    """
    diff = abs(lhs - rhs)
    return float(diff / max(1.0, abs(lhs), abs(rhs)))


def scaled_residual(lhs, rhs, scale):
    """
    |lhs - rhs| against the magnitude of the terms that were summed to produce them,
    for values that are small only through cancellation
    """
    diff = abs(lhs - rhs)
    return float(diff / max(1.0, abs(lhs), abs(rhs), scale))


def format_float(value):
    """17 significant digits, round-trips a double"""
    return '%.17g' % value


def format_number(value):
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        if value.imag == 0:
            return format_float(value.real)
        return '%s%+.17gj' % (format_float(value.real), value.imag)
    return format_float(value)
