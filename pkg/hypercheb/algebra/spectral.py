# encoding='utf-8'

"""
roots of unity, truncated power series and the Z_m projection family
    RootOfUnityTable: cached powers of w = exp(2 pi i / m)
    TruncatedSeries: c_0 + c_1 z + ... + c_N z^N, closed under +, scaling and Cauchy product
    apply_omega: (W^s f)(z) = f(w^s z)
    project_delta: D_k = 1/m sum_s w^(-ks) W^s, keeps the coefficients at j = k mod m
"""

import math
from functools import lru_cache

import numpy as np

from hypercheb.utils.base import DomainError, DimensionError
from hypercheb.utils.base_conf import SERIES_TOL, DEFAULT_ORDER


def check_order(m):
    if not isinstance(m, (int, np.integer)) or m < 2:
        raise DomainError('order m must be an integer >= 2, got [%s]' % (m,))


def check_residue(k, m, name='k'):
    if not 0 <= k < m:
        raise DomainError('%s must lie in [0, %d), got [%s]' % (name, m, k))


class RootOfUnityTable(object):
    __slots__ = ('m', 'powers')

    def __init__(self, m):
        check_order(m)
        self.m = int(m)
        powers = np.exp(2j * np.pi * np.arange(self.m) / self.m)
        powers.flags.writeable = False
        self.powers = powers

    @property
    def omega(self):
        return self.powers[1]

    def power(self, s):
        """w^s for any integer s"""
        return self.powers[s % self.m]

    def character_sum(self, k):
        """sum_s w^(ks), which is m when k = 0 mod m and 0 otherwise"""
        return complex(np.sum(self.powers[(k * np.arange(self.m)) % self.m]))

    def __repr__(self):
        return 'RootOfUnityTable(m=%d)' % self.m


@lru_cache(maxsize=None)
def root_table(m):
    return RootOfUnityTable(m)


class TruncatedSeries(object):
    __slots__ = ('coeffs',)

    def __init__(self, coeffs):
        coeffs = np.array(coeffs, dtype=complex)
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise DimensionError('a series needs a nonempty 1-d coefficient vector')
        coeffs.flags.writeable = False
        self.coeffs = coeffs

    @property
    def order(self):
        return self.coeffs.size - 1

    def _check_same_order(self, other):
        if other.order != self.order:
            raise DimensionError('series orders differ: [%d] vs [%d]' % (self.order, other.order))

    def __add__(self, other):
        self._check_same_order(other)
        return TruncatedSeries(self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check_same_order(other)
        return TruncatedSeries(self.coeffs - other.coeffs)

    def scale(self, c):
        return TruncatedSeries(self.coeffs * c)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_same_order(other)
            # Cauchy product, coefficients past the order are dropped
            return TruncatedSeries(np.convolve(self.coeffs, other.coeffs)[:self.coeffs.size])
        return self.scale(other)

    __rmul__ = __mul__

    def evaluate(self, z):
        return complex(np.polynomial.polynomial.polyval(z, self.coeffs))

    def max_abs(self):
        return float(np.max(np.abs(self.coeffs)))

    def gap(self, other):
        """largest coefficient difference, scaled by the largest coefficient magnitude"""
        self._check_same_order(other)
        scale = max(1.0, self.max_abs(), other.max_abs())
        return float(np.max(np.abs(self.coeffs - other.coeffs))) / scale

    def allclose(self, other, tol=SERIES_TOL):
        return bool(self.gap(other) <= tol)

    def __repr__(self):
        return 'TruncatedSeries(order=%d)' % self.order


def exp_series(order=DEFAULT_ORDER):
    return TruncatedSeries([1.0 / math.factorial(j) for j in range(order + 1)])


def geometric_series(order=DEFAULT_ORDER):
    return TruncatedSeries(np.ones(order + 1))


def apply_omega(f, w, s):
    """
    (W^s f)(z) = f(w^s z), i.e. coefficient j picks up w^(s j)
    :param f: TruncatedSeries
    :param w: RootOfUnityTable
    :param s: 0 <= s < m
    """
    check_residue(s, w.m, 's')
    j = np.arange(f.coeffs.size)
    return TruncatedSeries(f.coeffs * w.powers[(s * j) % w.m])


def project_delta(f, w, k):
    """
    D_k f by masking: keep coefficients at j = k (mod m)
    """
    check_residue(k, w.m)
    mask = (np.arange(f.coeffs.size) % w.m) == k
    return TruncatedSeries(np.where(mask, f.coeffs, 0))


def project_delta_omega_sum(f, w, k):
    """
    D_k f from its defining average 1/m sum_s w^(-ks) W^s f, the cross-check path
    """
    check_residue(k, w.m)
    acc = np.zeros(f.coeffs.size, dtype=complex)
    for s in range(w.m):
        acc += w.power(-k * s) * apply_omega(f, w, s).coeffs
    return TruncatedSeries(acc / w.m)


def hyperbolic_series(m, k, order=DEFAULT_ORDER):
    """
    h_k(z) = sum_s z^(ms+k) / (ms+k)!, truncated at z^order
    """
    check_order(m)
    check_residue(k, m)
    if order < 0:
        raise DomainError('order must be >= 0, got [%s]' % order)
    return TruncatedSeries([1.0 / math.factorial(j) if j % m == k else 0.0 for j in range(order + 1)])


def m_geometric_series(m, k, order=DEFAULT_ORDER):
    """g_k(z) = sum_s z^(ms+k), the geometric eigen-series of W"""
    check_order(m)
    return project_delta(geometric_series(order), root_table(m), k)


def evaluate(series, z):
    """Horner evaluation of a truncated series at z"""
    acc = 0j
    for c in series.coeffs[::-1]:
        acc = acc * z + c
    return complex(acc)
