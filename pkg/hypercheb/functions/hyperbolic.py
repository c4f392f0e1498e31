# encoding='utf-8'

"""
hyperbolic functions of order m
    h_k(z) = 1/m sum_j w^(-kj) exp(w^j z)          (Euler form)
           = sum_s z^(ms+k) / (ms+k)!               (series form)
h_0, h_1 are cosh, sinh when m = 2.

the Euler form is used except close to the origin, where exp(w^j z) are all ~1
and their weighted sum cancels; there the series is summed instead.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.linalg import expm
from traitlets.config import Configurable
from traitlets import (
    Int,
    Float,
    Bool,
)

from hypercheb.algebra.spectral import root_table, hyperbolic_series, check_order, check_residue
from hypercheb.utils.base import RangeError, residual
from hypercheb.utils.base_conf import MAX_EXP_ARG, DEFAULT_ORDER, DEFAULT_TOL

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HyperbolicPoint:
    m: int
    alpha: complex
    h: Tuple[complex, ...]

    def __getitem__(self, k):
        return self.h[k % self.m]

    def as_array(self):
        return np.array(self.h, dtype=complex)


class HyperbolicEvaluator(Configurable):
    series_radius = Float(1e-2, help="below this |z| the series form replaces the Euler form").tag(config=True)
    series_order = Int(DEFAULT_ORDER, help="truncation order of the series form").tag(config=True)
    check_invariant = Bool(False, help="check sum_k h_k = exp(alpha) in eval_point").tag(config=True)

    def _exponentials(self, m, z):
        w = root_table(m)
        args = w.powers * complex(z)
        worst = float(np.max(np.abs(args.real)))
        if worst > MAX_EXP_ARG:
            raise RangeError('exp argument [%g] out of double range for m=%d, z=%s' % (worst, m, z))
        return np.exp(args)

    def eval_h(self, m, k, z, method='auto'):
        """
        h_k(z) for order m
        :param method: 'auto', 'euler' or 'series'
        :return: complex
        """
        check_order(m)
        check_residue(k, m)
        z = complex(z)
        if method == 'series' or (method == 'auto' and abs(z) < self.series_radius):
            return hyperbolic_series(m, k, self.series_order).evaluate(z)
        w = root_table(m)
        l_exp = self._exponentials(m, z)
        return complex(np.sum(w.powers[(-k * np.arange(m)) % m] * l_exp) / m)

    def eval_point(self, m, alpha):
        """
        all m components (h_0(alpha), ..., h_{m-1}(alpha))
        the Euler sums for every k at once are a DFT of the exponentials
        """
        check_order(m)
        alpha = complex(alpha)
        if abs(alpha) < self.series_radius:
            l_h = [hyperbolic_series(m, k, self.series_order).evaluate(alpha) for k in range(m)]
        else:
            l_h = list(np.fft.fft(self._exponentials(m, alpha)) / m)
        point = HyperbolicPoint(m, alpha, tuple(complex(v) for v in l_h))
        if self.check_invariant or logger.isEnabledFor(logging.DEBUG):
            res = residual(sum(point.h), self._exp(alpha))
            if res > DEFAULT_TOL:
                logger.warning('sum of h_k differs from exp at alpha=[%s]: residual [%g]', alpha, res)
            else:
                logger.debug('eval_point m=[%d] alpha=[%s] exp residual [%g]', m, alpha, res)
        return point

    @staticmethod
    def _exp(z):
        if z.real > MAX_EXP_ARG:
            raise RangeError('exp(%s) overflows' % z)
        return complex(np.exp(z))


_evaluator = HyperbolicEvaluator()


def default_evaluator():
    return _evaluator


def configure(config):
    """replace the module evaluator by one built from a traitlets config"""
    global _evaluator
    _evaluator = HyperbolicEvaluator(config=config)
    return _evaluator


def eval_h(m, k, z, method='auto'):
    return _evaluator.eval_h(m, k, z, method)


def eval_point(m, alpha):
    return _evaluator.eval_point(m, alpha)


def h0(m, z):
    return _evaluator.eval_h(m, 0, z)


def convolution_check(m, alpha, beta, k):
    """
    h_k(a+b) against sum_i h_i(a) h_{k-i}(b), indices mod m
    :return: residual
    """
    check_residue(k, m)
    pa = eval_point(m, alpha)
    pb = eval_point(m, beta)
    lhs = eval_h(m, k, complex(alpha) + complex(beta))
    rhs = sum(pa[i] * pb[k - i] for i in range(m))
    return residual(lhs, rhs)


def product_identity_check(m, alpha, beta):
    """sum_k h_0(a + w^k b) against m h_0(a) h_0(b)"""
    w = root_table(m)
    lhs = sum(h0(m, complex(alpha) + w.powers[k] * complex(beta)) for k in range(m))
    rhs = m * h0(m, alpha) * h0(m, beta)
    return residual(lhs, rhs)


def grading_check(m, k, z):
    """h_k(w z) against w^k h_k(z)"""
    w = root_table(m)
    return residual(eval_h(m, k, w.omega * complex(z)), w.power(k) * eval_h(m, k, z))


def derivative_check(m, k, z, step=1e-6):
    """central difference of h_k against h_{k-1}"""
    z = complex(z)
    slope = (eval_h(m, k, z + step) - eval_h(m, k, z - step)) / (2 * step)
    return residual(slope, eval_h(m, (k - 1) % m, z))


def series_agreement(m, k, z):
    """Euler form against the summed series"""
    return residual(eval_h(m, k, z, method='euler'), eval_h(m, k, z, method='series'))


def generator_matrix(m):
    """
    the cyclic shift g with g[i, j] = 1 iff j = i + 1 (mod m);
    exp(g alpha) is the circulant with first row (h_0(alpha), ..., h_{m-1}(alpha))
    """
    check_order(m)
    gamma = np.zeros((m, m))
    for i in range(m):
        gamma[i, (i + 1) % m] = 1.0
    return gamma


def exponential_form_check(m, alpha):
    """max entry residual between expm(g alpha) and the circulant of eval_point"""
    point = eval_point(m, alpha)
    dense = expm(generator_matrix(m) * complex(alpha))
    l_res = [residual(dense[i, j], point[j - i]) for i in range(m) for j in range(m)]
    return max(l_res)
