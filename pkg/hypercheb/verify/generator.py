# encoding='utf-8'

"""
random case parameters for the verification suites
    alphas in a box, orders and residues, truncated series,
    positive and complex root systems, rational recurrence specs
every draw comes from one numpy Generator seeded by (seed, stream), so a run is reproducible
"""

import logging
from fractions import Fraction

import numpy as np
from traitlets.config import Configurable
from traitlets import (
    Int,
    List,
    Float,
)

from hypercheb.algebra.spectral import TruncatedSeries
from hypercheb.utils.base_conf import DEFAULT_ORDER


class CaseGenerator(Configurable):
    alpha_box = Float(2.0, help='random alphas satisfy min_alpha <= |alpha| <= alpha_box').tag(config=True)
    min_alpha = Float(0.3, help='lower bound of |alpha|').tag(config=True)
    series_order = Int(DEFAULT_ORDER, help='truncation order of random series').tag(config=True)
    orders = List(Int(), default_value=[2, 3, 4], help='orders m drawn by the suites').tag(config=True)
    root_box = Float(3.0, help='max modulus of random roots').tag(config=True)
    min_root_gap = Float(0.5, help='min pairwise distance of random roots').tag(config=True)
    max_numerator = Int(5, help='range of random rational coefficients').tag(config=True)

    def __init__(self, **kwargs):
        super(CaseGenerator, self).__init__(**kwargs)
        self.rng = np.random.default_rng(0)

    def reset(self, seed, stream=0):
        self.rng = np.random.default_rng([seed, stream])
        logging.debug('case generator reset to seed [%d] stream [%d]', seed, stream)

    def alpha(self, real=False, box=None):
        radius = self.rng.uniform(self.min_alpha, self.alpha_box if box is None else box)
        if real:
            return float(radius * self.rng.choice([-1.0, 1.0]))
        angle = self.rng.uniform(0, 2 * np.pi)
        return complex(radius * np.exp(1j * angle))

    def order(self, l_order=None):
        return int(self.rng.choice(l_order or self.orders))

    def residue(self, m):
        return int(self.rng.integers(0, m))

    def index(self, low, high):
        """integer in [low, high]"""
        return int(self.rng.integers(low, high + 1))

    def series(self, order=None):
        order = self.series_order if order is None else order
        coeffs = self.rng.normal(size=order + 1) + 1j * self.rng.normal(size=order + 1)
        return TruncatedSeries(coeffs)

    def _spread(self, l_root):
        return all(abs(a - b) >= self.min_root_gap for i, a in enumerate(l_root) for b in l_root[i + 1:])

    def positive_roots(self, k=3, low=0.5):
        while True:
            l_root = sorted(float(r) for r in self.rng.uniform(low, self.root_box + 1, size=k))
            if self._spread(l_root):
                return tuple(l_root)

    def complex_roots(self, k=3):
        while True:
            radius = self.rng.uniform(0.5, self.root_box, size=k)
            angle = self.rng.uniform(0, 2 * np.pi, size=k)
            l_root = [complex(r * np.exp(1j * t)) for r, t in zip(radius, angle)]
            if self._spread(l_root):
                return tuple(l_root)

    def rational(self, nonzero=False):
        while True:
            value = Fraction(int(self.rng.integers(-self.max_numerator, self.max_numerator + 1)),
                             int(self.rng.integers(1, 5)))
            if value or not nonzero:
                return value

    def rational_spec(self, m):
        """(alphas, seeds) with alpha_0 != 0"""
        alphas = [self.rational(nonzero=(k == 0)) for k in range(m)]
        seeds = [self.rational() for _ in range(m)]
        return alphas, seeds
