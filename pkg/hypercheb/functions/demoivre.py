# encoding='utf-8'

"""
circulant de Moivre matrices
    H(alpha) has first row (h_0(alpha), ..., h_{m-1}(alpha)), entry (i, j) = row[(j - i) mod m]
    H(alpha) H(beta) = H(alpha + beta), so H(n alpha) = H(alpha)^n
    det H(alpha) = 1: the first rows lie on the hyperbolon surface {det circ(x) = 1}
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy.linalg import circulant

from hypercheb.algebra.polynomial import SparsePoly, determinant
from hypercheb.algebra.spectral import check_order
from hypercheb.functions.hyperbolic import eval_point
from hypercheb.utils.base import DimensionError, DomainError, residual

logger = logging.getLogger(__name__)

MAX_SYMBOLIC_ORDER = 6

# the m = 4 surface as printed in the literature, in (x, y, z, t)
PRINTED_QUARTIC = SparsePoly(('x', 'y', 'z', 't'), {
    (4, 0, 0, 0): -1,
    (0, 4, 0, 0): 1,
    (0, 0, 4, 0): -1,
    (0, 0, 0, 4): 1,
    (2, 1, 0, 1): 4,
    (1, 2, 1, 0): -4,
    (0, 1, 2, 1): 4,
    (1, 0, 1, 2): -4,
    (2, 0, 2, 0): 2,
    (0, 2, 0, 2): -2,
})


@dataclass(frozen=True)
class CirculantMatrix:
    m: int
    row: Tuple[complex, ...]

    def __post_init__(self):
        if len(self.row) != self.m:
            raise DimensionError('first row has [%d] entries, expected [%d]' % (len(self.row), self.m))

    @classmethod
    def identity(cls, m):
        return cls(m, tuple(1.0 + 0j if j == 0 else 0j for j in range(m)))

    def entry(self, i, j):
        return self.row[(j - i) % self.m]

    def to_dense(self):
        # scipy builds from the first column, which is row[-i mod m]
        column = [self.row[(-i) % self.m] for i in range(self.m)]
        return circulant(np.array(column, dtype=complex))

    def eigenvalues(self):
        """lambda_k = sum_j w^(kj) row[j]"""
        return np.fft.ifft(np.array(self.row, dtype=complex)) * self.m

    def determinant(self):
        return complex(np.prod(self.eigenvalues()))

    def __matmul__(self, other):
        return circulant_mul(self, other)

    def power(self, n):
        """square-and-multiply for n >= 0"""
        if n < 0:
            raise DomainError('use demoivre_matrix with a negative n for inverses')
        result = CirculantMatrix.identity(self.m)
        base = self
        while n:
            if n & 1:
                result = circulant_mul(result, base)
            base = circulant_mul(base, base)
            n >>= 1
        return result

    def max_residual(self, other):
        return max(residual(a, b) for a, b in zip(self.row, other.row))


def demoivre_matrix(m, alpha, n=1):
    """
    H(n alpha); a negative n gives the group inverse through -alpha, no numeric inversion
    """
    check_order(m)
    point = eval_point(m, n * complex(alpha))
    return CirculantMatrix(m, point.h)


def circulant_mul(a, b):
    """first row of the product = cyclic convolution of the first rows"""
    if a.m != b.m:
        raise DimensionError('cannot multiply circulants of order [%d] and [%d]' % (a.m, b.m))
    m = a.m
    row = tuple(sum(a.row[i] * b.row[(k - i) % m] for i in range(m)) for k in range(m))
    return CirculantMatrix(m, row)


def variable_names(m):
    if m == 2:
        return ('x', 'y')
    if m == 3:
        return ('x', 'y', 'z')
    if m == 4:
        return ('x', 'y', 'z', 't')
    return tuple('x%d' % i for i in range(m))


def symbolic_circulant(m, vars=None):
    vars = tuple(vars or ('x%d' % i for i in range(m)))
    l_var = SparsePoly.variables(vars)
    return [[l_var[(j - i) % m] for j in range(m)] for i in range(m)]


@lru_cache(maxsize=None)
def _invariant(m):
    logger.debug('expanding symbolic circulant determinant for m=[%d]', m)
    return determinant(symbolic_circulant(m))


def hyperbolon_invariant(m):
    """
    det of the circulant with first row (x_0, ..., x_{m-1}), exact over the integers
    :param m: 2 <= m <= 6
    :return: SparsePoly in x0..x{m-1}
    """
    check_order(m)
    if m > MAX_SYMBOLIC_ORDER:
        raise DomainError('symbolic determinant limited to m <= %d, got [%d]' % (MAX_SYMBOLIC_ORDER, m))
    inv = _invariant(m)
    return SparsePoly(inv.vars, dict(inv.terms))


def on_surface(m, point, tol=1e-9):
    point = list(point)
    if len(point) != m:
        raise DimensionError('point has [%d] components, expected [%d]' % (len(point), m))
    value = hyperbolon_invariant(m).evaluate([complex(p) for p in point])
    return bool(abs(value - 1) <= tol)


def volume_check(m, alpha):
    """invariant at the first row of H(alpha), against 1"""
    point = eval_point(m, alpha)
    return residual(hyperbolon_invariant(m).evaluate(point.h), 1.0)


def group_law_check(m, alpha, beta):
    """H(alpha) H(beta) against H(alpha + beta), worst entry"""
    product = circulant_mul(demoivre_matrix(m, alpha), demoivre_matrix(m, beta))
    return product.max_residual(demoivre_matrix(m, complex(alpha) + complex(beta)))


def eigen_determinant_check(m, alpha):
    """prod of eigenvalues against the exact invariant evaluated numerically"""
    h = demoivre_matrix(m, alpha)
    return residual(h.determinant(), hyperbolon_invariant(m).evaluate(h.row))


@dataclass(frozen=True)
class Reconciliation:
    perm: Tuple[int, ...]
    sign: int

    def describe(self, names=('x', 'y', 'z', 't')):
        l_arg = [names[p] for p in self.perm]
        prefix = '' if self.sign == 1 else '-'
        return '%sdet circ(%s)' % (prefix, ', '.join(l_arg))


def reconcile_printed_quartic(printed=PRINTED_QUARTIC):
    """
    all (variable relabeling, overall sign) pairs taking the exact m = 4 invariant to `printed`
    :return: list of Reconciliation, identity relabeling with sign +1 present iff printed is exact
    """
    inv = hyperbolon_invariant(4)
    inv = SparsePoly(printed.vars, inv.terms)
    l_match = []
    for perm in itertools.permutations(range(4)):
        moved = inv.rename(perm)
        for sign in (1, -1):
            if moved * sign == printed:
                l_match.append(Reconciliation(perm, sign))
    logger.info('printed quartic reconciled by [%d] relabelings', len(l_match))
    return l_match


def sample_surface(m, l_alpha):
    """
    point cloud of first rows of H(alpha) over an alpha grid
    :return: {'m': m, 'points': [[...], ...]}, real coordinates when the grid is real
    """
    l_point = []
    for alpha in l_alpha:
        h = eval_point(m, alpha).as_array()
        if np.max(np.abs(h.imag)) < 1e-12:
            l_point.append([float(v) for v in h.real])
        else:
            l_point.append([[float(v.real), float(v.imag)] for v in h])
    return {'m': m, 'points': l_point}
