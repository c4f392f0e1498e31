# encoding='utf-8'

"""
symmetric and cyclic-symmetric functions of polynomial roots
    V_n = sum_j a_j^n
    twisted functions, s = 1..m-1:  sum_j w^(sj) a_j^n / sum_j w^(sj) a_j
    for three roots U is the s = 1 twist and W the s = 2 twist; for two roots U is the Lucas U_n
every one of them obeys the recurrence whose characteristic polynomial has the roots a_j:
    x^m = c_1 x^(m-1) + ... + c_m,  c_j = (-1)^(j+1) e_j(a)
so a cubic reads x^3 = P x^2 + Q x + R with P = a+b+c, Q = -(ab+ac+bc), R = abc,
while the quadratic keeps the Lucas convention x^2 = P x - Q with P = a+b, Q = ab.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from hypercheb.algebra.spectral import root_table
from hypercheb.functions.hyperbolic import eval_h, h0
from hypercheb.utils.base import DomainError, DegenerateRootsError, DimensionError, residual, scaled_residual

logger = logging.getLogger(__name__)

DEGENERATE_TOL = 1e-12
WHICH_TWIST = {'V': 0, 'U': 1, 'W': 2}


@dataclass(frozen=True)
class RootSystem:
    roots: Tuple[complex, ...]

    def __post_init__(self):
        if len(self.roots) < 2:
            raise DimensionError('a root system needs at least 2 roots, got [%d]' % len(self.roots))
        object.__setattr__(self, 'roots', tuple(complex(r) for r in self.roots))

    @property
    def m(self):
        return len(self.roots)

    def coefficients(self):
        """(c_1, ..., c_m) with x^m = sum_j c_j x^(m-j) at every root"""
        l_poly = np.poly(np.array(self.roots, dtype=complex))
        return tuple(complex(-c) for c in l_poly[1:])

    def cyclic_shift(self, k=1):
        return type(self)(self.roots[k:] + self.roots[:k])

    def characteristic_residual(self):
        """worst |x^m - sum_j c_j x^(m-j)| over the roots"""
        l_c = self.coefficients()
        worst = 0.0
        for r in self.roots:
            rhs = sum(c * r ** (self.m - 1 - j) for j, c in enumerate(l_c))
            worst = max(worst, residual(r ** self.m, rhs))
        return worst


@dataclass(frozen=True)
class CubicRoots(RootSystem):

    def __post_init__(self):
        super(CubicRoots, self).__post_init__()
        if self.m != 3:
            raise DimensionError('CubicRoots holds exactly 3 roots, got [%d]' % self.m)
        a, b, c = self.roots
        if a == b == c:
            raise DomainError('the case a = b = c is excluded')

    @classmethod
    def of(cls, a, b, c):
        return cls((a, b, c))

    @property
    def a(self):
        return self.roots[0]

    @property
    def b(self):
        return self.roots[1]

    @property
    def c(self):
        return self.roots[2]


def roots_to_pqr(roots):
    """
    x^3 = P x^2 + Q x + R has roots a, b, c
    :return: (P, Q, R) = (a+b+c, -(ab+ac+bc), abc)
    """
    if roots.m != 3:
        raise DimensionError('roots_to_pqr needs 3 roots, got [%d]' % roots.m)
    a, b, c = roots.roots
    return a + b + c, -(a * b + a * c + b * c), a * b * c


def roots_to_pq(roots):
    """Lucas pair for two roots: P = a+b, Q = ab, F_{n+2} = P F_{n+1} - Q F_n"""
    if roots.m != 2:
        raise DimensionError('roots_to_pq needs 2 roots, got [%d]' % roots.m)
    a, b = roots.roots
    return a + b, a * b


def _twist(which, m):
    if isinstance(which, str):
        if which not in WHICH_TWIST:
            raise DomainError('which must be V, U or W, got [%s]' % which)
        s = WHICH_TWIST[which]
    else:
        s = int(which)
    if not 0 <= s < m:
        raise DomainError('twist [%s] needs more than [%d] roots' % (which, m))
    return s


def _weights(roots, s):
    return np.array([root_table(roots.m).power(s * j) for j in range(roots.m)], dtype=complex)


def vuw_direct(roots, which, n):
    """
    closed form from root powers
    :param which: 'V', 'U', 'W' or a twist index s
    """
    s = _twist(which, roots.m)
    l_root = np.array(roots.roots, dtype=complex)
    numerator = complex(np.sum(_weights(roots, s) * l_root ** n))
    if s == 0:
        return numerator
    denominator = complex(np.sum(_weights(roots, s) * l_root))
    scale = max(1.0, float(np.max(np.abs(l_root))))
    if abs(denominator) <= DEGENERATE_TOL * scale:
        raise DegenerateRootsError('weighted root sum vanishes for twist [%d] at roots %s' % (s, roots.roots))
    return numerator / denominator


@dataclass(frozen=True)
class RootFunctionSequence:
    which: str
    roots: RootSystem
    values: Tuple[complex, ...]

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def recurrence_residual(self):
        """worst residual of F_{n+m} = sum_j c_j F_{n+m-j} along the stored values"""
        m = self.roots.m
        l_c = self.roots.coefficients()
        worst = 0.0
        for n in range(len(self.values) - m):
            rhs = sum(l_c[j] * self.values[n + m - 1 - j] for j in range(m))
            worst = max(worst, residual(self.values[n + m], rhs))
        return worst


def vuw_recurrent(roots, which, n_max):
    """
    seed with the first m direct values, advance with the characteristic recurrence
    """
    m = roots.m
    if n_max < m:
        raise DomainError('n_max must be >= %d, got [%d]' % (m, n_max))
    l_c = roots.coefficients()
    l_f = [vuw_direct(roots, which, j) for j in range(m)]
    while len(l_f) <= n_max:
        l_f.append(sum(l_c[j] * l_f[-1 - j] for j in range(m)))
    return RootFunctionSequence(str(which), roots, tuple(l_f))


def sequence_agreement(roots, which, n_max):
    """
    worst mismatch of vuw_recurrent against vuw_direct, scaled by the summed root powers
    """
    seq = vuw_recurrent(roots, which, n_max)
    s = _twist(which, roots.m)
    l_root = np.abs(np.array(roots.roots, dtype=complex))
    denominator = 1.0
    if s:
        denominator = abs(complex(np.sum(_weights(roots, s) * np.array(roots.roots, dtype=complex))))
    worst = 0.0
    for n in range(n_max + 1):
        scale = float(np.sum(l_root ** n)) / denominator
        worst = max(worst, scaled_residual(seq[n], vuw_direct(roots, which, n), scale))
    return worst


def lucas_formulae_m2(a, b, n):
    """
    residuals of the classical Lucas formulae for positive roots a != b, Q = ab, D = (a-b)^2
        V_n = 2 Q^(n/2) cosh(n/2 ln(a/b))
        U_n = 2 Q^(n/2) sinh(n/2 ln(a/b)) / sqrt(D)
    and of the rescaled pair a_alpha(n) = Q^(-n/2) V_n / 2, b_alpha(n) = Q^(-n/2) sqrt(D) U_n / 2
    against cosh, sinh(n alpha), alpha = 1/2 ln(a/b); sqrt(D) is taken as a - b
    """
    if not (a > 0 and b > 0):
        raise DomainError('Lucas formulae need positive roots, got [%s, %s]' % (a, b))
    if a == b:
        raise DomainError('equal roots give a vanishing discriminant')
    roots = RootSystem((a, b))
    p, q = roots_to_pq(roots)
    p, q = p.real, q.real
    sqrt_d = a - b
    alpha = 0.5 * math.log(a / b)
    v_n = vuw_direct(roots, 'V', n).real
    u_n = vuw_direct(roots, 'U', n).real
    a_alpha = q ** (-n / 2) * v_n / 2
    b_alpha = q ** (-n / 2) * sqrt_d * u_n / 2

    def rescaled(k):
        return q ** (-k / 2) * vuw_direct(roots, 'V', k).real / 2

    h_res = {
        'V': residual(v_n, 2 * q ** (n / 2) * math.cosh(n / 2 * math.log(a / b))),
        'U': residual(u_n, 2 * q ** (n / 2) * math.sinh(n / 2 * math.log(a / b)) / sqrt_d),
        'discriminant': residual(p * p - 4 * q, sqrt_d * sqrt_d),
        'a_alpha': residual(a_alpha, math.cosh(n * alpha)),
        'b_alpha': residual(b_alpha, math.sinh(n * alpha)),
        'volume': residual(a_alpha * a_alpha - b_alpha * b_alpha, 1.0),
        # same rule of formation as V, U with the root pair scaled to product one
        'recurrence': residual(rescaled(n + 2), p / math.sqrt(q) * rescaled(n + 1) - rescaled(n)),
    }
    return h_res


def _check_positive(roots):
    for r in roots.roots:
        if abs(r.imag) > 0 or r.real <= 0:
            raise DomainError('identification needs positive real roots, got %s' % (roots.roots,))


def log_angle(roots):
    """alpha = 1/m sum_j w^j ln a_j with principal logarithms"""
    w = root_table(roots.m)
    return complex(sum(w.power(j) * cmath.log(r) for j, r in enumerate(roots.roots)) / roots.m)


def exponential_roots(m, alpha, scale=1.0):
    """(scale A, scale A^w, ...) with A = exp(alpha), i.e. scale exp(w^k alpha)"""
    w = root_table(m)
    return RootSystem(tuple(scale * cmath.exp(w.power(k) * alpha) for k in range(m)))


@dataclass
class IdentificationReport:
    m: int
    n: int
    alpha: complex
    printed: dict
    reconciled: dict

    def holds(self, tol):
        """name -> (printed ok, reconciled ok)"""
        return {name: (self.printed[name] <= tol, self.reconciled[name] <= tol) for name in self.printed}

    def to_json(self):
        return {
            'm': self.m,
            'n': self.n,
            'alpha': [self.alpha.real, self.alpha.imag],
            'printed': self.printed,
            'reconciled': self.reconciled,
        }


def identify_m3(roots, n):
    """
    ties root functions of positive a, b, c to h_k(n alpha), alpha = 1/3 (ln a + w ln b + w^2 ln c)
    printed forms, A = exp(alpha):
        a_alpha(n) = R^(-n/3) V_n(A, A^w, A^w2) / 3
        c_alpha(n) = R^(-n/3) U_n(A, A^w, A^w2) / 3 h_1(ln A)
        b_alpha(n) = R^(-n/3) W_n(A, A^w, A^w2) / 3 h_2(ln A)
    reconciled forms, rho = R^(1/3), rescaled roots rho A^(w^k) of product R:
        h_0(n alpha) = R^(-n/3) V_n / 3
        h_2(n alpha) = R^(-(n-1)/3) U_n h_2(ln A)
        h_1(n alpha) = R^(-(n-1)/3) W_n h_1(ln A)
    :return: IdentificationReport
    """
    if roots.m != 3:
        raise DimensionError('identify_m3 needs 3 roots')
    _check_positive(roots)
    m = 3
    _, _, r = roots_to_pqr(roots)
    r = r.real
    rho = r ** (1.0 / 3)
    alpha = log_angle(roots)
    a_n = h0(m, n * alpha)
    b_n = eval_h(m, 1, n * alpha)
    c_n = eval_h(m, 2, n * alpha)
    h1_a, h2_a = eval_h(m, 1, alpha), eval_h(m, 2, alpha)

    plain = exponential_roots(m, alpha)
    printed = {
        'a': residual(a_n, r ** (-n / 3) * vuw_direct(plain, 'V', n) / 3),
        'c': residual(c_n, r ** (-n / 3) * vuw_direct(plain, 'U', n) / 3 * h1_a),
        'b': residual(b_n, r ** (-n / 3) * vuw_direct(plain, 'W', n) / 3 * h2_a),
    }
    scaled = exponential_roots(m, alpha, rho)
    reconciled = {
        'a': residual(a_n, r ** (-n / 3) * vuw_direct(scaled, 'V', n) / 3),
        'c': residual(c_n, r ** (-(n - 1) / 3) * vuw_direct(scaled, 'U', n) * h2_a),
        'b': residual(b_n, r ** (-(n - 1) / 3) * vuw_direct(scaled, 'W', n) * h1_a),
    }
    # A^3 = a b^w c^w2 under principal logarithms
    w = root_table(m)
    a, b, c = roots.roots
    a_cubed = a * cmath.exp(w.omega * cmath.log(b)) * cmath.exp(w.power(2) * cmath.log(c))
    printed['A_cubed'] = reconciled['A_cubed'] = residual(cmath.exp(alpha) ** 3, a_cubed)
    logger.debug('identify_m3 roots=%s n=[%d] printed=%s', roots.roots, n, printed)
    return IdentificationReport(m, n, alpha, printed, reconciled)


def identify_m2(a, b, n):
    """
    the two-root analogue, alpha = 1/2 (ln a - ln b), A = exp(alpha), Q = ab
    printed:
        a_alpha(n) = Q^(-n/2) V_n(A, A^w) / 2
        b_alpha(n) = Q^(-n/2) U_n(A, A^w) / 2 h_1(ln A)
    reconciled, sqrt(Q) A = a and sqrt(Q) A^w = b:
        cosh(n alpha) = Q^(-n/2) V_n(a, b) / 2
        sinh(n alpha) = Q^(-(n-1)/2) U_n(a, b) h_1(ln A)
    """
    roots = RootSystem((a, b))
    _check_positive(roots)
    m = 2
    _, q = roots_to_pq(roots)
    q = q.real
    alpha = log_angle(roots)
    cosh_n = h0(m, n * alpha)
    sinh_n = eval_h(m, 1, n * alpha)
    h1_a = eval_h(m, 1, alpha)
    plain = exponential_roots(m, alpha)
    printed = {
        'a': residual(cosh_n, q ** (-n / 2) * vuw_direct(plain, 'V', n) / 2),
        'b': residual(sinh_n, q ** (-n / 2) * vuw_direct(plain, 'U', n) / 2 * h1_a),
    }
    reconciled = {
        'a': residual(cosh_n, q ** (-n / 2) * vuw_direct(roots, 'V', n) / 2),
        'b': residual(sinh_n, q ** (-(n - 1) / 2) * vuw_direct(roots, 'U', n) * h1_a),
    }
    w = root_table(m)
    a_squared = a * cmath.exp(w.omega * cmath.log(b))
    printed['A_squared'] = reconciled['A_squared'] = residual(cmath.exp(alpha) ** 2, a_squared)
    return IdentificationReport(m, n, alpha, printed, reconciled)


def q1_check(a, n):
    """
    for ab = 1: V_n(a, b) = V_n(A, A^w) and U_n(a, b) = U_n(A, A^w)
    :return: dict name -> residual
    """
    if a <= 0 or a == 1:
        raise DomainError('need a > 0, a != 1, got [%s]' % a)
    roots = RootSystem((a, 1.0 / a))
    images = exponential_roots(2, log_angle(roots))
    return {
        'V': residual(vuw_direct(roots, 'V', n), vuw_direct(images, 'V', n)),
        'U': residual(vuw_direct(roots, 'U', n), vuw_direct(images, 'U', n)),
    }


def inequality_witnesses(roots, n=2, tol=1e-9):
    """
    V, U, W at the exponential images A^(w^k) against the same functions at the roots
    :return: dict which -> {'images', 'roots', 'differs'}
    """
    if roots.m != 3:
        raise DimensionError('witnesses are defined for 3 roots')
    _check_positive(roots)
    images = exponential_roots(3, log_angle(roots))
    h_out = {}
    for which in ('V', 'U', 'W'):
        at_images = vuw_direct(images, which, n)
        at_roots = vuw_direct(roots, which, n)
        h_out[which] = {
            'images': at_images,
            'roots': at_roots,
            'differs': residual(at_images, at_roots) > tol,
        }
    return h_out
