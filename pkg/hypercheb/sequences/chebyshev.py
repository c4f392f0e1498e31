# encoding='utf-8'

"""
Tchebysheff m-polynomial systems
    T_nu(x) = h_0(nu alpha) with x = h_0(alpha), nu running over the streams n + w^s
    recurrence: m x T_n = sum_s T_{n + w^s}
    Binet form: T_n = 1/m sum_k exp(w^k alpha)^n
    m = 3 generating functions in the constrained variables
        x = h_0(alpha), x* = h_0(-alpha), x** = h_0((2 + w) alpha)
    exact monomial expansions of the kinds 0, 1, 2 on the m = 3 hyperbolon
and the classical m = 2 polynomials T_n, U_n they generalize.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from hypercheb.algebra.polynomial import SparsePoly
from hypercheb.algebra.spectral import root_table, check_order, check_residue
from hypercheb.functions.demoivre import CirculantMatrix
from hypercheb.functions.hyperbolic import eval_h, eval_point, h0
from hypercheb.utils.base import DomainError, RangeError, residual, scaled_residual
from hypercheb.utils.base_conf import MAX_EXP_ARG

logger = logging.getLogger(__name__)

GF_VARS = ('x', 'x*', 'x**')
EXPANSION_VARS = ('x', 'y', 'z')
# grade g with expand_poly(kind, n)(h_0, h_1, h_2) = h_g(n alpha); kind 1 and 2 swap grades
KIND_GRADE = {0: 0, 1: 2, 2: 1}


# classical m = 2 polynomials

def classical_T(n, x):
    """T_{n+1} = 2x T_n - T_{n-1}, T_0 = 1, T_1 = x"""
    if n < 0:
        raise DomainError('n must be >= 0, got [%d]' % n)
    prev, cur = 1.0, x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def classical_U(n, x):
    """
    U_n = sinh(n alpha) / sinh(alpha) with cosh(alpha) = x, so U_0 = 0, U_1 = 1, U_2 = 2x
    same three-term recurrence as T
    """
    if n < 0:
        raise DomainError('n must be >= 0, got [%d]' % n)
    prev, cur = 0.0, 1.0
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def _ab(n, x):
    """a_x(n), b_x(n) for any integer n via the parity rules"""
    root = math.sqrt(x * x - 1)
    a = classical_T(abs(n), x)
    b = root * classical_U(abs(n), x)
    return a, (b if n >= 0 else -b)


def m2_group_element(x, n):
    """M_x(n) = [[a_x(n), b_x(n)], [b_x(n), a_x(n)]] as a 2x2 circulant"""
    if x < 1:
        raise DomainError('the real de Moivre group needs x >= 1, got [%s]' % x)
    a, b = _ab(n, x)
    return CirculantMatrix(2, (complex(a), complex(b)))


def classical_identities_check(n, m, x, r=2):
    """
    residuals of the m = 2 identities at cosh(alpha) = x
        composition  [T_n + sqrt(x^2-1) U_n]^r = T_nr + sqrt(x^2-1) U_nr
        addition     a(n+m) = a(n) a(m) + b(n) b(m)
        subtraction  a(n-m) = a(n) a(m) - b(n) b(m)
        parity       a(-n) = a(n), b(-n) = -b(n)
        volume       a(n)^2 - b(n)^2 = 1
    subtraction and volume cancel terms of size a(n)^2, residuals are scaled by them
    :param n, m: nonnegative integer indices (m is the second index, not an order)
    :param x: x >= 1
    :return: dict name -> residual
    """
    if x < 1:
        raise DomainError('x must be >= 1 for the real branch, got [%s]' % x)
    if n < 0 or m < 0 or r < 1:
        raise DomainError('need n, m >= 0 and r >= 1')
    root = math.sqrt(x * x - 1)
    a_n, b_n = _ab(n, x)
    a_m, b_m = _ab(m, x)
    a_neg, b_neg = _ab(-n, x)
    a_sum, _ = _ab(n + m, x)
    a_diff, _ = _ab(n - m, x)
    h_res = {
        'composition': residual((classical_T(n, x) + root * classical_U(n, x)) ** r,
                                classical_T(n * r, x) + root * classical_U(n * r, x)),
        'addition': residual(a_sum, a_n * a_m + b_n * b_m),
        'subtraction': scaled_residual(a_diff, a_n * a_m - b_n * b_m, abs(a_n * a_m) + abs(b_n * b_m)),
        'parity_a': residual(a_neg, a_n),
        'parity_b': residual(b_neg, -b_n),
        'volume': scaled_residual(a_n * a_n - b_n * b_n, 1.0, a_n * a_n + b_n * b_n),
    }
    return h_res


# streams

@dataclass(frozen=True)
class StreamIndex:
    n: int
    s: int
    m: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError('stream position must be >= 0, got [%d]' % self.n)
        check_residue(self.s, self.m, 's')

    @property
    def value(self):
        """nu = n + w^s"""
        return self.n + complex(root_table(self.m).powers[self.s])


def stream_eval(m, alpha, idx):
    """T_nu(x) = h_0(nu alpha)"""
    check_order(m)
    if idx.m != m:
        raise DomainError('index built for m=[%d], evaluated at m=[%d]' % (idx.m, m))
    return h0(m, idx.value * complex(alpha))


def characteristic_coefficients(m, alpha):
    """
    elementary symmetric functions e_1..e_m of the characteristic roots exp(w^k alpha)
    each e_j = sum over j-subsets S of h_0(sigma_S alpha), sigma_S = sum_{k in S} w^k,
    so for m = 3: (3x, 3x*, 1)
    """
    check_order(m)
    w = root_table(m)
    l_e = []
    for j in range(1, m + 1):
        total = 0j
        for subset in itertools.combinations(range(m), j):
            sigma = complex(sum(w.powers[k] for k in subset))
            total += h0(m, sigma * complex(alpha))
        l_e.append(total)
    return tuple(l_e)


@dataclass
class StreamSequence:
    m: int
    alpha: complex
    main: List[complex]
    values: Dict[Tuple[int, int], complex]
    x: complex
    xstar: complex
    xstarstar: complex
    char: Tuple[complex, ...] = field(default=())

    @property
    def n_max(self):
        return len(self.main) - 1

    def get(self, n, s):
        """T_{n + w^s}; s = 0 is the main stream shifted by one"""
        if s == 0:
            return self.main[n + 1]
        return self.values[(n, s)]

    def stream(self, s):
        """main stream T_0.. for s = 0, aside stream T_{n + w^s} otherwise"""
        if s == 0:
            return list(self.main)
        return [self.values[(n, s)] for n in range(self.n_max + 1)]


def constrained_variables(m, alpha):
    w = root_table(m)
    alpha = complex(alpha)
    return h0(m, alpha), h0(m, -alpha), h0(m, (2 + complex(w.omega)) * alpha)


def recurrence_eval(m, alpha, n_max):
    """
    advance every stream to n_max from seed values only
        aside streams: seeds T_{j + w^s}, j < m, then the characteristic recurrence
            F_{n+m} = sum_{j=1..m} (-1)^(j+1) e_j F_{n+m-j}
        main stream: T_0 = 1, then T_{n+1} = m x T_n - sum_{s>0} T_{n + w^s}
    """
    check_order(m)
    if n_max < 2:
        raise DomainError('n_max must be >= 2, got [%d]' % n_max)
    alpha = complex(alpha)
    x, xstar, xstarstar = constrained_variables(m, alpha)
    l_char = characteristic_coefficients(m, alpha)
    h_value = {}
    for s in range(1, m):
        l_f = [stream_eval(m, alpha, StreamIndex(j, s, m)) for j in range(m)]
        while len(l_f) <= n_max:
            l_f.append(sum((-1) ** j * l_char[j] * l_f[-1 - j] for j in range(m)))
        for n in range(n_max + 1):
            h_value[(n, s)] = l_f[n]
    l_main = [1.0 + 0j]
    for n in range(n_max):
        l_main.append(m * x * l_main[n] - sum(h_value[(n, s)] for s in range(1, m)))
    for n in range(n_max):
        h_value[(n, 0)] = l_main[n + 1]
    logger.debug('recurrence_eval m=[%d] alpha=[%s] advanced to [%d]', m, alpha, n_max)
    return StreamSequence(m, alpha, l_main, h_value, x, xstar, xstarstar, l_char)


def binet_eval(m, alpha, n):
    """1/m sum_k (exp(w^k alpha))^n"""
    check_order(m)
    if n < 0:
        raise DomainError('n must be >= 0, got [%d]' % n)
    w = root_table(m)
    args = w.powers * complex(alpha)
    if n * float(np.max(np.abs(args.real))) > MAX_EXP_ARG:
        raise RangeError('binet power n=[%d] overflows at alpha=[%s]' % (n, alpha))
    return complex(np.sum(np.power(np.exp(args), n)) / m)


def root_magnitude(m, alpha):
    """largest |exp(w^k alpha)|, the growth rate of every stream"""
    w = root_table(m)
    return float(np.exp(np.max((w.powers * complex(alpha)).real)))


def three_way_check(m, alpha, n_max):
    """
    worst residual among stream_eval, recurrence_eval and binet_eval,
    aside streams against stream_eval; scaled by the size of the summed root powers
    """
    seq = recurrence_eval(m, alpha, n_max)
    growth = root_magnitude(m, alpha)
    worst = 0.0
    for n in range(n_max + 1):
        scale = growth ** (n + 1)
        direct = stream_eval(m, alpha, StreamIndex(n - 1, 0, m)) if n else 1.0
        worst = max(worst, scaled_residual(seq.main[n], direct, scale),
                    scaled_residual(binet_eval(m, alpha, n), direct, scale))
        for s in range(1, m):
            target = stream_eval(m, alpha, StreamIndex(n, s, m))
            worst = max(worst, scaled_residual(seq.get(n, s), target, scale))
    return worst


def general_k_check(m, alpha, n, k, grade=0):
    """
    k-step rule on the circulant entries f(nu) = h_g(nu alpha):
        f(n + k) = m h_0(k alpha) f(n) - sum_{s>0} f(n + k w^s)
    """
    check_order(m)
    check_residue(grade, m, 'grade')
    w = root_table(m)
    alpha = complex(alpha)
    lhs = eval_h(m, grade, (n + k) * alpha)
    rhs = m * h0(m, k * alpha) * eval_h(m, grade, n * alpha)
    rhs -= sum(eval_h(m, grade, (n + k * complex(w.powers[s])) * alpha) for s in range(1, m))
    return residual(lhs, rhs)


def identity_list_check(alpha):
    """
    the m = 3 identifications: T_w = T_w2 = x, T_{1+w} = T_{1+w2} = x*,
    T_{2+w} = x**, T_{2+w} + T_{2+w2} = 3 x x* - 1
    """
    m = 3
    x, xstar, xstarstar = constrained_variables(m, alpha)

    def t(n, s):
        return stream_eval(m, alpha, StreamIndex(n, s, m))

    return {
        'T_w': residual(t(0, 1), x),
        'T_w2': residual(t(0, 2), x),
        'T_1+w': residual(t(1, 1), xstar),
        'T_1+w2': residual(t(1, 2), xstar),
        'T_2+w': residual(t(2, 1), xstarstar),
        'T_2+w+T_2+w2': residual(t(2, 1) + t(2, 2), 3 * x * xstar - 1),
    }


# generating functions

@dataclass
class RationalGF:
    """
    N(z) / D(z), coefficients of each power of z are polynomials in (x, x*, x**);
    D(0) = 1 so long division is exact over the integers
    """
    stream: int
    numerator: List[SparsePoly]
    denominator: List[SparsePoly]
    point: Optional[Tuple[complex, complex, complex]] = None

    def __post_init__(self):
        if self.denominator[0] != 1:
            raise DomainError('denominator constant term must be 1')

    def series(self, n_terms):
        """long division: c_n = N_n - sum_{j>0} D_j c_{n-j}"""
        zero = SparsePoly(GF_VARS)
        l_c = []
        for n in range(n_terms):
            c = self.numerator[n] if n < len(self.numerator) else zero
            for j in range(1, min(n, len(self.denominator) - 1) + 1):
                c = c - self.denominator[j] * l_c[n - j]
            l_c.append(c)
        return l_c

    def numeric_series(self, n_terms):
        if self.point is None:
            raise DomainError('no (x, x*, x**) values attached to this generating function')
        return [c.evaluate(self.point) for c in self.series(n_terms)]

    def denominator_at(self, z):
        if self.point is None:
            raise DomainError('no (x, x*, x**) values attached to this generating function')
        return sum(d.evaluate(self.point) * z ** j for j, d in enumerate(self.denominator))

    def to_json(self, n_terms=0):
        h_doc = {
            'stream': self.stream,
            'vars': list(GF_VARS),
            'numerator': [p.to_text() for p in self.numerator],
            'denominator': [p.to_text() for p in self.denominator],
        }
        if n_terms:
            h_doc['series'] = [p.to_text() for p in self.series(n_terms)]
            if self.point is not None:
                h_doc['values'] = [[v.real, v.imag] for v in self.numeric_series(n_terms)]
        return h_doc


def genfun(m, alpha, stream):
    """
    ordinary generating function of a stream, m = 3 only
    :param alpha: None for the purely symbolic form
    :param stream: 0 main, 1 and 2 the aside streams
    """
    if m != 3:
        raise DomainError('closed-form generating functions exist for m=3 only, got [%s]' % m)
    check_residue(stream, 3, 'stream')
    x, xs, xss = SparsePoly.variables(GF_VARS)
    one = SparsePoly.constant(GF_VARS, 1)
    denominator = [one, -3 * x, 3 * xs, -one]
    if stream == 0:
        numerator = [one, -2 * x, xs]
    elif stream == 1:
        numerator = [x, -(3 * x * x - xs), xss]
    else:
        numerator = [x, -(3 * x * x - xs), 3 * x * xs - xss - 1]
    point = None if alpha is None else constrained_variables(m, alpha)
    return RationalGF(stream, numerator, denominator, point)


def genfun_check(alpha, stream, n_terms=12):
    """
    long-division coefficients of genfun at alpha against recurrence_eval values of the stream
    """
    seq = recurrence_eval(3, alpha, max(n_terms - 1, 2))
    growth = root_magnitude(3, alpha)
    l_value = genfun(3, alpha, stream).numeric_series(n_terms)
    l_target = seq.stream(stream)
    return max(scaled_residual(v, t, growth ** (n + 1)) for n, (v, t) in enumerate(zip(l_value, l_target)))


def symbolic_main_stream(n_max):
    """
    T_0..T_{n_max} of the m = 3 main stream as exact polynomials in (x, x*, x**),
    from Newton's identities for the power sums p_n = 3 T_n of roots with
    e_1 = 3x, e_2 = 3x*, e_3 = 1
    """
    x, xs, _ = SparsePoly.variables(GF_VARS)
    e1, e2, e3 = 3 * x, 3 * xs, SparsePoly.constant(GF_VARS, 1)
    l_p = [SparsePoly.constant(GF_VARS, 3)]
    if n_max >= 1:
        l_p.append(e1)
    if n_max >= 2:
        l_p.append(e1 * l_p[1] - 2 * e2)
    if n_max >= 3:
        l_p.append(e1 * l_p[2] - e2 * l_p[1] + 3 * e3)
    for n in range(4, n_max + 1):
        l_p.append(e1 * l_p[n - 1] - e2 * l_p[n - 2] + e3 * l_p[n - 3])

    return [p * Fraction(1, 3) for p in l_p]


# selectors and expansions

def delta_selector(i, k, m=3, method='congruence'):
    """
    1 if i = k (mod 3) else 0
    :param method: 'congruence', or 'omega' for 1/3 (1 + w^(k+2i) + w^(i+2k))
    """
    if m != 3:
        raise DomainError('the selector is defined for m=3, got [%s]' % m)
    if i < 0 or k < 0:
        raise DomainError('selector indices must be >= 0')
    if method == 'congruence':
        return 1 if (i - k) % 3 == 0 else 0
    w = root_table(3)
    value = (1 + w.power(k + 2 * i) + w.power(i + 2 * k)) / 3
    rounded = int(round(value.real))
    if abs(value - rounded) > 1e-12:
        raise DomainError('omega sum [%s] is not a 0/1 value' % value)
    return rounded


def kind_selector(kind, i, k):
    if kind == 0:
        return delta_selector(i, k)
    if kind == 1:
        return delta_selector(i + 1, k)
    if kind == 2:
        return delta_selector(i, k + 1)
    raise DomainError('kind must be 0, 1 or 2, got [%s]' % kind)


def expand_poly(kind, n):
    """
    sum_k sum_i C(n,k) C(n-k,i) selector(i,k) x^(n-k-i) y^i z^k, exact integers
    """
    if n < 0:
        raise DomainError('n must be >= 0, got [%d]' % n)
    h_term = {}
    for k in range(n + 1):
        for i in range(n - k + 1):
            if kind_selector(kind, i, k):
                h_term[(n - k - i, i, k)] = math.comb(n, k) * math.comb(n - k, i)
    return SparsePoly(EXPANSION_VARS, h_term)


def expand_poly_m2(n):
    """sum_k C(n, 2k) x^(n-2k) y^(2k): cosh(n alpha) in x = cosh, y = sinh"""
    if n < 0:
        raise DomainError('n must be >= 0, got [%d]' % n)
    return SparsePoly(('x', 'y'), {(n - 2 * k, 2 * k): math.comb(n, 2 * k) for k in range(n // 2 + 1)})


def eval_expansion_on_surface(kind, n, alpha, grade=None):
    """
    |expand_poly(kind, n)(h_0, h_1, h_2)(alpha) - h_g(n alpha)|
    :param grade: defaults to KIND_GRADE[kind]
    """
    grade = KIND_GRADE[kind] if grade is None else grade
    point = eval_point(3, alpha)
    value = expand_poly(kind, n).evaluate(point.h)
    scale = sum(abs(h) for h in point.h) ** n
    return scaled_residual(value, eval_h(3, grade, n * complex(alpha)), scale)


def find_kind_grade(kind, l_alpha, n_max=6, tol=1e-9):
    """
    grades g for which the kind's expansion reproduces h_g(n alpha) for all n <= n_max and all alphas
    """
    l_grade = []
    for grade in range(3):
        worst = max(eval_expansion_on_surface(kind, n, alpha, grade)
                    for n in range(1, n_max + 1) for alpha in l_alpha)
        if worst <= tol:
            l_grade.append(grade)
    logger.info('kind [%d] matches grades %s', kind, l_grade)
    return l_grade


def m2_expansion_check(n, alpha):
    point = eval_point(2, alpha)
    scale = sum(abs(h) for h in point.h) ** n
    return scaled_residual(expand_poly_m2(n).evaluate(point.h), h0(2, n * complex(alpha)), scale)
