# encoding='utf-8'

"""
companion matrices of linear recurrences
    F_{n+m} = sum_k alpha_k F_{n+k}
    A has top row (alpha_{m-1}, ..., alpha_0) and ones on the subdiagonal, so
    (F_{n+m}, ..., F_{n+1}) = A (F_{n+m-1}, ..., F_n), windows newest-first
    Cayley-Hamilton: A^m = sum_k alpha_k A^k
two coefficient modes: exact (Fractions in object arrays) and complex float.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from hypercheb.algebra.polynomial import SparsePoly, determinant
from hypercheb.functions.hyperbolic import h0
from hypercheb.sequences.chebyshev import characteristic_coefficients
from hypercheb.utils.base import DomainError, DimensionError, residual

logger = logging.getLogger(__name__)

SHIFT_CANDIDATES = (-2, -1, 0, 1, 2)


def _is_exact(value):
    return isinstance(value, (int, Fraction, np.integer))


def _coerce(values, exact):
    if exact:
        return tuple(Fraction(v) for v in values)
    return tuple(complex(v) for v in values)


@dataclass(frozen=True)
class RecurrenceSpec:
    alphas: Tuple
    seeds: Tuple
    exact: Optional[bool] = None

    def __post_init__(self):
        if len(self.alphas) < 1:
            raise DimensionError('a recurrence needs order >= 1')
        if len(self.seeds) != len(self.alphas):
            raise DimensionError('[%d] seeds for a recurrence of order [%d]' % (len(self.seeds), len(self.alphas)))
        exact = self.exact
        if exact is None:
            exact = all(_is_exact(v) for v in tuple(self.alphas) + tuple(self.seeds))
        elif exact and not all(_is_exact(v) for v in tuple(self.alphas) + tuple(self.seeds)):
            raise DomainError('exact mode needs integer or rational coefficients and seeds')
        object.__setattr__(self, 'exact', exact)
        object.__setattr__(self, 'alphas', _coerce(self.alphas, exact))
        object.__setattr__(self, 'seeds', _coerce(self.seeds, exact))

    @property
    def order(self):
        return len(self.alphas)

    @property
    def zero(self):
        return Fraction(0) if self.exact else 0j

    @property
    def one(self):
        return Fraction(1) if self.exact else 1 + 0j

    def sequence(self, n_max):
        """F_0..F_{n_max}"""
        l_f = list(self.seeds)
        m = self.order
        while len(l_f) <= n_max:
            l_f.append(sum((self.alphas[k] * l_f[-m + k] for k in range(m)), self.zero))
        return l_f[:n_max + 1]

    def term(self, n):
        """
        F_n for any integer n; negative n runs the recurrence backwards,
        F_n = (F_{n+m} - sum_{k>0} alpha_k F_{n+k}) / alpha_0
        """
        if n >= 0:
            return self.sequence(n)[n]
        if self.alphas[0] == 0:
            raise DomainError('backward extension needs alpha_0 != 0')
        m = self.order
        # window[k] = F_{low + k}
        window = list(self.seeds)
        low = 0
        while low > n:
            tail = sum((self.alphas[k] * window[k - 1] for k in range(1, m)), self.zero)
            window.insert(0, (window[m - 1] - tail) / self.alphas[0])
            window.pop()
            low -= 1
        return window[0]


@dataclass(frozen=True)
class CompanionMatrix:
    spec: RecurrenceSpec
    matrix: np.ndarray

    @property
    def m(self):
        return self.spec.order

    def trace(self):
        return sum((self.matrix[i, i] for i in range(self.m)), self.spec.zero)

    def determinant(self):
        if self.spec.exact:
            # det A = (-1)^m p(0) for p(x) = det(x I - A)
            return (-1) ** self.m * characteristic_polynomial(self).coefficient((0,))
        return complex(np.linalg.det(self.matrix))


def identity(spec):
    m = spec.order
    if spec.exact:
        eye = np.empty((m, m), dtype=object)
        for i in range(m):
            for j in range(m):
                eye[i, j] = Fraction(int(i == j))
        return eye
    return np.eye(m, dtype=complex)


def build_companion(spec):
    m = spec.order
    matrix = identity(spec) * spec.zero if spec.exact else np.zeros((m, m), dtype=complex)
    for j in range(m):
        matrix[0, j] = spec.alphas[m - 1 - j]
    for i in range(1, m):
        matrix[i, i - 1] = spec.one
    return CompanionMatrix(spec, matrix)


def step(spec, state):
    """one application of the companion matrix to a newest-first window"""
    state = tuple(state)
    if len(state) != spec.order:
        raise DimensionError('state has [%d] entries, order is [%d]' % (len(state), spec.order))
    m = spec.order
    newest = sum((spec.alphas[m - 1 - j] * state[j] for j in range(m)), spec.zero)
    return (newest,) + state[:-1]


def power(a, n):
    """A^n by square-and-multiply, exact in rational mode"""
    if n < 0:
        raise DomainError('power needs n >= 0, got [%d]' % n)
    result = identity(a.spec)
    base = a.matrix
    while n:
        if n & 1:
            result = result.dot(base)
        base = base.dot(base)
        n >>= 1
    return result


def initial_window(spec):
    return tuple(reversed(spec.seeds))


def orbit(spec, n_max):
    """windows (F_{n+m-1}, ..., F_n) for n = 0..n_max by repeated steps"""
    l_window = [initial_window(spec)]
    for _ in range(n_max):
        l_window.append(step(spec, l_window[-1]))
    return l_window


def orbit_terms(spec, n_max):
    return [window[-1] for window in orbit(spec, n_max)]


def orbit_check(spec, n_max):
    """worst mismatch between A^n applied to the seed window and the stepped window"""
    a = build_companion(spec)
    seed = np.array(initial_window(spec), dtype=object if spec.exact else complex)
    worst = 0.0
    for n, window in enumerate(orbit(spec, n_max)):
        image = power(a, n).dot(seed)
        worst = max(worst, max(_entry_residual(x, y, spec.exact) for x, y in zip(image, window)))
    return worst


def _entry_residual(x, y, exact):
    if exact:
        return float(abs(x - y))
    return residual(x, y)


def cayley_hamilton_residual(a):
    """max entry of A^m - sum_k alpha_k A^k; exactly 0 in rational mode"""
    spec = a.spec
    acc = power(a, a.m)
    for k in range(a.m):
        acc = acc - spec.alphas[k] * power(a, k)
    if spec.exact:
        return max(abs(x) for x in acc.flat)
    scale = max(1.0, float(np.max(np.abs(power(a, a.m)))))
    return float(np.max(np.abs(acc))) / scale


def principal_minor_sum(a):
    """sum of the principal 2x2 minors, which is -Q for a cubic (P, Q, R) companion"""
    mat = a.matrix
    total = a.spec.zero
    for i in range(a.m):
        for j in range(i + 1, a.m):
            total += mat[i, i] * mat[j, j] - mat[i, j] * mat[j, i]
    return total


def characteristic_polynomial(a):
    """det(x I - A) as an exact polynomial in x"""
    if not a.spec.exact:
        raise DomainError('the symbolic characteristic polynomial needs exact coefficients')
    vars = ('x',)
    x = SparsePoly.variable(vars, 'x')
    l_row = []
    for i in range(a.m):
        row = []
        for j in range(a.m):
            entry = SparsePoly.constant(vars, -a.matrix[i, j])
            row.append(x + entry if i == j else entry)
        l_row.append(row)
    return determinant(l_row)


def expected_characteristic_polynomial(spec):
    """x^m - sum_k alpha_k x^k"""
    vars = ('x',)
    h_term = {(spec.order,): 1}
    for k, alpha in enumerate(spec.alphas):
        h_term[(k,)] = h_term.get((k,), 0) - alpha
    return SparsePoly(vars, h_term)


# printed closed forms, F seeded (0, 1) resp. (0, 1, 1)

def _printed_m2(spec, n):
    q = -spec.alphas[0]
    f = spec.term
    return [[f(n + 2), -q * f(n + 1)],
            [f(n + 1), -q * f(n)]]


def _printed_m3(spec, n):
    r, q, _ = spec.alphas
    f = spec.term
    return [[f(n + 2), q * f(n + 1) + r * f(n), r * f(n + 1)],
            [f(n + 1), q * f(n) + r * f(n - 1), r * f(n)],
            [f(n), q * f(n - 1) + r * f(n - 2), r * f(n - 1)]]


@dataclass
class ClosedFormReport:
    m: int
    n_max: int
    printed_holds: bool
    shift: Optional[int]
    first_failure: dict

    def describe(self):
        if self.printed_holds:
            return 'printed closed form holds for n <= %d' % self.n_max
        if self.shift is None:
            return 'printed closed form fails for every shift in %s' % (SHIFT_CANDIDATES,)
        return 'printed closed form holds for n <= %d after the index shift n -> n%+d' % (self.n_max, self.shift)

    def to_json(self):
        return {
            'm': self.m,
            'n_max': self.n_max,
            'printed_holds': self.printed_holds,
            'shift': self.shift,
            'first_failure': {str(k): v for k, v in self.first_failure.items()},
        }


def closed_form_check(m, spec, n_max):
    """
    compare A^n with the printed closed form evaluated at n + shift, for each candidate shift
    the first shift matching for every 0 <= n <= n_max is reported
    """
    if m not in (2, 3) or spec.order != m:
        raise DimensionError('closed forms exist for m = 2, 3 with a matching spec')
    if spec.alphas[0] == 0:
        raise DomainError('closed forms need alpha_0 != 0 to reach negative indices')
    printed = _printed_m2 if m == 2 else _printed_m3
    a = build_companion(spec)
    h_fail = {}
    for shift in SHIFT_CANDIDATES:
        h_fail[shift] = None
        for n in range(n_max + 1):
            truth = power(a, n)
            guess = printed(spec, n + shift)
            if any(_entry_residual(truth[i, j], guess[i][j], spec.exact) > (0 if spec.exact else 1e-9)
                   for i in range(m) for j in range(m)):
                h_fail[shift] = n
                break
    matching = [s for s in SHIFT_CANDIDATES if h_fail[s] is None]
    shift = min(matching, key=abs) if matching else None
    report = ClosedFormReport(m, n_max, h_fail[0] is None, shift, h_fail)
    logger.info('closed form m=[%d]: %s', m, report.describe())
    return report


def chebyshev_generator(m, alpha):
    """
    the recurrence whose characteristic roots are exp(w^k alpha), seeded with the power sums
    V_j = m h_0(j alpha); alpha_{m-j} = (-1)^(j+1) e_j
    m = 2: alphas (-1, 2x), seeds (2, 2x); m = 3: alphas (1, -3x*, 3x)
    """
    l_e = characteristic_coefficients(m, alpha)
    alphas = [0j] * m
    for j in range(1, m + 1):
        alphas[m - j] = (-1) ** (j + 1) * l_e[j - 1]
    seeds = [m * h0(m, j * complex(alpha)) for j in range(m)]
    return RecurrenceSpec(tuple(alphas), tuple(seeds), exact=False)
