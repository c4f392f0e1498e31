# encoding='utf-8'

"""
exact sparse multivariate polynomials
    a polynomial is a map exponent vector -> coefficient,
    coefficients are python ints or Fractions, so every ring operation is exact.

    SparsePoly(('x', 'y'), {(2, 0): 1, (0, 2): -1}) is x^2 - y^2

the canonical text order is graded: total degree first, then the exponent
partition (pure powers before mixed monomials), then lexicographic.
"""

import itertools
from fractions import Fraction
from numbers import Number

from hypercheb.utils.base import DimensionError


def _is_scalar(value):
    return isinstance(value, (int, Fraction))


class SparsePoly(object):
    __slots__ = ('vars', 'terms')

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        h_term = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.vars):
                raise DimensionError('exponent vector %s does not match vars %s' % (exps, self.vars))
            if min(exps, default=0) < 0:
                raise DimensionError('negative exponent in %s' % (exps,))
            h_term[exps] = h_term.get(exps, 0) + coeff
        self.terms = {exps: coeff for exps, coeff in h_term.items() if coeff != 0}

    @classmethod
    def constant(cls, vars, value):
        return cls(vars, {(0,) * len(vars): value})

    @classmethod
    def variable(cls, vars, name, power=1):
        vars = tuple(vars)
        exps = [0] * len(vars)
        exps[vars.index(name)] = power
        return cls(vars, {tuple(exps): 1})

    @classmethod
    def variables(cls, vars):
        return [cls.variable(vars, name) for name in vars]

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            if other.vars != self.vars:
                raise DimensionError('variable mismatch %s vs %s' % (self.vars, other.vars))
            return other
        if _is_scalar(other):
            return SparsePoly.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        h_term = dict(self.terms)
        for exps, coeff in other.terms.items():
            h_term[exps] = h_term.get(exps, 0) + coeff
        return SparsePoly(self.vars, h_term)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.vars, {exps: -coeff for exps, coeff in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        h_term = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                h_term[exps] = h_term.get(exps, 0) + c1 * c2
        return SparsePoly(self.vars, h_term)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DimensionError('only nonnegative integer powers, got [%s]' % n)
        result = SparsePoly.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if _is_scalar(other):
            other = SparsePoly.constant(self.vars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return 'SparsePoly(%r, %r)' % (self.vars, self.terms)

    def __str__(self):
        return self.to_text()

    @property
    def degree(self):
        return max((sum(exps) for exps in self.terms), default=0)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def is_integral(self):
        return all(isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1)
                   for c in self.terms.values())

    def evaluate(self, point):
        """
        evaluate at a point
        :param point: one value per variable; ints/Fractions stay exact, floats/complex go numeric
        :return: the value
        """
        point = list(point)
        if len(point) != len(self.vars):
            raise DimensionError('point has [%d] components, poly has [%d] vars' % (len(point), len(self.vars)))
        exact = all(_is_scalar(p) for p in point)
        total = 0
        for exps, coeff in self.terms.items():
            term = coeff if exact else complex(coeff)
            for p, e in zip(point, exps):
                if e:
                    term = term * p ** e
            total = total + term
        return total

    def substitute(self, l_poly):
        """
        compose: replace variable i by the polynomial l_poly[i] (all over one common var set)
        """
        if len(l_poly) != len(self.vars):
            raise DimensionError('need [%d] substitutions' % len(self.vars))
        out_vars = l_poly[0].vars
        result = SparsePoly(out_vars)
        for exps, coeff in self.terms.items():
            term = SparsePoly.constant(out_vars, coeff)
            for poly, e in zip(l_poly, exps):
                if e:
                    term = term * poly ** e
            result = result + term
        return result

    def rename(self, perm, vars=None):
        """
        send old variable i to new variable perm[i]
        :param perm: a permutation of range(len(vars))
        :param vars: names of the new variable set, default unchanged
        """
        h_term = {}
        for exps, coeff in self.terms.items():
            new_exps = [0] * len(self.vars)
            for i, e in enumerate(exps):
                new_exps[perm[i]] += e
            h_term[tuple(new_exps)] = coeff
        return SparsePoly(vars or self.vars, h_term)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: monomial_key(item[0]))

    def to_text(self, names=None):
        """
        canonical text, e.g. `x^3 + y^3 + z^3 - 3*x*y*z`
        :param names: display names, default self.vars
        """
        names = names or self.vars
        if not self.terms:
            return '0'
        l_piece = []
        for p, (exps, coeff) in enumerate(self.sorted_terms()):
            sign = '-' if coeff < 0 else '+'
            mag = -coeff if coeff < 0 else coeff
            l_factor = []
            for name, e in zip(names, exps):
                if e == 1:
                    l_factor.append(name)
                elif e > 1:
                    l_factor.append('%s^%d' % (name, e))
            if mag != 1 or not l_factor:
                l_factor.insert(0, str(mag))
            body = '*'.join(l_factor)
            if p == 0:
                l_piece.append(body if sign == '+' else '-' + body)
            else:
                l_piece.append('%s %s' % (sign, body))
        return ' '.join(l_piece)

    def to_json(self, names=None):
        names = names or self.vars
        return {
            'vars': list(names),
            'terms': [[list(exps), str(coeff)] for exps, coeff in self.sorted_terms()],
        }


def monomial_key(exps):
    return (-sum(exps),
            tuple(-e for e in sorted(exps, reverse=True)),
            tuple(-e for e in exps))


def permutation_sign(perm):
    inversions = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def determinant(matrix):
    """
    Leibniz expansion of a square matrix with SparsePoly (or exact scalar) entries
    :param matrix: list of rows
    :return: SparsePoly
    """
    m = len(matrix)
    if any(len(row) != m for row in matrix):
        raise DimensionError('matrix is not square')
    vars = next(e.vars for row in matrix for e in row if isinstance(e, SparsePoly))
    total = SparsePoly(vars)
    for perm in itertools.permutations(range(m)):
        term = SparsePoly.constant(vars, permutation_sign(perm))
        for i, j in enumerate(perm):
            entry = matrix[i][j]
            if isinstance(entry, Number) and entry == 0:
                term = None
                break
            term = term * entry
            if not term:
                break
        if term:
            total = total + term
    return total
