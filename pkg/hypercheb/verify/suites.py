# encoding='utf-8'

"""
one suite per module, each case records a residual
    exact checks record 0 on success and 1 on failure
"""

import logging
import math
from fractions import Fraction

from traitlets import Int, Float

from hypercheb.algebra.polynomial import SparsePoly
from hypercheb.algebra.spectral import (
    root_table,
    apply_omega,
    project_delta,
    project_delta_omega_sum,
    hyperbolic_series,
    exp_series,
    TruncatedSeries,
)
from hypercheb.functions.hyperbolic import (
    convolution_check,
    product_identity_check,
    grading_check,
    derivative_check,
    series_agreement,
    exponential_form_check,
)
from hypercheb.functions.demoivre import (
    CirculantMatrix,
    demoivre_matrix,
    group_law_check,
    volume_check,
    eigen_determinant_check,
    hyperbolon_invariant,
    reconcile_printed_quartic,
    variable_names,
)
from hypercheb.sequences.chebyshev import (
    KIND_GRADE,
    three_way_check,
    genfun,
    genfun_check,
    symbolic_main_stream,
    general_k_check,
    identity_list_check,
    eval_expansion_on_surface,
    m2_expansion_check,
    classical_identities_check,
    delta_selector,
    kind_selector,
    find_kind_grade,
    root_magnitude,
    binet_eval,
)
from hypercheb.sequences.lucas import (
    RootSystem,
    CubicRoots,
    vuw_direct,
    sequence_agreement,
    identify_m3,
    lucas_formulae_m2,
    q1_check,
    inequality_witnesses,
)
from hypercheb.sequences.companion import (
    RecurrenceSpec,
    build_companion,
    power,
    orbit_check,
    orbit_terms,
    cayley_hamilton_residual,
    characteristic_polynomial,
    expected_characteristic_polynomial,
    principal_minor_sum,
    closed_form_check,
    chebyshev_generator,
)
from hypercheb.utils.base import residual, scaled_residual
from hypercheb.verify.base import BaseSuite

logger = logging.getLogger(__name__)

FD_TOL = 1e-5


def exact(flag):
    return 0.0 if flag else 1.0


def _p(**kwargs):
    """case parameters as plain json values"""
    h = {}
    for key, value in kwargs.items():
        if isinstance(value, complex):
            h[key] = [value.real, value.imag]
        elif isinstance(value, Fraction):
            h[key] = str(value)
        elif isinstance(value, (list, tuple)):
            h[key] = [str(v) if isinstance(v, Fraction) else
                      ([v.real, v.imag] if isinstance(v, complex) else v) for v in value]
        else:
            h[key] = value
    return h


class SpectralSuite(BaseSuite):
    name = 'spectral'
    n_cases = Int(50, help="random series drawn").tag(config=True)

    def cases(self):
        g = self.generator
        for c in range(self.n_cases):
            m = g.order([2, 3, 4, 5])
            w = root_table(m)
            f = g.series()
            k, j = g.residue(m), g.residue(m)
            fk = project_delta(f, w, k)
            zero = TruncatedSeries([0.0] * fk.coeffs.size)
            params = _p(m=m, k=k, j=j, order=f.order)
            self.record('orthogonality.%03d' % c, params,
                        lambda: project_delta(fk, w, j).gap(fk if j == k else zero))
            total = zero
            for kk in range(m):
                total = total + project_delta(f, w, kk)
            self.record('completeness.%03d' % c, params, total.gap, f)
            self.record('eigenfunction.%03d' % c, params,
                        lambda: apply_omega(fk, w, 1).gap(fk.scale(w.power(k))))
            self.record('omega_sum.%03d' % c, params,
                        lambda: project_delta_omega_sum(f, w, k).gap(fk))
        for m in range(2, 6):
            total = hyperbolic_series(m, 0)
            for k in range(1, m):
                total = total + hyperbolic_series(m, k)
            self.record('hyperbolic_partition.m%d' % m, _p(m=m), total.gap, exp_series())
            w = root_table(m)
            self.record('character_sums.m%d' % m, _p(m=m),
                        lambda: max(residual(w.character_sum(k), m if k % m == 0 else 0) for k in range(2 * m)))


class HyperbolicSuite(BaseSuite):
    name = 'hyperbolic'
    n_cases = Int(200, help="random (m, alpha, beta) draws").tag(config=True)
    alpha_box = Float(3.0, help="bound on |alpha| and |beta|").tag(config=True)

    def cases(self):
        g = self.generator
        for c in range(self.n_cases):
            m = g.order()
            alpha, beta = g.alpha(box=self.alpha_box), g.alpha(box=self.alpha_box)
            k = g.residue(m)
            params = _p(m=m, k=k, alpha=alpha, beta=beta)
            self.record('convolution.%03d' % c, params, convolution_check, m, alpha, beta, k)
            self.record('product_identity.%03d' % c, params, product_identity_check, m, alpha, beta)
            self.record('grading.%03d' % c, params, grading_check, m, k, alpha)
            self.record('derivative.%03d' % c, params, derivative_check, m, k, alpha, tol=FD_TOL)
            self.record('series_agreement.%03d' % c, params, series_agreement, m, k, alpha)
            self.record('exponential_form.%03d' % c, params, exponential_form_check, m, alpha)


class DemoivreSuite(BaseSuite):
    name = 'demoivre'
    n_cases = Int(100, help="random (m, alpha, beta) draws").tag(config=True)
    alpha_box = Float(3.0, help="bound on |alpha| and |beta|").tag(config=True)

    def cases(self):
        g = self.generator
        for c in range(self.n_cases):
            m = g.order()
            alpha, beta = g.alpha(box=self.alpha_box), g.alpha(box=self.alpha_box)
            n = g.index(0, 5)
            params = _p(m=m, n=n, alpha=alpha, beta=beta)
            self.record('group_law.%03d' % c, params, group_law_check, m, alpha, beta)
            self.record('volume.%03d' % c, params, volume_check, m, alpha)
            self.record('eigen_determinant.%03d' % c, params, eigen_determinant_check, m, alpha)
            self.record('inverse.%03d' % c, params,
                        lambda: (demoivre_matrix(m, alpha, -1) @ demoivre_matrix(m, alpha))
                        .max_residual(CirculantMatrix.identity(m)))
            self.record('power.%03d' % c, params,
                        lambda: demoivre_matrix(m, alpha).power(n).max_residual(demoivre_matrix(m, alpha, n)))
        self.record('invariant_text.m2', _p(m=2),
                    lambda: exact(hyperbolon_invariant(2).to_text(variable_names(2)) == 'x^2 - y^2'))
        self.record('invariant_text.m3', _p(m=3),
                    lambda: exact(hyperbolon_invariant(3).to_text(variable_names(3)) == 'x^3 + y^3 + z^3 - 3*x*y*z'))
        self.record('invariant_factor.m4', _p(m=4), self._quartic_factorization)
        self.record('printed_quartic', _p(m=4), lambda: exact(len(reconcile_printed_quartic()) > 0))

    @staticmethod
    def _quartic_factorization():
        names = variable_names(4)
        x, y, z, t = SparsePoly.variables(names)
        product = (x + y + z + t) * (x - y + z - t) * ((x - z) ** 2 + (y - t) ** 2)
        inv = hyperbolon_invariant(4)
        return exact(SparsePoly(names, inv.terms) == product)


class ChebyshevSuite(BaseSuite):
    name = 'chebyshev'
    n_cases = Int(50, help="random alpha draws").tag(config=True)
    n_max = Int(12, help="stream length of the three-way check").tag(config=True)

    def cases(self):
        g = self.generator
        for c in range(self.n_cases):
            alpha = g.alpha()
            params = _p(m=3, alpha=alpha, n_max=self.n_max)
            self.record('three_way.%03d' % c, params, three_way_check, 3, alpha, self.n_max)
            for stream in range(3):
                self.record('genfun_s%d.%03d' % (stream, c), _p(alpha=alpha, stream=stream),
                            genfun_check, alpha, stream)
            n, k, grade = g.index(0, 4), g.index(1, 4), g.residue(3)
            self.record('general_k.%03d' % c, _p(alpha=alpha, n=n, k=k, grade=grade),
                        general_k_check, 3, alpha, n, k, grade)
            kind, n = g.residue(3), g.index(0, 10)
            self.record('expansion.%03d' % c, _p(alpha=alpha, kind=kind, n=n),
                        eval_expansion_on_surface, kind, n, alpha)
            self.record('expansion_m2.%03d' % c, _p(alpha=alpha, n=n), m2_expansion_check, n, alpha)
            self.record('identity_list.%03d' % c, _p(alpha=alpha),
                        lambda: max(identity_list_check(alpha).values()))
            x = 1.0 + abs(g.alpha(real=True))
            n, n2 = g.index(0, 6), g.index(0, 6)
            self.record('classical.%03d' % c, _p(n=n, m=n2, x=x),
                        lambda: max(classical_identities_check(n, n2, x).values()))
        for m in (2, 4, 5):
            alpha = complex(0.9, -0.3)
            self.record('three_way_m%d' % m, _p(m=m, alpha=alpha, n_max=self.n_max),
                        three_way_check, m, alpha, self.n_max)
        self.record('symbolic_main_stream', _p(n_terms=12),
                    lambda: exact(all(a == b for a, b in zip(symbolic_main_stream(11), genfun(3, None, 0).series(12)))))
        self.record('selector_paths', _p(limit=30), self._selector_paths)
        self.record('selector_partition', _p(limit=30), self._selector_partition)
        l_alpha = [0.7, complex(-0.4, 0.9), complex(1.1, -0.6)]
        for kind, grade in sorted(KIND_GRADE.items()):
            self.record('kind_grade.k%d' % kind, _p(kind=kind, grade=grade),
                        lambda: exact(find_kind_grade(kind, l_alpha) == [grade]))
        alpha = 0.7
        self.record('genfun_pole', _p(alpha=alpha),
                    lambda: residual(genfun(3, alpha, 0).denominator_at(math.exp(-alpha)), 0.0))

    @staticmethod
    def _selector_paths():
        return exact(all(delta_selector(i, k) == delta_selector(i, k, method='omega')
                         for i in range(30) for k in range(30)))

    @staticmethod
    def _selector_partition():
        return exact(all(sum(kind_selector(kind, i, k) for kind in range(3)) == 1
                         for i in range(30) for k in range(30)))


class LucasSuite(BaseSuite):
    name = 'lucas'
    n_cases = Int(30, help="random complex root triples").tag(config=True)
    n_positive = Int(20, help="random positive root triples for the identification").tag(config=True)
    n_max = Int(15, help="length of the direct/recurrent comparison").tag(config=True)

    def cases(self):
        g = self.generator
        for c in range(self.n_cases):
            roots = CubicRoots(g.complex_roots(3))
            params = _p(roots=roots.roots)
            for which in ('V', 'U', 'W'):
                self.record('agreement_%s.%03d' % (which, c), params, sequence_agreement, roots, which, self.n_max)
            n = g.index(0, 10)
            self.record('cyclic_U.%03d' % c, _p(roots=roots.roots, n=n),
                        lambda: residual(vuw_direct(roots, 'U', n), vuw_direct(roots.cyclic_shift(), 'U', n)))
            self.record('symmetric_V.%03d' % c, _p(roots=roots.roots, n=n),
                        lambda: residual(vuw_direct(roots, 'V', n),
                                         vuw_direct(RootSystem((roots.b, roots.a, roots.c)), 'V', n)))
            self.record('characteristic.%03d' % c, params, roots.characteristic_residual)
        for c in range(self.n_positive):
            n = g.index(0, 10)
            positive = CubicRoots(g.positive_roots(3))
            self.record('identify_m3.%03d' % c, _p(roots=positive.roots, n=n),
                        lambda: max(identify_m3(positive, n).reconciled.values()))
            a, b = g.positive_roots(2)
            self.record('lucas_m2.%03d' % c, _p(a=a, b=b, n=n), lambda: max(lucas_formulae_m2(a, b, n).values()))
            self.record('q1.%03d' % c, _p(a=a, n=n), lambda: max(q1_check(a, n).values()))
            # the printed identification holds as is when R = 1
            unit = CubicRoots((a, b, 1.0 / (a * b)))
            self.record('identify_m3_unit_R.%03d' % c, _p(roots=unit.roots, n=n),
                        lambda: identify_m3(unit, n).printed['a'])
        h_w = inequality_witnesses(CubicRoots((1.0, 2.0, 4.0)), 2)
        self.record('witnesses', _p(roots=[1.0, 2.0, 4.0], n=2), lambda: exact(all(v['differs'] for v in h_w.values())))


class CompanionSuite(BaseSuite):
    name = 'companion'
    n_cases = Int(10, help="random rational recurrences").tag(config=True)

    def cases(self):
        g = self.generator
        for c in range(self.n_cases):
            m = g.index(1, 5)
            alphas, seeds = g.rational_spec(m)
            spec = RecurrenceSpec(tuple(alphas), tuple(seeds))
            a = build_companion(spec)
            params = _p(alphas=alphas, seeds=seeds)
            self.record('cayley_hamilton.%03d' % c, params, lambda: float(cayley_hamilton_residual(a)))
            self.record('orbit.%03d' % c, params, orbit_check, spec, 30)
            self.record('trace.%03d' % c, params, lambda: exact(a.trace() == spec.alphas[m - 1]))
            self.record('determinant.%03d' % c, params,
                        lambda: exact(a.determinant() == (-1) ** (m - 1) * spec.alphas[0]))
            self.record('char_poly.%03d' % c, params,
                        lambda: exact(characteristic_polynomial(a) == expected_characteristic_polynomial(spec)))
            if m == 3:
                self.record('minor_sum.%03d' % c, params,
                            lambda: exact(principal_minor_sum(a) == -spec.alphas[1]))
            alpha = g.alpha()
            m_cheb = g.order([2, 3])
            self.record('chebyshev_generator.%03d' % c, _p(m=m_cheb, alpha=alpha),
                        self._generator_gap, m_cheb, alpha)
            p, q = g.rational(), g.rational(nonzero=True)
            spec2 = RecurrenceSpec((-q, p), (0, 1))
            self.record('closed_form_m2.%03d' % c, _p(P=p, Q=q),
                        lambda: exact(closed_form_check(2, spec2, 12).shift == -1))
            q3, r3 = g.rational(), g.rational(nonzero=True)
            spec3 = RecurrenceSpec((r3, q3, 1), (0, 1, 1))
            self.record('closed_form_m3.%03d' % c, _p(P=1, Q=q3, R=r3),
                        lambda: exact(closed_form_check(3, spec3, 12).shift == -1))
        fib = RecurrenceSpec((1, 1), (0, 1))
        self.record('fibonacci_power', _p(n=5),
                    lambda: exact(power(build_companion(fib), 5).tolist() == [[8, 5], [5, 3]]))
        self.record('fibonacci_orbit', _p(n=10), lambda: exact(orbit_terms(fib, 10)[-1] == 55))
        trib = RecurrenceSpec((1, 1, 1), (0, 1, 1))
        self.record('closed_form_tribonacci', _p(n_max=12),
                    lambda: exact(closed_form_check(3, trib, 12).shift == -1))

    @staticmethod
    def _generator_gap(m, alpha):
        spec = chebyshev_generator(m, alpha)
        growth = root_magnitude(m, alpha)
        return max(scaled_residual(f / m, binet_eval(m, alpha, n), growth ** n)
                   for n, f in enumerate(orbit_terms(spec, 12)))


SUITES = {
    SpectralSuite.name: SpectralSuite,
    HyperbolicSuite.name: HyperbolicSuite,
    DemoivreSuite.name: DemoivreSuite,
    ChebyshevSuite.name: ChebyshevSuite,
    LucasSuite.name: LucasSuite,
    CompanionSuite.name: CompanionSuite,
}
