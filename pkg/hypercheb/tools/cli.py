# encoding='utf-8'

"""
hypercheb command line
    verify      run the identity suites, exit 1 when a case fails
    cheb        exact coefficients, stream tables, generating functions
    genfun      m = 3 generating function of one stream
    surface     the hyperbolon invariant and point clouds on it
    lucas       V/U/W root functions and their identifications
    companion   companion-matrix orbits, powers and closed forms
exit codes: 0 ok, 1 verification failure, 2 usage error, 3 domain or range error
documents go to stdout (or --out), logs to stderr
"""

import argparse
import json
import logging
import sys
import time

import numpy as np
from traitlets.config import Config

from hypercheb.functions.demoivre import (
    hyperbolon_invariant,
    reconcile_printed_quartic,
    sample_surface,
    variable_names,
)
from hypercheb.functions.hyperbolic import configure
from hypercheb.sequences.chebyshev import (
    StreamIndex,
    expand_poly,
    expand_poly_m2,
    genfun,
    recurrence_eval,
)
from hypercheb.sequences.companion import (
    RecurrenceSpec,
    build_companion,
    closed_form_check,
    orbit_terms,
    power,
)
from hypercheb.sequences.lucas import (
    CubicRoots,
    RootSystem,
    identify_m2,
    identify_m3,
    inequality_witnesses,
    vuw_direct,
    vuw_recurrent,
)
from hypercheb.utils.base import (
    HyperChebError,
    DomainError,
    set_basic_log,
    load_py_config,
    parse_complex,
    parse_list,
    format_float,
    format_number,
)
from hypercheb.utils.base_conf import SUITE_NAMES
from hypercheb.verify.base import VerifyReport
from hypercheb.verify.suites import SUITES

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
LIST_FLAGS = ('--alpha', '--alphas', '--seeds', '--roots')


def _complex_json(value):
    value = complex(value)
    return [value.real, value.imag]


def _number_json(value):
    if isinstance(value, complex):
        return _complex_json(value)
    return format_number(value)


def _dump(doc):
    return json.dumps(doc, indent=1, sort_keys=True) + '\n'


def _csv(header, l_row):
    l_line = [','.join(header)]
    for row in l_row:
        l_line.append(','.join(format_float(v) if isinstance(v, float) else str(v) for v in row))
    return '\n'.join(l_line) + '\n'


def cmd_verify(args, conf):
    if args.list:
        return '\n'.join(SUITE_NAMES) + '\n'
    names = list(SUITE_NAMES) if args.suites == 'all' else [s.strip() for s in args.suites.split(',') if s.strip()]
    for name in names:
        if name not in SUITES:
            raise DomainError('unknown suite [%s], choose from %s' % (name, ','.join(SUITE_NAMES)))
    if args.seed is not None:
        conf.BaseSuite.seed = args.seed
    if args.tol is not None:
        conf.BaseSuite.tolerance = args.tol
    st = time.time()
    l_case = []
    seed, tol = None, None
    for name in names:
        suite = SUITES[name](config=conf)
        seed, tol = suite.seed, suite.tolerance
        l_case.extend(suite.run())
    report = VerifyReport(seed, tol, names, l_case)
    logger.info('verified [%d] cases of %s, [%d] failed, wall time [%.3f]s',
                len(report.cases), names, report.n_failed, time.time() - st)
    return report


def cmd_cheb(args, conf):
    if args.genfun:
        return cmd_genfun(args, conf)
    if args.table:
        seq = recurrence_eval(args.m, parse_complex(args.alpha), args.n)
        l_row = []
        for n in range(args.n + 1):
            l_row.append((n, 0, float(n), 0.0, seq.main[n].real, seq.main[n].imag))
            for s in range(1, args.m):
                nu = StreamIndex(n, s, args.m).value
                value = seq.get(n, s)
                l_row.append((n, s, nu.real, nu.imag, value.real, value.imag))
        return _csv(['n', 'stream', 'nu_re', 'nu_im', 'value_re', 'value_im'], l_row)
    if args.m == 3:
        poly = expand_poly(args.kind, args.n)
    elif args.m == 2 and args.kind == 0:
        poly = expand_poly_m2(args.n)
    else:
        raise DomainError('exact expansions exist for m=3 kinds 0,1,2 and m=2 kind 0')
    if args.json:
        return _dump(poly.to_json(variable_names(args.m)))
    return poly.to_text(variable_names(args.m)) + '\n'


def cmd_genfun(args, conf):
    alpha = parse_complex(args.alpha) if args.alpha else None
    gf = genfun(3, alpha, args.stream)
    return _dump(gf.to_json(args.terms))


def cmd_surface(args, conf):
    if args.reconcile:
        l_match = reconcile_printed_quartic()
        return _dump({'matches': [{'perm': list(r.perm), 'sign': r.sign, 'form': r.describe()} for r in l_match]})
    if args.sample:
        l_alpha = list(np.linspace(-args.alpha_max, args.alpha_max, args.sample))
        return _dump(sample_surface(args.m, l_alpha))
    poly = hyperbolon_invariant(args.m)
    if args.json:
        return _dump(poly.to_json(variable_names(args.m)))
    return poly.to_text(variable_names(args.m)) + '\n'


def _roots(text):
    l_root = parse_list(text)
    if len(l_root) == 3:
        return CubicRoots(tuple(l_root))
    return RootSystem(tuple(l_root))


def cmd_lucas(args, conf):
    roots = _roots(args.roots)
    if args.identify:
        if roots.m == 3:
            doc = identify_m3(roots, args.n).to_json()
            doc['witnesses'] = {
                which: {'images': _complex_json(h['images']), 'roots': _complex_json(h['roots']),
                        'differs': h['differs']}
                for which, h in inequality_witnesses(roots, args.n).items()}
        elif roots.m == 2:
            doc = identify_m2(roots.roots[0].real, roots.roots[1].real, args.n).to_json()
        else:
            raise DomainError('identification needs 2 or 3 roots, got [%d]' % roots.m)
        return _dump(doc)
    seq = vuw_recurrent(roots, args.which, max(args.n, roots.m))
    l_row = []
    for n in range(args.n + 1):
        direct = vuw_direct(roots, args.which, n)
        l_row.append((n, direct.real, direct.imag, seq[n].real, seq[n].imag))
    if args.json:
        return _dump({'which': args.which, 'roots': [_complex_json(r) for r in roots.roots],
                      'direct': [[r[1], r[2]] for r in l_row], 'recurrent': [[r[3], r[4]] for r in l_row]})
    return _csv(['n', 'direct_re', 'direct_im', 'recurrent_re', 'recurrent_im'], l_row)


def cmd_companion(args, conf):
    exact = not args.float
    alphas = parse_list(args.alphas, exact=exact)
    seeds = parse_list(args.seeds, exact=exact)
    spec = RecurrenceSpec(tuple(alphas), tuple(seeds), exact=exact)
    if args.matrix_power is not None:
        mat = power(build_companion(spec), args.matrix_power)
        return _dump({'n': args.matrix_power,
                      'matrix': [[_number_json(v) for v in row] for row in mat.tolist()]})
    if args.closed_form:
        return _dump(closed_form_check(spec.order, spec, args.n).to_json())
    l_term = orbit_terms(spec, args.n)
    return _csv(['n', 'F_n'], [(n, format_number(v)) for n, v in enumerate(l_term)])


def build_parser():
    parser = argparse.ArgumentParser(prog='hypercheb', description='higher-order hyperbolic functions toolkit')
    parser.add_argument('--config', help='traitlets python config file')
    parser.add_argument('--verbose', '-v', action='store_true', help='debug logs')
    parser.add_argument('--out', '-o', help='write the document here instead of stdout')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('verify', help='run identity suites')
    p.add_argument('--suites', default='all', help='comma separated suite names or all')
    p.add_argument('--seed', type=int)
    p.add_argument('--tol', type=float)
    p.add_argument('--json', action='store_true')
    p.add_argument('--list', action='store_true', help='print suite names')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('cheb', help='Tchebysheff m-polynomials')
    p.add_argument('--m', type=int, default=3)
    p.add_argument('--kind', type=int, default=0, choices=[0, 1, 2])
    p.add_argument('--n', type=int, default=4)
    p.add_argument('--alpha', default='0.5,0', help='re,im')
    p.add_argument('--stream', type=int, default=0, choices=[0, 1, 2])
    p.add_argument('--terms', type=int, default=12)
    p.add_argument('--json', action='store_true')
    mode = p.add_mutually_exclusive_group()
    mode.add_argument('--coeffs', action='store_true', help='exact polynomial, the default')
    mode.add_argument('--table', action='store_true', help='CSV of stream values')
    mode.add_argument('--genfun', action='store_true', help='generating function JSON')
    p.set_defaults(func=cmd_cheb)

    p = sub.add_parser('genfun', help='m=3 generating functions')
    p.add_argument('--stream', type=int, default=0, choices=[0, 1, 2])
    p.add_argument('--alpha', help='re,im; symbolic only when omitted')
    p.add_argument('--terms', type=int, default=12)
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser('surface', help='hyperbolon of volume one')
    p.add_argument('--m', type=int, default=3)
    p.add_argument('--poly', action='store_true', help='invariant polynomial, the default')
    p.add_argument('--json', action='store_true')
    p.add_argument('--sample', type=int, default=0, help='number of points on a real alpha grid')
    p.add_argument('--alpha-max', type=float, default=1.0)
    p.add_argument('--reconcile', action='store_true', help='match the printed m=4 quartic')
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser('lucas', help='V/U/W root functions')
    p.add_argument('--roots', required=True, help='a,b[,c,...]')
    p.add_argument('--which', default='V', choices=['V', 'U', 'W'])
    p.add_argument('--n', type=int, default=10)
    p.add_argument('--identify', action='store_true', help='identification residual report')
    p.add_argument('--json', action='store_true')
    p.set_defaults(func=cmd_lucas)

    p = sub.add_parser('companion', help='companion-matrix recurrences')
    p.add_argument('--alphas', required=True, help='alpha_0,...,alpha_{m-1}')
    p.add_argument('--seeds', required=True, help='F_0,...,F_{m-1}')
    p.add_argument('--n', type=int, default=10)
    number = p.add_mutually_exclusive_group()
    number.add_argument('--exact', action='store_true', help='rational arithmetic, the default')
    number.add_argument('--float', action='store_true', help='complex float arithmetic')
    out = p.add_mutually_exclusive_group()
    out.add_argument('--orbit', action='store_true', help='CSV of F_0..F_n, the default')
    out.add_argument('--matrix-power', type=int, help='JSON of A^k')
    out.add_argument('--closed-form', action='store_true', help='printed closed-form report')
    p.set_defaults(func=cmd_companion)
    return parser


def _emit(text, out):
    if out:
        with open(out, 'w') as f:
            f.write(text)
        logger.info('wrote [%s]', out)
    else:
        sys.stdout.write(text)


def _glue_number_lists(argv):
    """--alphas -1,2 -> --alphas=-1,2, argparse reads a leading minus as an option"""
    l_arg = []
    it = iter(argv)
    for arg in it:
        if arg in LIST_FLAGS:
            value = next(it, None)
            if value is not None:
                arg = '%s=%s' % (arg, value)
        l_arg.append(arg)
    return l_arg


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(_glue_number_lists(sys.argv[1:] if argv is None else argv))
    set_basic_log(logging.DEBUG if args.verbose else logging.WARNING)
    try:
        conf = load_py_config(args.config) if args.config else Config()
        configure(conf)
        result = args.func(args, conf)
    except HyperChebError as e:
        sys.stderr.write('hypercheb: %s\n' % e)
        return EXIT_DOMAIN
    if isinstance(result, VerifyReport):
        _emit(result.to_json() if args.json else result.to_text(), args.out)
        return EXIT_OK if result.passed else EXIT_FAIL
    _emit(result, args.out)
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
