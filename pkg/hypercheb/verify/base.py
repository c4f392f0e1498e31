# encoding='utf-8'

"""
identity verification plumbing
    BaseSuite: a configurable set of identity cases, each case gives a residual
    CaseResult: one case, its parameters, residual and tolerance
    VerifyReport: all cases of a run sorted by id, the seed and tolerance echoed
"""

import json
import logging
import math
import os
import time
from dataclasses import dataclass, field
from typing import List

from traitlets.config import Configurable
from traitlets import (
    Int,
    Float,
    default,
)

from hypercheb.utils.base import HyperChebError, format_float
from hypercheb.utils.base_conf import TOL_ENV, DEFAULT_TOL, SUITE_NAMES
from hypercheb.verify.generator import CaseGenerator

logger = logging.getLogger(__name__)


@dataclass
class CaseResult:
    case_id: str
    params: dict
    residual: float
    tol: float

    @property
    def passed(self):
        return bool(self.residual <= self.tol)

    def to_json(self):
        return {
            'id': self.case_id,
            'params': self.params,
            'residual': self.residual if math.isfinite(self.residual) else None,
            'tol': self.tol,
            'pass': self.passed,
        }


@dataclass
class VerifyReport:
    seed: int
    tolerance: float
    suites: List[str]
    cases: List[CaseResult] = field(default_factory=list)

    def __post_init__(self):
        self.cases = sorted(self.cases, key=lambda c: c.case_id)

    @property
    def passed(self):
        return all(c.passed for c in self.cases)

    @property
    def n_failed(self):
        return sum(1 for c in self.cases if not c.passed)

    def failures(self):
        return [c for c in self.cases if not c.passed]

    def to_text(self):
        l_line = ['# seed %d tol %s suites %s' % (self.seed, format_float(self.tolerance), ','.join(self.suites))]
        for c in self.cases:
            l_line.append('%s\t%s\t%s' % (c.case_id, format_float(c.residual), 'pass' if c.passed else 'FAIL'))
        l_line.append('# %d cases, %d failed' % (len(self.cases), self.n_failed))
        return '\n'.join(l_line) + '\n'

    def to_json(self):
        return json.dumps({
            'seed': self.seed,
            'tolerance': self.tolerance,
            'suites': self.suites,
            'n_cases': len(self.cases),
            'n_failed': self.n_failed,
            'cases': [c.to_json() for c in self.cases],
        }, indent=1, sort_keys=True) + '\n'


class BaseSuite(Configurable):
    name = 'base'
    tolerance = Float(help="pass threshold on residuals, defaults to $HYPERCHEB_TOL or 1e-9").tag(config=True)
    seed = Int(7, help="seed of the random case generator").tag(config=True)
    n_cases = Int(10, help="number of random parameter draws").tag(config=True)

    @default('tolerance')
    def _default_tolerance(self):
        env = os.environ.get(TOL_ENV)
        if env:
            try:
                return float(env)
            except ValueError:
                logger.warning('ignore unparsable [%s]=[%s]', TOL_ENV, env)
        return DEFAULT_TOL

    def __init__(self, **kwargs):
        super(BaseSuite, self).__init__(**kwargs)
        self.generator = CaseGenerator(config=self.config)
        self.generator.reset(self.seed, SUITE_NAMES.index(self.name) if self.name in SUITE_NAMES else 0)
        self.l_result = []

    def record(self, case_id, params, fn, *args, tol=None, **kwargs):
        """
        run one check, a residual-returning callable; library errors count as failures
        """
        tol = self.tolerance if tol is None else tol
        try:
            res = float(fn(*args, **kwargs))
        except HyperChebError as e:
            logger.warning('case [%s] raised [%s]', case_id, e)
            res = math.inf
        self.l_result.append(CaseResult('%s.%s' % (self.name, case_id), params, res, tol))
        return res

    def cases(self):
        """record every case of the suite"""
        raise NotImplementedError

    def run(self):
        self.l_result = []
        st = time.time()
        self.cases()
        logger.info('suite [%s] ran [%d] cases, [%d] failed in [%.3f]s',
                    self.name, len(self.l_result), sum(1 for c in self.l_result if not c.passed),
                    time.time() - st)
        return list(self.l_result)
