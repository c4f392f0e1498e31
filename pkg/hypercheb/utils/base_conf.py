# encoding='utf-8'

TOL_ENV = 'HYPERCHEB_TOL'
DEFAULT_TOL = 1e-9
SERIES_TOL = 1e-12
DEFAULT_ORDER = 32

# log(sys.float_info.max); exp beyond this overflows a double
MAX_EXP_ARG = 709.782712893384

SUITE_NAMES = ('spectral', 'hyperbolic', 'demoivre', 'chebyshev', 'lucas', 'companion')
