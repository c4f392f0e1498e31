# encoding='utf-8'

from .chebyshev import *
from .lucas import *
from .companion import *
