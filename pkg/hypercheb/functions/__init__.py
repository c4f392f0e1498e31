# encoding='utf-8'

from .hyperbolic import *
from .demoivre import *
