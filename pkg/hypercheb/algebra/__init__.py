# encoding='utf-8'

from .spectral import *
from .polynomial import *
