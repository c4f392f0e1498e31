# encoding='utf-8'

from .base import *
from .generator import *
from .suites import *
