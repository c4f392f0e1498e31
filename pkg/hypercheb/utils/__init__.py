# encoding='utf-8'

from .base import *
from .base_conf import *
