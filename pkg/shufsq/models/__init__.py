# shufsq/models/__init__.py

from .common import *
from .witness import *
from .reports import *
