from .type import *
from .core import *
from . import algebra, crystal

__version__ = "0.1.0"
