from .affine_type import *
from .weight import *
from .roots import *
from .path import *
from .config import *
from .report import *
from . import constants
