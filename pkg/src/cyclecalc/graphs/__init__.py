from . import core as core
from .core import *

from . import generators as generators
from .generators import *
