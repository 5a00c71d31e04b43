from .mobius import *
from .hyperbolic import *
from .circle import *
