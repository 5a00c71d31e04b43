from .grid import *
from .orbit_points import *
from .ps import *
from .empirical import *
