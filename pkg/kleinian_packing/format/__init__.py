from .packing_csv import *
from .series import *
from .grid import *
from .svg import *
