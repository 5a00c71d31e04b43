from .region import *
from .count import *
from .fit import *
