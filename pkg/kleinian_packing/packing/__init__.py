from .packing import *
from .descartes import *
from .presentation import *
from .orbit import *
from .bouquet import *
from .build import *
