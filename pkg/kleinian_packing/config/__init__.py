from .config import *
from .env import *
