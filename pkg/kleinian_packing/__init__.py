"""
Circle packings invariant under Kleinian groups: generation, curvature counting
and limiting-measure estimation, written in Python
"""

__version__ = "0.4.0"
__description__ = "Generate Kleinian circle packings, count circles by curvature and fit their growth laws"
__author__ = "kleinian-packing contributors"
__author_email__ = "kleinian-packing@users.noreply.github.com"
__license__ = "MIT"
__repository__ = "kleinian-packing/kleinian-packing"
__url_repository__ = "https://github.com"

import logging

logging.getLogger(__name__).addHandler(logging.NullHandler())
