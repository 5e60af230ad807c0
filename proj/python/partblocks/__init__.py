"""Block decompositions of partition algebras.

Partitions are plain lists of weakly decreasing positive ints; block
partitions come back as lists of classes, each class a list of partitions.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
