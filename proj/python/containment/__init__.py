"""Comparability graphs, poset dimension and containment representations."""

from ._containment import *  # noqa: F401,F403
from ._containment import __doc__  # noqa: F401
