"""Graph modification solvers for first-order definable target properties."""

from folmod._core import *  # noqa: F401,F403
from folmod._core import __doc__  # noqa: F401
