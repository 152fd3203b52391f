"""Parameterized Hartley-type transform, its convolution algebra and solvers."""

from ._hartley import *  # noqa: F401,F403
from ._hartley import __doc__  # noqa: F401
