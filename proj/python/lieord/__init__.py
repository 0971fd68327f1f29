"""Element orders, conjugacy classes and automorphism orbits of finite simple groups."""

from ._lieord import *  # noqa: F401,F403
from ._lieord import __doc__  # noqa: F401
