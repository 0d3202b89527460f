"""Exact enumeration and counting for simultaneous core partitions,
numerical-semigroup gap posets, and Motzkin / generalized Dyck paths."""

from simcores._simcores import *  # noqa: F401,F403
from simcores._simcores import __doc__  # noqa: F401
