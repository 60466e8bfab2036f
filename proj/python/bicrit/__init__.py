"""Exact solvers and hardness gadgets for single-machine bicriteria scheduling."""

from ._bicrit import *  # noqa: F401,F403
from ._bicrit import Instance, IntOverflowError

__all__ = [name for name in dir() if not name.startswith("_")]
