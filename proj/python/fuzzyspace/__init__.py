"""Exact arithmetic for fuzzy subspaces of finite-dimensional vector spaces."""

from fuzzyspace._core import *  # noqa: F401,F403
from fuzzyspace._core import __doc__ as _core_doc

__doc__ = _core_doc
