"""Redei-Berge functions of digraphs in noncommuting variables."""

from ._rbnc import *  # noqa: F401,F403
from ._rbnc import __doc__  # noqa: F401

__version__ = "0.1.0"
