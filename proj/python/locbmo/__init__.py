"""Localized BMO/BLO laboratory on discretized doubling metric measure spaces."""

from ._locbmo import *  # noqa: F401,F403
from ._locbmo import __doc__ as _core_doc

__doc__ = _core_doc
