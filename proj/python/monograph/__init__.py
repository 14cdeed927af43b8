"""Monographs, their morphisms, limits, colimits and rewriting."""

from ._monograph import *  # noqa: F401,F403
from ._monograph import MonographError, fixtures  # noqa: F401

# MonographError(kind, message): the library's error kind, e.g. "DanglingEdge".
MonographError.kind = property(lambda self: self.args[0])
MonographError.message = property(lambda self: self.args[1])
