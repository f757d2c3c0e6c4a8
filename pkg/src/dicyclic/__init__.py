"""Dicyclic groups, their automorphisms and generalized symmetric spaces."""

from .automorphism import *  # noqa: F401,F403
from .group import *  # noqa: F401,F403
from .symmetric import *  # noqa: F401,F403

__version__ = "0.1.0"
