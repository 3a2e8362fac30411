"""Binary primes sequences for hardening pseudorandom D-sequences."""

from ._core import *  # noqa: F401,F403
from ._core import BpsError

__all__ = [name for name in dir() if not name.startswith("_")]
