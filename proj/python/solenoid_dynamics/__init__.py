"""Exact dynamics of induced homeomorphisms of the universal solenoid.

Rationals are passed and returned as "p/q" strings.
"""

from fractions import Fraction

from ._core import *  # noqa: F401,F403
from ._core import SolenoidError


def fraction(value: str) -> Fraction:
    """Converts a "p/q" string returned by the core into a Fraction."""
    return Fraction(value)


__all__ = [name for name in dir() if not name.startswith("_")]
