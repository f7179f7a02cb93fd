"""Size bounds and library-wide exceptions."""

from __future__ import annotations

import contextlib
import os
from dataclasses import dataclass


class BurnsideError(Exception):
    """Base class for computation errors raised by this package."""


class GroupTooLarge(BurnsideError):
    pass


class SetTooLarge(BurnsideError):
    pass


class NotIntegral(BurnsideError):
    pass


class RingMismatch(BurnsideError):
    pass


class DegreeExceeded(BurnsideError):
    pass


class NoPowerStructure(BurnsideError):
    """Raised when power operations do not descend to the requested coefficients."""


@dataclass
class Bounds:
    group_order: int = 20_000
    symmetric_degree: int = 7
    lattice: int = 400
    set_size: int = 1_000_000
    operator_degree: int = 3
    derived_degree: int = 6


bounds = Bounds()

DEBUG = bool(os.environ.get("BURNSIDE_DEBUG"))


@contextlib.contextmanager
def override(**kwargs):
    """Temporarily change entries of the global :data:`bounds`."""
    old = {k: getattr(bounds, k) for k in kwargs}
    for k, v in kwargs.items():
        if not hasattr(bounds, k):
            raise AttributeError(k)
        setattr(bounds, k, v)
    try:
        yield bounds
    finally:
        for k, v in old.items():
            setattr(bounds, k, v)
