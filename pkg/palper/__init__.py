"""palper

Palindromic periodicities of finite and infinite words: word predicates,
sequence generators, factor censuses and exhaustive searches.
"""

__version__ = "1.0.0"

from .exceptions import (
    CapExceededError,
    DomainError,
    PalperError,
    SequenceError,
    StabilizationError,
    UnboundedInventoryError,
    WordError,
)
from .words import PPWitness, fractional_root, is_pal_periodicity, is_symmetric, periods

__all__ = [
    "CapExceededError",
    "DomainError",
    "PPWitness",
    "PalperError",
    "SequenceError",
    "StabilizationError",
    "UnboundedInventoryError",
    "WordError",
    "fractional_root",
    "is_pal_periodicity",
    "is_symmetric",
    "periods",
]
