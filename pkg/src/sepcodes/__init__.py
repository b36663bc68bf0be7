"""Separable and frameproof codes: construction, verification, bounds and search."""

from sepcodes.core import (
    Code,
    CodeError,
    CodeParams,
    DescendantProfile,
    agreement_count,
    desc_contains,
    desc_profile,
    desc_size,
)

__version__ = "0.1.0"

__all__ = [
    "Code",
    "CodeError",
    "CodeParams",
    "DescendantProfile",
    "agreement_count",
    "desc_contains",
    "desc_profile",
    "desc_size",
]
