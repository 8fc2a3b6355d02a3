"""Exact knot concordance toolkit."""

try:
    from ._core import alexander, arf, blanchfield, certify, rho, signature, split
except ImportError:  # in-tree builds put _core next to the package
    from _core import alexander, arf, blanchfield, certify, rho, signature, split

__all__ = [
    "alexander",
    "arf",
    "blanchfield",
    "certify",
    "rho",
    "signature",
    "split",
]
