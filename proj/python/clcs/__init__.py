"""Cyclic longest common subsequence in O(mn)."""

try:
    from ._clcs import (
        ClcsResult,
        clcs,
        clcs_len,
        cut,
        is_subsequence,
        lcs_len,
    )
except ImportError:  # build-tree layout: extension sits next to the package
    from _clcs import (
        ClcsResult,
        clcs,
        clcs_len,
        cut,
        is_subsequence,
        lcs_len,
    )

__all__ = [
    "ClcsResult",
    "clcs",
    "clcs_len",
    "cut",
    "is_subsequence",
    "lcs_len",
]
