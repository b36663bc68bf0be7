"""Kernel selection: compiled core when importable, pure Python otherwise.

Set ``SEPCODES_PURE_PYTHON=1`` to force the fallback. The compiled kernels
work on 64-bit packed words, so instances with n * q > 64 always run in
Python regardless of the backend.
"""

from __future__ import annotations

import os
from math import comb

from sepcodes import _pykernels

try:
    if os.environ.get("SEPCODES_PURE_PYTHON", "").strip() not in ("", "0"):
        raise ImportError("pure-Python kernels forced by SEPCODES_PURE_PYTHON")
    from sepcodes import _ckernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def backends() -> dict[str, object]:
    """Available kernel modules keyed by name (for tests and benchmarks)."""
    out: dict[str, object] = {"python": _pykernels}
    if _compiled is not None:
        out["cython"] = _compiled
    return out


def select(width_bits: int, backend: str | None = None):
    """Kernel module for packed words of ``width_bits`` bits."""
    if backend == "python":
        return _pykernels
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        if width_bits > 64:
            raise ValueError(f"compiled kernels need n*q <= 64, got {width_bits}")
        return _compiled
    if backend is not None:
        raise ValueError(f"unknown backend {backend!r}")
    if _compiled is not None and width_bits <= 64:
        return _compiled
    return _pykernels


def unrank_subset(m: int, serial: int) -> tuple[int, ...]:
    """Subset of range(m) at position ``serial`` in (size, lex) order, sizes from 1."""
    k = 1
    while serial >= comb(m, k):
        serial -= comb(m, k)
        k += 1
        if k > m:
            raise IndexError("serial out of range")
    out = []
    x = 0
    for remaining in range(k, 0, -1):
        while True:
            c = comb(m - x - 1, remaining - 1)
            if serial < c:
                break
            serial -= c
            x += 1
        out.append(x)
        x += 1
    return tuple(out)
