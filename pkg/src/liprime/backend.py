"""Kernel backend selection: compiled extension if available, numpy otherwise.

Set LIPRIME_FORCE_PYTHON=1 to force the pure-Python kernels (used by the
benchmark and by tests that exercise both backends).
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _kernels  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build environment
    _kernels = None

if _kernels is None or os.environ.get("LIPRIME_FORCE_PYTHON"):
    _impl = _kernels_py
else:
    _impl = _kernels

BACKEND_NAME: str = _impl.BACKEND_NAME
HAVE_COMPILED: bool = _kernels is not None

sieve_bitset = _impl.sieve_bitset
mobius_sieve = _impl.mobius_sieve
prime_sum_chunk = _impl.prime_sum_chunk
