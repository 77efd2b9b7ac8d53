"""Pure-numpy fallback for the compiled kernels in ``_kernels``.

Same public functions, selected at import time by ``backend`` when the
compiled extension is unavailable (or LIPRIME_FORCE_PYTHON is set).
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"

_SEGMENT = 1 << 24


def _simple_mask(limit: int) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return mask


def sieve_bitset(limit: int) -> np.ndarray:
    """LSB-first bitset over 0..limit with bit n set iff n is prime."""
    root = int(limit**0.5)
    while root * root > limit:
        root -= 1
    base = np.flatnonzero(_simple_mask(max(root, 2)))
    nbytes = limit // 8 + 1
    out = np.empty(nbytes, dtype=np.uint8)
    for lo in range(0, limit + 1, _SEGMENT):
        hi = min(lo + _SEGMENT, limit + 1)
        mask = np.ones(hi - lo, dtype=bool)
        if lo == 0:
            mask[:2] = False
        for p in base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start < hi:
                mask[start - lo :: p] = False
        packed = np.packbits(mask, bitorder="little")
        out[lo // 8 : lo // 8 + packed.size] = packed
    return out


def mobius_sieve(limit: int) -> np.ndarray:
    """mu(n) for 0 <= n <= limit, by squarefree-multiplicative sieving."""
    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    cofactor = np.arange(limit + 1, dtype=np.int64)
    root = int(limit**0.5) + 1
    for p in np.flatnonzero(_simple_mask(max(root, 2))):
        p = int(p)
        if p > root:
            break
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
        cofactor[p::p] //= p
    # entries whose cofactor is still > 1 carry exactly one prime factor > sqrt(limit)
    mu[cofactor > 1] *= -1
    return mu


def prime_sum_chunk(primes: np.ndarray, s_re: float, s_im: float, kind: int) -> complex:
    """Sum over a chunk of primes; kind selects the summand (see _kernels)."""
    lp = np.log(primes)
    if kind in (0, 1):
        vals = np.exp(-complex(s_re, s_im) * lp)
        if kind == 1:
            vals *= lp
        return complex(vals.sum())
    if kind == 2:
        w = np.exp(complex(s_re, s_im) * lp)
        return complex((lp / (w * (w - 1.0))).sum())
    if kind == 3:
        return complex(np.log1p(np.exp(-complex(s_re, s_im) * lp)).sum())
    raise ValueError(f"unknown kind {kind}")
