"""Prime ground truth: segmented sieve, pi(x), nth prime, Mobius table.

The sieve output is a bitset (one bit per integer) with sparse cumulative
checkpoints so pi queries cost one block popcount. Tables are immutable
after construction and safe to share across threads.
"""

from __future__ import annotations

import os
import struct
from dataclasses import dataclass, field

import numpy as np

from . import backend
from .errors import CapacityError, DomainError

DEFAULT_MAX_LIMIT = 10**9
_BLOCK_BYTES = 4096  # checkpoint spacing: 32768 integers

_POPCOUNT = np.unpackbits(np.arange(256, dtype=np.uint8)[:, None], axis=1).sum(axis=1).astype(np.int64)

_CACHE_MAGIC = b"LIPR"
_CACHE_VERSION = 1


@dataclass
class PrimeTable:
    """Bitset primality table up to ``limit`` with O(1)-amortized pi queries."""

    limit: int
    bits: np.ndarray  # uint8, LSB-first
    checkpoints: np.ndarray = field(default=None)  # type: ignore[assignment]
    _sum_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.checkpoints is None:
            nblocks = (self.bits.size + _BLOCK_BYTES - 1) // _BLOCK_BYTES
            block_sums = np.empty(nblocks, dtype=np.int64)
            step = 4096 * _BLOCK_BYTES  # 16 MiB of bitset per pass
            for j, start in enumerate(range(0, self.bits.size, step)):
                chunk = _POPCOUNT[self.bits[start : start + step]]
                edges = np.arange(0, chunk.size, _BLOCK_BYTES)
                sums = np.add.reduceat(chunk, edges)
                block_sums[j * 4096 : j * 4096 + sums.size] = sums
            ck = np.zeros(nblocks + 1, dtype=np.int64)
            np.cumsum(block_sums, out=ck[1:])
            self.checkpoints = ck

    @property
    def count(self) -> int:
        """pi(limit)."""
        return self.pi(self.limit)

    def is_prime(self, n: int) -> bool:
        if not 0 <= n <= self.limit:
            raise DomainError(f"n={n} outside table range [0, {self.limit}]")
        return bool((self.bits[n >> 3] >> (n & 7)) & 1)

    def pi(self, x: float) -> int:
        """Exact count of primes <= x."""
        if not 0 <= x <= self.limit:
            raise DomainError(f"x={x} outside table range [0, {self.limit}]")
        n = int(x)
        byte = n >> 3
        block = byte // _BLOCK_BYTES
        total = int(self.checkpoints[block])
        start = block * _BLOCK_BYTES
        if byte > start:
            total += int(_POPCOUNT[self.bits[start:byte]].sum())
        last = int(self.bits[byte]) & ((1 << ((n & 7) + 1)) - 1)
        total += int(_POPCOUNT[last])
        return total

    def nth_prime(self, n: int) -> int:
        """The n-th prime (1-indexed)."""
        if n < 1:
            raise DomainError("n must be >= 1")
        hi = int(np.searchsorted(self.checkpoints, n, side="left"))
        if hi >= self.checkpoints.size:
            raise CapacityError(
                f"table up to {self.limit} holds only {self.checkpoints[-1]} primes, need n={n}"
            )
        block = hi - 1
        remaining = n - int(self.checkpoints[block])
        start = block * _BLOCK_BYTES
        stop = min(start + _BLOCK_BYTES, self.bits.size)
        chunk_bits = np.unpackbits(self.bits[start:stop], bitorder="little")
        idx = np.flatnonzero(chunk_bits)
        return int(start * 8 + idx[remaining - 1])

    def primes_in_range(self, lo: int, hi: int) -> np.ndarray:
        """All primes p with lo <= p < hi, as int64."""
        lo = max(lo, 0)
        hi = min(hi, self.limit + 1)
        if hi <= lo:
            return np.empty(0, dtype=np.int64)
        b0, b1 = lo >> 3, (hi - 1) >> 3
        chunk_bits = np.unpackbits(self.bits[b0 : b1 + 1], bitorder="little")
        idx = np.flatnonzero(chunk_bits) + b0 * 8
        return idx[(idx >= lo) & (idx < hi)].astype(np.int64)

    def primes(self, limit: int | None = None) -> np.ndarray:
        lim = self.limit if limit is None else limit
        return self.primes_in_range(0, lim + 1)


@dataclass(frozen=True)
class MobiusTable:
    """mu(n) for 0 <= n <= limit."""

    limit: int
    mu: np.ndarray  # int8

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise DomainError(f"n={n} outside table range [1, {self.limit}]")
        return int(self.mu[n])


def sieve(limit: int, max_limit: int = DEFAULT_MAX_LIMIT) -> PrimeTable:
    """Segmented sieve of Eratosthenes up to ``limit`` (inclusive)."""
    if limit < 2:
        raise DomainError("sieve limit must be >= 2")
    if limit > max_limit:
        raise CapacityError(f"limit {limit} exceeds configured maximum {max_limit}")
    bits = backend.sieve_bitset(int(limit))
    # mask out bits above limit in the final byte
    extra = (limit & 7) + 1
    bits[-1] &= (1 << extra) - 1
    return PrimeTable(limit=int(limit), bits=bits)


def pi(x: float, table: PrimeTable) -> int:
    """Number of primes <= x."""
    return table.pi(x)


def nth_prime(n: int, table: PrimeTable) -> int:
    """The n-th prime, 1-indexed."""
    return table.nth_prime(n)


def mobius_table(limit: int, max_limit: int = DEFAULT_MAX_LIMIT) -> MobiusTable:
    """Mobius function table via a linear sieve."""
    if limit < 1:
        raise DomainError("mobius limit must be >= 1")
    if limit > max_limit:
        raise CapacityError(f"limit {limit} exceeds configured maximum {max_limit}")
    return MobiusTable(limit=int(limit), mu=backend.mobius_sieve(int(limit)))


def save_cache(table: PrimeTable, path: str) -> None:
    """Write the sieve bitset: magic 'LIPR', u32 version, u64 limit, raw bits."""
    with open(path, "wb") as fh:
        fh.write(_CACHE_MAGIC)
        fh.write(struct.pack("<IQ", _CACHE_VERSION, table.limit))
        fh.write(table.bits.tobytes())


def load_cache(path: str) -> PrimeTable:
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != _CACHE_MAGIC:
            raise ValueError(f"{path}: not a liprime sieve cache")
        version, limit = struct.unpack("<IQ", fh.read(12))
        if version != _CACHE_VERSION:
            raise ValueError(f"{path}: unsupported cache version {version}")
        bits = np.frombuffer(fh.read(), dtype=np.uint8).copy()
    if bits.size != limit // 8 + 1:
        raise ValueError(f"{path}: truncated cache file")
    return PrimeTable(limit=int(limit), bits=bits)


def cached_sieve(limit: int, cache_dir: str | None = None,
                 max_limit: int = DEFAULT_MAX_LIMIT) -> PrimeTable:
    """sieve() with an optional on-disk cache (LIPRIME_CACHE_DIR)."""
    cache_dir = cache_dir or os.environ.get("LIPRIME_CACHE_DIR")
    if not cache_dir:
        return sieve(limit, max_limit=max_limit)
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, f"sieve_{limit}.lipr")
    if os.path.exists(path):
        return load_cache(path)
    table = sieve(limit, max_limit=max_limit)
    save_cache(table, path)
    return table
