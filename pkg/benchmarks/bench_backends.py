#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python/numpy fallback.

Times the bitset sieve, the Mobius sieve, and the prime-sum kernel on both
backends and checks that results agree. Run from the repository root:

    python3 benchmarks/bench_backends.py [--limit 10000000]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from liprime import _kernels_py

try:
    from liprime import _kernels
except ImportError:
    _kernels = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return out, best


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=10**7, help="sieve/Mobius limit")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if _kernels is None:
        print("compiled backend not built; showing python backend only")
    backends = [("python", _kernels_py)] + ([("compiled", _kernels)] if _kernels else [])

    print(f"== sieve_bitset(limit={args.limit:,})")
    bits = {}
    for name, mod in backends:
        bits[name], dt = timed(mod.sieve_bitset, args.limit, repeat=args.repeat)
        print(f"  {name:10s} {dt*1e3:10.1f} ms")
    if len(bits) == 2:
        assert np.array_equal(bits["python"], bits["compiled"]), "sieve mismatch"
        print("  backends agree bit-for-bit")

    mob_limit = min(args.limit, 10**6)
    print(f"== mobius_sieve(limit={mob_limit:,})")
    mus = {}
    for name, mod in backends:
        mus[name], dt = timed(mod.mobius_sieve, mob_limit, repeat=args.repeat)
        print(f"  {name:10s} {dt*1e3:10.1f} ms")
    if len(mus) == 2:
        assert np.array_equal(mus["python"], mus["compiled"]), "mobius mismatch"
        print("  backends agree")

    packed = np.unpackbits(bits[backends[0][0]], bitorder="little")
    primes = np.flatnonzero(packed).astype(float)
    print(f"== prime_sum_chunk over {primes.size:,} primes, s = 1.5 + 2j")
    sums = {}
    for name, mod in backends:
        for kind, label in [(0, "p^-s"), (1, "ln(p) p^-s"), (3, "ln(1+p^-s)")]:
            sums[(name, kind)], dt = timed(
                mod.prime_sum_chunk, primes, 1.5, 2.0, kind, repeat=args.repeat
            )
            print(f"  {name:10s} kind {kind} ({label:12s}) {dt*1e3:10.1f} ms")
    if _kernels:
        for kind in (0, 1, 3):
            d = abs(sums[("python", kind)] - sums[("compiled", kind)])
            assert d < 1e-10, f"prime sum kind {kind} differs by {d}"
        print("  backends agree to < 1e-10")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
