# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernels: segmented bitset sieve, linear Mobius sieve, prime sums.

The pure-Python twin of this module is ``_kernels_py``; both expose the same
functions and are selected in ``backend``.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport atan2, cos, exp, log, log1p, sin
from libc.stdint cimport int8_t, int64_t, uint8_t

BACKEND_NAME = "compiled"


def sieve_bitset(long long limit):
    """LSB-first bitset over 0..limit with bit n set iff n is prime."""
    cdef long long nbytes = limit // 8 + 1
    out = np.empty(nbytes, dtype=np.uint8)
    cdef uint8_t[::1] bits = out

    # base primes up to sqrt(limit) by a plain byte sieve
    cdef long long root = <long long>(limit ** 0.5) + 1
    while root * root > limit:
        root -= 1
    base = np.ones(root + 1, dtype=np.uint8)
    cdef uint8_t[::1] b = base
    cdef long long i, j
    if root >= 0:
        b[0] = 0
    if root >= 1:
        b[1] = 0
    i = 2
    while i * i <= root:
        if b[i]:
            j = i * i
            while j <= root:
                b[j] = 0
                j += i
        i += 1
    base_primes = np.flatnonzero(base).astype(np.int64)
    cdef int64_t[::1] bp = base_primes
    cdef Py_ssize_t nbp = bp.shape[0]

    # init: mark odd numbers prime, evens composite; fix 1 and 2 below
    cdef long long k
    for k in range(nbytes):
        bits[k] = 0xAA
    _clear_bit(bits, 0)
    _clear_bit(bits, 1)
    if limit >= 2:
        _set_bit(bits, 2)

    cdef long long seg = 1 << 25
    cdef long long lo, hi, p, start, m
    cdef Py_ssize_t t
    lo = 3
    while lo <= limit:
        hi = lo + seg
        if hi > limit + 1:
            hi = limit + 1
        for t in range(nbp):
            p = bp[t]
            if p == 2:
                continue
            if p * p >= hi:
                break
            start = p * p
            if start < lo:
                start = ((lo + p - 1) // p) * p
                if start % 2 == 0:
                    start += p
            m = start
            while m < hi:
                _clear_bit(bits, m)
                m += 2 * p
        lo = hi
    # zero the padding bits above limit in the final byte
    bits[nbytes - 1] &= (<uint8_t>1 << ((limit & 7) + 1)) - 1
    return out


cdef inline void _clear_bit(uint8_t[::1] bits, long long n) nogil:
    bits[n >> 3] &= ~(<uint8_t>1 << (n & 7))


cdef inline void _set_bit(uint8_t[::1] bits, long long n) nogil:
    bits[n >> 3] |= (<uint8_t>1 << (n & 7))


def mobius_sieve(long long limit):
    """mu(n) for 0 <= n <= limit via a linear (smallest-prime-factor) sieve."""
    mu = np.zeros(limit + 1, dtype=np.int8)
    spf = np.zeros(limit + 1, dtype=np.int64)
    primes = np.empty(limit + 1 if limit < 64 else limit // 2, dtype=np.int64)
    cdef int8_t[::1] mv = mu
    cdef int64_t[::1] sv = spf
    cdef int64_t[::1] pv = primes
    cdef long long n, p, np_
    cdef Py_ssize_t cnt = 0, t
    if limit >= 1:
        mv[1] = 1
    for n in range(2, limit + 1):
        if sv[n] == 0:
            sv[n] = n
            mv[n] = -1
            pv[cnt] = n
            cnt += 1
        for t in range(cnt):
            p = pv[t]
            if p > sv[n] or n * p > limit:
                break
            np_ = n * p
            sv[np_] = p
            if p == sv[n] and n % p == 0:
                mv[np_] = 0
            else:
                mv[np_] = -mv[n]
            if p == sv[n]:
                break
    return mu


def prime_sum_chunk(double[::1] primes, double s_re, double s_im, int kind):
    """Sum over a chunk of primes; kind selects the summand.

    kind 0: p^-s
    kind 1: ln(p) * p^-s
    kind 2: ln(p) / (p^s * (p^s - 1))
    kind 3: ln(1 + p^-s)
    """
    cdef Py_ssize_t i, n = primes.shape[0]
    cdef double lp, mod, ph, a, c
    cdef double acc_re = 0.0, acc_im = 0.0
    cdef double complex w, term
    for i in range(n):
        lp = log(primes[i])
        if kind == 0 or kind == 1:
            mod = exp(-s_re * lp)
            ph = -s_im * lp
            a = mod * cos(ph)
            c = mod * sin(ph)
            if kind == 1:
                a *= lp
                c *= lp
            acc_re += a
            acc_im += c
        elif kind == 2:
            mod = exp(s_re * lp)
            ph = s_im * lp
            w = mod * cos(ph) + 1j * (mod * sin(ph))
            term = lp / (w * (w - 1.0))
            acc_re += term.real
            acc_im += term.imag
        else:
            mod = exp(-s_re * lp)
            ph = -s_im * lp
            a = mod * cos(ph)
            c = mod * sin(ph)
            acc_re += 0.5 * log1p(2.0 * a + mod * mod)
            acc_im += atan2(c, 1.0 + a)
    return complex(acc_re, acc_im)
