# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as ``_pykernels``."""

import array

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil



cdef inline int _bitlen(uint64_t x) nogil:
    if x == 0:
        return 0
    return 64 - __builtin_clzll(x)


cdef inline uint64_t _mod(uint64_t a, uint64_t m) nogil:
    cdef int dm = _bitlen(m)
    cdef int da = _bitlen(a)
    while da >= dm:
        a ^= m << (da - dm)
        da = _bitlen(a)
    return a


def census(const unsigned char[::1] bits, int t):
    if bits.shape[0] == 0:
        return [0] * (1 << t)
    return _census(bits, t)


cdef list _census(const unsigned char[::1] bits, int t):
    cdef Py_ssize_t n = bits.shape[0]
    cdef Py_ssize_t size = (<Py_ssize_t>1) << t
    cdef Py_ssize_t k, j
    cdef uint64_t mask = (<uint64_t>1 << t) - 1
    cdef uint64_t w = 0
    arr = array.array("q", bytes(8 * size))
    cdef long long[::1] c = arr
    for j in range(t):
        w = (w << 1) | bits[j % n]
    for k in range(n):
        c[w] += 1
        w = ((w << 1) | bits[(k + t) % n]) & mask
    return arr.tolist()


def max_zero_run(const unsigned char[::1] bits):
    cdef Py_ssize_t n = bits.shape[0]
    cdef Py_ssize_t first_one = -1, k, best = 0, run = 0
    for k in range(n):
        if bits[k]:
            first_one = k
            break
    if first_one < 0:
        return n
    for k in range(n):
        if bits[(first_one + 1 + k) % n]:
            run = 0
        else:
            run += 1
            if run > best:
                best = run
    return best


def run_tables(const unsigned char[::1] a, const unsigned char[::1] b, int depth):
    cdef Py_ssize_t n = a.shape[0]
    if b.shape[0] != n:
        raise ValueError("length mismatch")
    cdef Py_ssize_t i, first = -1, prev = -1, t
    cdef long long overflow = 0
    arr01 = array.array("q", bytes(8 * depth))
    arr10 = array.array("q", bytes(8 * depth))
    cdef long long[::1] n01 = arr01
    cdef long long[::1] n10 = arr10
    for i in range(n):
        if a[i] != b[i]:
            if prev >= 0:
                t = i - prev - 1
                if t >= depth:
                    overflow += 1
                elif a[prev]:
                    n10[t] += 1
                else:
                    n01[t] += 1
            else:
                first = i
            prev = i
    if prev >= 0:
        t = first + n - prev - 1
        if t >= depth:
            overflow += 1
        elif a[prev]:
            n10[t] += 1
        else:
            n01[t] += 1
    return arr01.tolist(), arr10.tolist(), overflow


def v_sign_sum(int nbits, uint64_t g2):
    if nbits > 62:
        raise ValueError("nbits too large")
    cdef uint64_t f, end = (<uint64_t>1) << nbits
    cdef int top = nbits - 1
    cdef long long total = 0
    with nogil:
        for f in range(end):
            if _mod(f, g2) == 0:
                if (f ^ (f >> top)) & 1:
                    total -= 1
                else:
                    total += 1
    return total


def u_sign_sum(int nbits, uint64_t g1, uint64_t g2):
    if nbits > 62:
        raise ValueError("nbits too large")
    cdef uint64_t f, high, end = (<uint64_t>1) << nbits
    cdef int top = nbits - 1
    cdef long long total = 0, sign, hits
    with nogil:
        for f in range(end):
            if _mod(f, g2) != 0:
                continue
            sign = -1 if (f ^ (f >> top)) & 1 else 1
            high = f & ~(<uint64_t>1)
            hits = 0
            if _mod(high, g1) == 0:
                hits += 1
            if _mod(high | 1, g1) == 0:
                hits += 1
            total += sign * hits
    return total
