# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled counter-based uniform generator.

Must stay bit-identical to the numpy fallback in _fallback.py: the same
splitmix64-style finalizer over key + counter * GOLDEN.
"""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport uint64_t

cnp.import_array()

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15ULL
cdef uint64_t STREAM_SALT = 0xD2B74407B1CE6E93ULL
cdef uint64_t MIX1 = 0xBF58476D1CE4E5B9ULL
cdef uint64_t MIX2 = 0x94D049BB133111EBULL

BACKEND_NAME = "cython"


cdef inline uint64_t _mix(uint64_t x) nogil:
    x ^= x >> 30
    x *= MIX1
    x ^= x >> 27
    x *= MIX2
    x ^= x >> 31
    return x


def stream_key(seed, stream):
    """The 64-bit key for one (seed, stream) substream."""
    cdef uint64_t s = <uint64_t> (seed & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t t = <uint64_t> (stream & 0xFFFFFFFFFFFFFFFF)
    return int(_mix((s * GOLDEN) ^ (t * STREAM_SALT)))


def uniforms(seed, stream, counter, Py_ssize_t n):
    """n doubles in [0, 1) at counters counter..counter+n-1."""
    cdef uint64_t key = <uint64_t> stream_key(seed, stream)
    cdef uint64_t c0 = <uint64_t> (counter & 0xFFFFFFFFFFFFFFFF)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef double[:] view = out
    cdef Py_ssize_t i
    cdef uint64_t x
    with nogil:
        for i in range(n):
            x = _mix(key + (c0 + <uint64_t> i) * GOLDEN)
            view[i] = <double> (x >> 11) * (1.0 / 9007199254740992.0)
    return out
