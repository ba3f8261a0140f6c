"""Pure-numpy implementation of the counter-based uniform generator.

Bit-identical to the compiled kernel: the same splitmix64-style finalizer
applied to ``key + counter * GOLDEN`` with a per-stream key, so arbitrary
substreams can be generated independently and reproducibly.
"""

from __future__ import annotations

import numpy as np

GOLDEN = 0x9E3779B97F4A7C15
STREAM_SALT = 0xD2B74407B1CE6E93
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_MASK = (1 << 64) - 1

BACKEND_NAME = "numpy"


def _mix_scalar(x: int) -> int:
    x &= _MASK
    x ^= x >> 30
    x = (x * _MIX1) & _MASK
    x ^= x >> 27
    x = (x * _MIX2) & _MASK
    x ^= x >> 31
    return x


def stream_key(seed: int, stream: int) -> int:
    """The 64-bit key for one (seed, stream) substream."""
    return _mix_scalar(((seed * GOLDEN) ^ (stream * STREAM_SALT)) & _MASK)


def uniforms(seed: int, stream: int, counter: int, n: int) -> np.ndarray:
    """n doubles in [0, 1) at counters counter..counter+n-1."""
    key = np.uint64(stream_key(seed, stream))
    idx = np.arange(counter, counter + n, dtype=np.uint64)
    with np.errstate(over="ignore"):
        x = key + idx * np.uint64(GOLDEN)
        x ^= x >> np.uint64(30)
        x *= np.uint64(_MIX1)
        x ^= x >> np.uint64(27)
        x *= np.uint64(_MIX2)
        x ^= x >> np.uint64(31)
    return (x >> np.uint64(11)).astype(np.float64) * 2.0 ** -53
