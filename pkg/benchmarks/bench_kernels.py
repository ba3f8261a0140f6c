"""Compare the compiled uniform kernel against the numpy fallback.

Run:  python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from phantomprob.kernels import _fallback

try:
    from phantomprob.kernels import _kernels
except ImportError:
    _kernels = None


def bench(fn, n, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(42, 0, 0, n)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    n = 10_000_000
    t_np = bench(_fallback.uniforms, n)
    print(f"numpy fallback : {n} uniforms in {t_np * 1e3:8.2f} ms "
          f"({n / t_np / 1e6:.1f} M/s)")
    if _kernels is None:
        print("compiled kernel: not built")
        return
    t_cy = bench(_kernels.uniforms, n)
    print(f"compiled kernel: {n} uniforms in {t_cy * 1e3:8.2f} ms "
          f"({n / t_cy / 1e6:.1f} M/s)")
    print(f"speedup: {t_np / t_cy:.2f}x")
    a = _fallback.uniforms(42, 7, 123, 100_000)
    b = _kernels.uniforms(42, 7, 123, 100_000)
    print("bit-identical:", bool(np.array_equal(a, b)))


if __name__ == "__main__":
    main()
