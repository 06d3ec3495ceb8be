"""Compare the compiled enumeration kernels against the pure-Python
fallback on identical workloads.

Run from the repository root:

    python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from majdist import _fallback
from majdist.shapes import Partition, SkewShape

try:
    from majdist import _speedups
except ImportError:
    _speedups = None


SYT_CASES = [
    ("5,4,3,2,1", ""),
    ("6,6,3", ""),
    ("8,7", ""),
    ("7,7,2", "2,1"),
    ("4,4,4,4", ""),
]
AVOIDER_NS = [8, 10, 12]


def spans(outer: str, inner: str):
    shape = SkewShape(Partition.parse(outer), Partition.parse(inner))
    rs = shape.row_spans()
    return [s for s, _ in rs], [e for _, e in rs]


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    if _speedups is None:
        print("compiled kernels unavailable; benchmarking fallback only")
    print(f"{'case':28s} {'fallback':>10s} {'compiled':>10s} {'speedup':>8s}")
    for outer, inner in SYT_CASES:
        inner_s, outer_s = spans(outer, inner)
        t_py, c_py = timed(_fallback.syt_counts, inner_s, outer_s)
        label = f"syt {outer}" + (f"/{inner}" if inner else "")
        if _speedups is None:
            print(f"{label:28s} {t_py:9.4f}s {'-':>10s} {'-':>8s}")
            continue
        t_c, c_c = timed(_speedups.syt_counts, inner_s, outer_s)
        assert np.array_equal(np.asarray(c_py), np.asarray(c_c))
        print(f"{label:28s} {t_py:9.4f}s {t_c:9.4f}s {t_py / t_c:7.1f}x")
    for n in AVOIDER_NS:
        t_py, c_py = timed(_fallback.avoider_counts, n)
        label = f"avoiders n={n}"
        if _speedups is None:
            print(f"{label:28s} {t_py:9.4f}s {'-':>10s} {'-':>8s}")
            continue
        t_c, c_c = timed(_speedups.avoider_counts, n)
        assert np.array_equal(np.asarray(c_py), np.asarray(c_c))
        print(f"{label:28s} {t_py:9.4f}s {t_c:9.4f}s {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
