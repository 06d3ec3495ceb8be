"""Pure-Python enumeration kernels.

Same contracts as the compiled module ``_speedups``: each function
returns an int64 matrix counts[des, maj] over the relevant family.
Selected by ``_kernels`` when the extension is missing or MAJDIST_PURE
is set; also the reference the compiled kernels are benchmarked against.
"""

from __future__ import annotations

import sys
from typing import Sequence

import numpy as np


def syt_counts(inner: Sequence[int], outer: Sequence[int]) -> np.ndarray:
    """Count standard fillings of outer\\inner by (descents, major index).

    Depth-first placement of the values 1..n into frontier cells, rows
    tried top to bottom, so the traversal order matches the tableau
    stream in ``tableaux.enumerate_syt``.
    """
    rows = len(outer)
    inner = list(inner) + [0] * (rows - len(inner))
    n = sum(outer) - sum(inner)
    counts = np.zeros((max(n, 1), n * (n - 1) // 2 + 1), dtype=np.int64)
    if n == 0:
        counts[0, 0] = 1
        return counts
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))
    frontier = list(inner)

    def rec(v: int, prev_row: int, maj: int, des: int) -> None:
        if v > n:
            counts[des, maj] += 1
            return
        for r in range(rows):
            c = frontier[r]
            if c >= outer[r]:
                continue
            # the cell above must be filled already, or lie outside the shape
            if r and c >= inner[r - 1] and frontier[r - 1] <= c:
                continue
            frontier[r] = c + 1
            if r > prev_row and v > 1:
                rec(v + 1, r, maj + v - 1, des + 1)
            else:
                rec(v + 1, r, maj, des)
            frontier[r] = c

    rec(1, rows, 0, 0)
    return counts


def avoider_counts(n: int) -> np.ndarray:
    """Count 321-avoiding permutations of length n by (descents, major index).

    Builds words left to right and prunes any prefix that already forces
    a 321 pattern, so the work is proportional to the number of avoiding
    prefixes (Catalan-bounded), not to n!.
    """
    counts = np.zeros((max(n, 1), n * (n - 1) // 2 + 1), dtype=np.int64)
    if n == 0:
        counts[0, 0] = 1
        return counts
    used = [False] * (n + 1)

    def rec(pos: int, prev: int, biggest: int, tail: int, maj: int, des: int) -> None:
        # tail: the largest value so far that sits below an earlier larger
        # value; any future value smaller than it would complete 3-2-1.
        if pos > n:
            counts[des, maj] += 1
            return
        for x in range(1, n + 1):
            if used[x] or x < tail:
                continue
            used[x] = True
            if pos > 1 and prev > x:
                nmaj, ndes = maj + pos - 1, des + 1
            else:
                nmaj, ndes = maj, des
            ntail = max(tail, x) if x < biggest else tail
            rec(pos + 1, x, max(biggest, x), ntail, nmaj, ndes)
            used[x] = False

    rec(1, 0, 0, 0, 0, 0)
    return counts
