# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Hot inner loops of the brute-force oracles: standard-tableau counting by
(descents, major index) and the 321-avoiding permutation sweep.  The
pure-Python twin lives in ``_fallback``; both return the same int64
count matrices.
"""

from libc.stdlib cimport free, malloc

import numpy as np

cimport numpy as cnp


cdef void _syt_rec(int v, int n, int rows, int prev_row, int maj, int des,
                   int* frontier, int* inner, int* outer,
                   cnp.int64_t[:, ::1] counts) noexcept nogil:
    cdef int r, c
    if v > n:
        counts[des, maj] += 1
        return
    for r in range(rows):
        c = frontier[r]
        if c >= outer[r]:
            continue
        if r > 0 and c >= inner[r - 1] and frontier[r - 1] <= c:
            continue
        frontier[r] = c + 1
        if r > prev_row and v > 1:
            _syt_rec(v + 1, n, rows, r, maj + v - 1, des + 1,
                     frontier, inner, outer, counts)
        else:
            _syt_rec(v + 1, n, rows, r, maj, des,
                     frontier, inner, outer, counts)
        frontier[r] = c


def syt_counts(inner, outer):
    """counts[des, maj] over standard fillings of outer\\inner."""
    cdef int rows = len(outer)
    cdef list inn = list(inner) + [0] * (rows - len(inner))
    cdef int n = sum(outer) - sum(inn)
    counts_arr = np.zeros((max(n, 1), n * (n - 1) // 2 + 1), dtype=np.int64)
    cdef cnp.int64_t[:, ::1] counts = counts_arr
    if n == 0:
        counts_arr[0, 0] = 1
        return counts_arr
    cdef int* buf = <int*> malloc(3 * rows * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int* frontier = buf
    cdef int* c_inner = buf + rows
    cdef int* c_outer = buf + 2 * rows
    cdef int r
    for r in range(rows):
        frontier[r] = inn[r]
        c_inner[r] = inn[r]
        c_outer[r] = outer[r]
    try:
        with nogil:
            _syt_rec(1, n, rows, rows, 0, 0, frontier, c_inner, c_outer, counts)
    finally:
        free(buf)
    return counts_arr


cdef void _avoid_rec(int pos, int n, int prev, int biggest, int tail,
                     int maj, int des, char* used,
                     cnp.int64_t[:, ::1] counts) noexcept nogil:
    cdef int x, nmaj, ndes, ntail, nbig
    if pos > n:
        counts[des, maj] += 1
        return
    for x in range(1, n + 1):
        if used[x] or x < tail:
            continue
        used[x] = 1
        if pos > 1 and prev > x:
            nmaj = maj + pos - 1
            ndes = des + 1
        else:
            nmaj = maj
            ndes = des
        ntail = tail
        if x < biggest and x > ntail:
            ntail = x
        nbig = biggest if biggest > x else x
        _avoid_rec(pos + 1, n, x, nbig, ntail, nmaj, ndes, used, counts)
        used[x] = 0


def avoider_counts(int n):
    """counts[des, maj] over 321-avoiding permutations of length n."""
    counts_arr = np.zeros((max(n, 1), n * (n - 1) // 2 + 1), dtype=np.int64)
    cdef cnp.int64_t[:, ::1] counts = counts_arr
    if n == 0:
        counts_arr[0, 0] = 1
        return counts_arr
    cdef char* used = <char*> malloc((n + 1) * sizeof(char))
    if used == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n + 1):
        used[i] = 0
    try:
        with nogil:
            _avoid_rec(1, n, 0, 0, 0, 0, 0, used, counts)
    finally:
        free(used)
    return counts_arr
