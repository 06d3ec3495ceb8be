"""Permutation statistics, 321-avoidance, RSK, and the polynomials
A_{n,k}(q) refining maj over 321-avoiders by descent count.

The A polynomials are always computed along two independent routes: the
direct permutation sweep, and the tableau-side sum g^(n-k,k) f_{(n-k,k),i}
over the two-row closed form.  The redundancy is the point: a mismatch
is an implementation bug and raises immediately.
"""

from __future__ import annotations

import os
from typing import Dict, Iterable, Iterator, Sequence

from . import _kernels
from .closed_forms import f_two_row
from .qpoly import QPoly
from .shapes import Partition
from .tableaux import StandardTableau
from .shapes import SkewShape


class Eq3ViolationError(AssertionError):
    """The permutation sweep and the tableau-side sum disagree."""


def permutation_limit() -> int:
    """Cap for full sweeps; override with MAJDIST_PERM_LIMIT."""
    return int(os.environ.get("MAJDIST_PERM_LIMIT", "10"))


class Permutation:
    """An ordered list of 1..n, each exactly once."""

    __slots__ = ("word",)

    word: tuple[int, ...]

    def __init__(self, word: Iterable[int]):
        w = tuple(int(x) for x in word)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
        object.__setattr__(self, "word", w)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self) -> int:
        return hash(("Permutation", self.word))

    def __repr__(self) -> str:
        return f"Permutation({list(self.word)})"


def perm_statistics(p: Permutation | Sequence[int]) -> tuple[frozenset[int], int, int]:
    """(descent set, des, maj); descents are 1-based word positions."""
    w = tuple(p)
    des_set = frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])
    return des_set, len(des_set), sum(des_set)


def avoids_321(p: Permutation | Sequence[int]) -> bool:
    """True iff the longest strictly decreasing subsequence has length <= 2."""
    tail = 0  # largest value seen below an earlier larger value
    biggest = 0
    for x in p:
        if x < tail:
            return False
        if x < biggest:
            tail = max(tail, x)
        else:
            biggest = x
    return True


def avoiders_321(n: int) -> Iterator[Permutation]:
    """All 321-avoiding permutations of length n, lexicographic order.

    Prefixes that already force a 321 pattern are pruned, so the walk is
    Catalan-sized rather than n!-sized.
    """
    used = [False] * (n + 1)
    word: list[int] = []

    def rec(biggest: int, tail: int) -> Iterator[Permutation]:
        if len(word) == n:
            yield Permutation(word)
            return
        for x in range(1, n + 1):
            if used[x] or x < tail:
                continue
            used[x] = True
            word.append(x)
            yield from rec(max(biggest, x), max(tail, x) if x < biggest else tail)
            word.pop()
            used[x] = False

    yield from rec(0, 0)


def rsk(p: Permutation | Sequence[int]) -> tuple[StandardTableau, StandardTableau]:
    """Row-insertion RSK; returns the (P, Q) pair of standard tableaux.

    Des(p) = Des(Q), and the number of rows equals the longest
    decreasing subsequence length of p.
    """
    import bisect

    w = tuple(p)
    prows: list[list[int]] = []
    qrows: list[list[int]] = []
    for pos, x in enumerate(w, start=1):
        r = 0
        while True:
            if r == len(prows):
                prows.append([x])
                qrows.append([pos])
                break
            row = prows[r]
            idx = bisect.bisect_left(row, x)
            if idx == len(row):
                row.append(x)
                qrows[r].append(pos)
                break
            x, row[idx] = row[idx], x
            r += 1
    shape = SkewShape(Partition(len(row) for row in prows))
    tab_p = StandardTableau(shape, tuple(tuple(row) for row in prows))
    tab_q = StandardTableau(shape, tuple(tuple(row) for row in qrows))
    return tab_p, tab_q


def a_polynomials(n: int, limit: int | None = None) -> Dict[int, QPoly]:
    """A_{n,k}(q): maj distribution over S_n(321) with k descents.

    Computed by the direct sweep and by the RSK identity
    A_{n,i} = sum_k g^{(n-k,k)} f_{(n-k,k),i}; both must agree.
    """
    cap = permutation_limit() if limit is None else limit
    if n > cap:
        raise ValueError(f"permutation sweep limit: n={n} > {cap}")
    if n < 1:
        raise ValueError("need n >= 1")
    counts = _kernels.avoider_counts(n)
    direct: Dict[int, QPoly] = {}
    for k in range(counts.shape[0]):
        poly = QPoly(int(c) for c in counts[k])
        if not poly.is_zero():
            direct[k] = poly
    via_tableaux: Dict[int, QPoly] = {}
    for i in range(n):
        acc = QPoly()
        for k in range(i, n // 2 + 1):
            acc = acc + Partition((n - k, k)).frt_count() * f_two_row(n - k, k, i)
        if not acc.is_zero():
            via_tableaux[i] = acc
    if direct != via_tableaux:
        raise Eq3ViolationError(f"permutation sweep disagrees with tableau sum at n={n}")
    return direct
