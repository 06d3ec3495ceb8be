"""Integer partitions, skew shapes, hooks and the hooklength tableau count."""

from __future__ import annotations

import functools
import math
from typing import Iterable, Iterator, Sequence


class ShapeError(ValueError):
    """Malformed partition or skew-shape data."""


class Partition:
    """A weakly decreasing sequence of positive parts.

    Zero-padded input is accepted and trimmed; the empty partition is ().
    Indexing beyond the stored parts returns 0, which matches the
    everything-is-an-infinite-sequence convention used by the formulas.
    """

    __slots__ = ("parts",)

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        ps = [int(p) for p in parts]
        while ps and ps[-1] == 0:
            ps.pop()
        for a, b in zip(ps, ps[1:]):
            if a < b:
                raise ShapeError(f"parts not weakly decreasing: {ps}")
        if ps and ps[-1] < 0:
            raise ShapeError(f"negative part in {ps}")
        object.__setattr__(self, "parts", tuple(ps))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the CLI shape grammar, e.g. "5,3,3,1".  "" is empty."""
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(p) for p in text.split(","))
        except ValueError as exc:
            raise ShapeError(f"bad partition {text!r}: {exc}") from None

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        # 0-indexed, padded with zeros
        if i < 0:
            raise IndexError("negative part index")
        return self.parts[i] if i < len(self.parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(("Partition", self.parts))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def conjugate(self) -> "Partition":
        """Reflect the Ferrers diagram: part j of the conjugate counts rows >= j."""
        if not self.parts:
            return Partition()
        out = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                out[j] += 1
        return Partition(out)

    def contains(self, inner: "Partition") -> bool:
        return all(inner[i] <= self[i] for i in range(len(inner)))

    def hook_lengths(self) -> tuple[tuple[int, ...], ...]:
        """Hook length of cell (i, j): lam_i - j + lam'_j - i - 1, 1-based -> standard grid."""
        conj = self.conjugate()
        return tuple(
            tuple(self.parts[i] - j + conj.parts[j] - i - 1 for j in range(self.parts[i]))
            for i in range(len(self.parts))
        )

    def frt_count(self) -> int:
        """Number of standard Young tableaux, n! / (product of hooks)."""
        num = math.factorial(self.size)
        for row in self.hook_lengths():
            for h in row:
                num, r = divmod(num, h)
                assert r == 0, "hook product must divide n!"
        return num


class SkewShape:
    """outer \\ inner; a straight shape is the special case inner = ()."""

    __slots__ = ("outer", "inner")

    outer: Partition
    inner: Partition

    def __init__(self, outer: Partition, inner: Partition = Partition()):
        if not outer.contains(inner):
            raise ShapeError(f"inner not contained in outer: {outer} / {inner}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        """Parse "5,3,3,1/3,1"; no slash means a straight shape."""
        outer, _, inner = text.partition("/")
        return cls(Partition.parse(outer), Partition.parse(inner))

    @property
    def cells(self) -> int:
        return self.outer.size - self.inner.size

    def is_straight(self) -> bool:
        return self.inner.size == 0

    def row_spans(self) -> tuple[tuple[int, int], ...]:
        """Per row of the outer shape, the half-open column span (start, end)."""
        return tuple((self.inner[r], self.outer[r]) for r in range(len(self.outer)))

    def max_descents(self) -> int:
        """Largest descent number over tableaux of this shape.

        For straight shapes this is |lambda| - lambda_1; skew shapes fall
        back to the enumeration oracle (cached).
        """
        if self.is_straight():
            return self.outer.size - self.outer[0]
        return _skew_max_descents(self.outer.parts, self.inner.parts)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SkewShape)
            and self.outer == other.outer
            and self.inner == other.inner
        )

    def __hash__(self) -> int:
        return hash(("SkewShape", self.outer.parts, self.inner.parts))

    def __str__(self) -> str:
        if self.inner.parts:
            return f"{self.outer}/{self.inner}"
        return str(self.outer)

    def __repr__(self) -> str:
        return f"SkewShape({self})"


def make_skew(outer: Partition, inner: Partition = Partition()) -> SkewShape:
    return SkewShape(outer, inner)


@functools.cache
def _skew_max_descents(outer: Sequence[int], inner: Sequence[int]) -> int:
    from . import tableaux  # deferred: tableaux depends on this module

    dist = tableaux.distribution(SkewShape(Partition(outer), Partition(inner)))
    return max(dist.by_descents)


@functools.cache
def partitions_of(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of n with parts bounded by max_part, largest part first."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    cap = n if max_part is None else min(max_part, n)
    out = []
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All partitions mu with mu_i <= lam_i, the empty one included."""

    def rec(i: int, cap: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if i == len(lam.parts):
            yield tuple(acc)
            return
        for p in range(min(cap, lam.parts[i]), -1, -1):
            acc.append(p)
            yield from rec(i + 1, p, acc)
            acc.pop()
            if p == 0:
                break

    for parts in rec(0, lam[0] if len(lam) else 0, []):
        yield Partition(parts)
