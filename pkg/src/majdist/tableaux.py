"""Standard and semistandard tableau enumeration and statistics.

``distribution`` is THE oracle: every closed formula in the package is
tested against it.  The exhaustive count runs through a kernel (compiled
when built, pure Python otherwise); ``enumerate_syt`` yields the actual
tableaux in the same deterministic order for anything that needs to see
the fillings.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Dict, Iterator

from . import _kernels
from .qpoly import QPoly, ZERO
from .shapes import Partition, SkewShape

TWO_ROW_CELL_LIMIT = 24


class OracleLimitError(ValueError):
    """The requested shape exceeds the configured enumeration limit."""


def oracle_cell_limit() -> int:
    """Default enumeration cap; override with MAJDIST_ORACLE_LIMIT."""
    return int(os.environ.get("MAJDIST_ORACLE_LIMIT", "18"))


@dataclass(frozen=True)
class StandardTableau:
    """A standard filling of a (skew) shape.

    rows[r] holds the entries of row r, covering the columns
    inner_r .. outer_r - 1 of the outer shape.
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return self.shape.cells

    def row_of(self) -> list[int]:
        """row_of()[v] is the row index holding entry v (index 0 unused)."""
        out = [0] * (self.size + 1)
        for r, row in enumerate(self.rows):
            for v in row:
                out[v] = r
        return out

    def __str__(self) -> str:
        spans = self.shape.row_spans()
        lines = []
        for (start, _), row in zip(spans, self.rows):
            lines.append("." * start + "".join(f"[{v}]" for v in row))
        return "\n".join(lines)


def enumerate_syt(shape: SkewShape) -> Iterator[StandardTableau]:
    """Yield every standard tableau of the shape exactly once.

    Values 1..n are placed in increasing order, candidate rows tried top
    to bottom, so the stream order is deterministic and reproducible.
    The empty shape yields one empty tableau.
    """
    spans = shape.row_spans()
    rows = len(spans)
    n = shape.cells
    grid: list[list[int]] = [[0] * (end - start) for start, end in spans]
    frontier = [start for start, _ in spans]

    def rec(v: int) -> Iterator[StandardTableau]:
        if v > n:
            yield StandardTableau(shape, tuple(tuple(row) for row in grid))
            return
        for r in range(rows):
            c = frontier[r]
            if c >= spans[r][1]:
                continue
            if r and c >= spans[r - 1][0] and frontier[r - 1] <= c:
                continue
            grid[r][c - spans[r][0]] = v
            frontier[r] = c + 1
            yield from rec(v + 1)
            frontier[r] = c

    yield from rec(1)


def statistics(t: StandardTableau) -> tuple[frozenset[int], int, int]:
    """(descent set, des, maj) of a standard tableau.

    i is a descent when entry i+1 sits in a lower row than entry i; in a
    skew shape the entry 1 never opens a descent (there is no entry 0),
    so the convention is automatic.
    """
    row_of = t.row_of()
    n = t.size
    des_set = frozenset(i for i in range(1, n) if row_of[i + 1] > row_of[i])
    return des_set, len(des_set), sum(des_set)


@dataclass(frozen=True)
class DescentDistribution:
    """Map from descent count i to the polynomial f_{shape,i}(q)."""

    shape: SkewShape
    by_descents: Dict[int, QPoly]

    @property
    def total(self) -> QPoly:
        acc = ZERO
        for p in self.by_descents.values():
            acc = acc + p
        return acc

    def poly(self, i: int) -> QPoly:
        """f_{shape,i}; the zero polynomial for absent descent counts."""
        return self.by_descents.get(i, ZERO)

    def to_json(self) -> dict:
        return {
            "shape": str(self.shape),
            "by_descents": {
                str(i): self.by_descents[i].to_json() for i in sorted(self.by_descents)
            },
            "total": self.total.to_json(),
        }


def distribution(shape: SkewShape, limit: int | None = None) -> DescentDistribution:
    """Exact distribution of maj refined by des, by full enumeration.

    Shapes above the cell limit are rejected, except two-row shapes,
    which stay tractable to TWO_ROW_CELL_LIMIT cells.
    """
    cells = shape.cells
    cap = oracle_cell_limit() if limit is None else limit
    if cells > cap and not (len(shape.outer) <= 2 and cells <= TWO_ROW_CELL_LIMIT):
        raise OracleLimitError(f"oracle size limit: {cells} cells > {cap}")
    spans = shape.row_spans()
    counts = _kernels.syt_counts([s for s, _ in spans], [e for _, e in spans])
    by: Dict[int, QPoly] = {}
    for d in range(counts.shape[0]):
        p = QPoly(int(c) for c in counts[d])
        if not p.is_zero():
            by[d] = p
    return DescentDistribution(shape, by)


def ssyt_principal_spec(shape: SkewShape, m: int) -> QPoly:
    """s_shape(1, q, ..., q^(m-1)) by direct semistandard enumeration.

    Fills the cells row-major with entries in 1..m, rows weakly and
    columns strictly increasing, weighting each filling by
    q^(sum of entry-1).  Direct-sum oracle for the Jacobi-Trudi routes.
    """
    if m < 1:
        raise ValueError("need at least one variable")
    spans = shape.row_spans()
    cells = [(r, c) for r, (start, end) in enumerate(spans) for c in range(start, end)]
    weights = [0] * (shape.cells * (m - 1) + 1)
    grid: dict[tuple[int, int], int] = {}

    def rec(idx: int, w: int) -> None:
        if idx == len(cells):
            weights[w] += 1
            return
        r, c = cells[idx]
        lo = grid.get((r, c - 1), 1)
        above = grid.get((r - 1, c))
        if above is not None:
            lo = max(lo, above + 1)
        for e in range(lo, m + 1):
            grid[(r, c)] = e
            rec(idx + 1, w + e - 1)
        grid.pop((r, c), None)

    rec(0, 0)
    return QPoly(weights)
