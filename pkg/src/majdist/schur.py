"""Principal specializations of (skew) Schur functions via Jacobi-Trudi.

Both determinantal routes are provided and cross-checked against the
semistandard enumeration oracle in ``tableaux``.  Note on indexing: the
complete-homogeneous determinant uses the standard Jacobi-Trudi index
lam_i - rho_j - i + j; the enumeration oracle is the ground truth for
that choice.
"""

from __future__ import annotations

from typing import Optional

from .qpoly import ONE, QPoly, ZERO, gauss_binomial, monomial
from .shapes import SkewShape


def _det(mat: list[list[QPoly]]) -> QPoly:
    """Determinant over Z[q] by minor expansion, memoized on column sets."""
    n = len(mat)
    if n == 0:
        return ONE
    memo: dict[int, QPoly] = {}

    def go(r: int, mask: int) -> QPoly:
        if r == n:
            return ONE
        if mask in memo:
            return memo[mask]
        total = ZERO
        sign = 1
        for j in range(n):
            bit = 1 << j
            if not mask & bit:
                continue
            entry = mat[r][j]
            if not entry.is_zero():
                term = entry * go(r + 1, mask & ~bit)
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[mask] = total
        return total

    return go(0, (1 << n) - 1)


def jt_h_specialization(shape: SkewShape, m: int) -> QPoly:
    """s_shape(1, q, ..., q^(m-1)) from the complete-homogeneous determinant.

    Entry (i, j) is the specialized h_d with d = lam_i - rho_j - i + j,
    i.e. the q-binomial [m-1+d choose d]; negative d vanishes through
    the binomial conventions.
    """
    if m < 1:
        raise ValueError("need at least one variable")
    lam, rho = shape.outer, shape.inner
    r = len(lam)
    mat = []
    for i in range(1, r + 1):
        row = []
        for j in range(1, r + 1):
            d = lam[i - 1] - rho[j - 1] - i + j
            row.append(gauss_binomial(m - 1 + d, d))
        mat.append(row)
    return _det(mat)


def jt_e_specialization(shape: SkewShape, m: int) -> QPoly:
    """Dual (elementary) Jacobi-Trudi determinant over the conjugate parts.

    Entry (i, j) is the specialized e_d with d = lam'_i - rho'_j - i + j:
    the q-binomial [m choose d] times q^C(d,2).
    """
    if m < 1:
        raise ValueError("need at least one variable")
    lamc, rhoc = shape.outer.conjugate(), shape.inner.conjugate()
    width = shape.outer[0]
    mat = []
    for i in range(1, width + 1):
        row = []
        for j in range(1, width + 1):
            d = lamc[i - 1] - rhoc[j - 1] - i + j
            g = gauss_binomial(m, d)
            row.append(g.shift(d * (d - 1) // 2) if not g.is_zero() else ZERO)
        mat.append(row)
    return _det(mat)


def match_up_to_shift(p: QPoly, r: QPoly) -> Optional[int]:
    """The s >= 0 with p = q^s * r, or None when no such shift exists."""
    if p.is_zero() and r.is_zero():
        return 0
    if p.is_zero() or r.is_zero():
        return None
    s = p.min_degree() - r.min_degree()
    if s < 0:
        return None
    return s if p == r.shift(s) else None
