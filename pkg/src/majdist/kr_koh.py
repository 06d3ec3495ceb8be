"""Kirillov-Reshetikhin Kostka polynomials for standard content, the
central-degree identity, and the KOH decomposition of q-binomials.

Charge is never computed from its combinatorial definition here: the
Kostka polynomials come out of the KR sum, and they are tied back to
major-index distributions through the reversal relation
K^k(q) = q^C(n,2) f^k(1/q).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .qpoly import ONE, QPoly, ZERO, gauss_binomial as gb
from .shapes import Partition, partitions_of


def binom2(x: int) -> int:
    """x(x-1)/2 for any integer x, negative arguments included."""
    return x * (x - 1) // 2


@dataclass(frozen=True)
class AdmissibleSequence:
    """The sequence alpha^0, alpha^1, ... indexing one KR summand.

    alpha^0 is the single-part partition (|lambda|); |alpha^a| for a >= 1
    is the number of cells of lambda below row a; the sequence is stored
    up to its last nonempty partition.
    """

    alphas: tuple[Partition, ...]

    def part(self, a: int, i: int) -> int:
        """alpha^a_i, 1-based in i, zero outside the stored data."""
        if a < 0 or a >= len(self.alphas) or i < 1:
            return 0
        return self.alphas[a][i - 1]

    def __str__(self) -> str:
        return "; ".join(f"({p})" for p in self.alphas)


def admissible_sequences(lam: Partition, k: int) -> Iterator[AdmissibleSequence]:
    """All admissible sequences for lambda whose alpha^1 has first part k.

    The size constraints force termination: levels are cut off at the
    first index whose required size is zero.
    """
    n = lam.size
    if k < 0 or k > n - lam[0]:
        return
    sizes = []
    for a in range(1, len(lam) or 1):
        size = sum(lam[j] for j in range(a, len(lam)))
        if size == 0:
            break
        sizes.append(size)
    head = (Partition((n,)),) if n else (Partition(),)
    if not sizes:
        if k == 0:
            yield AdmissibleSequence(head)
        return

    def level_choices(a: int) -> tuple[tuple[int, ...], ...]:
        if a == 0:
            if k == 0:
                return ()
            # first part pinned to k
            return tuple((k,) + rest for rest in partitions_of(sizes[0] - k, k))
        return partitions_of(sizes[a])

    def rec(a: int, acc: list[Partition]) -> Iterator[AdmissibleSequence]:
        if a == len(sizes):
            yield AdmissibleSequence(head + tuple(acc))
            return
        for parts in level_choices(a):
            acc.append(Partition(parts))
            yield from rec(a + 1, acc)
            acc.pop()

    yield from rec(0, [])


def charge_exponent(alpha: AdmissibleSequence) -> int:
    """c(alpha) = sum over a,i >= 1 of C(alpha^{a-1}_i - alpha^a_i, 2)."""
    total = 0
    for a in range(1, len(alpha.alphas) + 1):
        width = max(
            len(alpha.alphas[a - 1]),
            len(alpha.alphas[a]) if a < len(alpha.alphas) else 0,
        )
        for i in range(1, width + 1):
            total += binom2(alpha.part(a - 1, i) - alpha.part(a, i))
    return total


def vacancy(alpha: AdmissibleSequence, a: int, i: int) -> int:
    """P_i^a(alpha) = sum_{j<=i} (alpha^{a-1}_j - 2 alpha^a_j + alpha^{a+1}_j)."""
    return sum(
        alpha.part(a - 1, j) - 2 * alpha.part(a, j) + alpha.part(a + 1, j)
        for j in range(1, i + 1)
    )


def kr_summand(alpha: AdmissibleSequence) -> QPoly:
    """q^c(alpha) times the product of q-binomials over a, i >= 1.

    Column differences of zero contribute the factor 1; a vacancy number
    going negative where the column difference is positive kills the
    summand through the vanishing-binomial convention.
    """
    prod = ONE
    for a in range(1, len(alpha.alphas)):
        for i in range(1, len(alpha.alphas[a]) + 1):
            d = alpha.part(a, i) - alpha.part(a, i + 1)
            if d == 0:
                continue
            factor = gb(vacancy(alpha, a, i) + d, d)
            if factor.is_zero():
                return ZERO
            prod = prod * factor
    return prod.shift(charge_exponent(alpha))


def kr_kostka(lam: Partition, k: int) -> QPoly:
    """K^k_{lambda,1^n}(q): charge over SYT of lambda with k descents,
    summed over admissible sequences."""
    acc = ZERO
    for alpha in admissible_sequences(lam, k):
        acc = acc + kr_summand(alpha)
    return acc


def central_degree_identity(alpha: AdmissibleSequence, lam: Partition, k: int) -> bool:
    """Check 2c(alpha) + sum P_i^a d_i^a = 2 C(n,2) - nk, and that any
    nonzero summand has exactly that darga."""
    n = lam.size
    lhs = 2 * charge_exponent(alpha)
    for a in range(1, len(alpha.alphas)):
        for i in range(1, len(alpha.alphas[a]) + 1):
            d = alpha.part(a, i) - alpha.part(a, i + 1)
            if d:
                lhs += vacancy(alpha, a, i) * d
    rhs = 2 * binom2(n) - n * k
    if lhs != rhs:
        return False
    summand = kr_summand(alpha)
    if not summand.is_zero():
        if summand.min_degree() + summand.degree() != rhs:
            return False
    return True


def koh_summand(parts: tuple[int, ...], a: int) -> QPoly:
    """The KOH term for one partition of n inside [n+a choose n]."""
    prefix = [0]
    for p in parts:
        prefix.append(prefix[-1] + p)
    n_parts = len(parts)
    term = ONE
    for j in range(1, n_parts + 1):
        y_prev = prefix[j - 1]
        y_next = prefix[j + 1] if j + 1 <= n_parts else prefix[n_parts]
        low = parts[j - 1] - (parts[j] if j < n_parts else 0)
        term = term * gb(j * (a + 2) - y_prev - y_next, low)
        if term.is_zero():
            return ZERO
    return term.shift(sum(p * p - p for p in parts))


def koh_expansion(n: int, a: int) -> QPoly:
    """[n+a choose n]_q as the sum of cocentric unimodal KOH summands."""
    if n < 0 or a < 0:
        raise ValueError("need n, a >= 0")
    acc = ZERO
    for parts in partitions_of(n):
        acc = acc + koh_summand(parts, a)
    return acc
