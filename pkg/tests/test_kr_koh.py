from math import comb

import pytest

from majdist.kr_koh import (
    AdmissibleSequence,
    admissible_sequences,
    binom2,
    central_degree_identity,
    charge_exponent,
    koh_expansion,
    koh_summand,
    kr_kostka,
    kr_summand,
    vacancy,
)
from majdist.qpoly import QPoly, ZERO, gauss_binomial, reciprocal_shift, shape_stats
from majdist.shapes import Partition, SkewShape, partitions_of
from majdist.tableaux import distribution


def test_binom2_generalized():
    assert binom2(4) == 6
    assert binom2(0) == 0
    assert binom2(1) == 0
    assert binom2(-1) == 1
    assert binom2(-3) == 6


def test_admissible_sequences_basic():
    lam = Partition([2, 2])
    seqs = list(admissible_sequences(lam, 1))
    assert all(s.alphas[0] == Partition([4]) for s in seqs)
    assert all(s.alphas[1][0] == 1 for s in seqs)
    # k beyond the cell count below the first row: nothing
    assert list(admissible_sequences(lam, 3)) == []
    # single-row shape admits only k = 0
    assert len(list(admissible_sequences(Partition([3]), 0))) == 1
    assert list(admissible_sequences(Partition([3]), 1)) == []


def test_kr_summand_example():
    # ((3), (1)): one box below the top row
    alpha = AdmissibleSequence((Partition([3]), Partition([1])))
    assert charge_exponent(alpha) == 1
    assert vacancy(alpha, 1, 1) == 1
    assert kr_summand(alpha) == QPoly([0, 1, 1])


def test_kr_kostka_small_values():
    assert kr_kostka(Partition([2, 1]), 1) == QPoly([0, 1, 1])
    assert kr_kostka(Partition([2, 2]), 1) == QPoly([0, 0, 0, 0, 1])
    assert kr_kostka(Partition([3]), 0) == QPoly([0, 0, 0, 1])
    assert kr_kostka(Partition([1, 1, 1]), 2) == QPoly([1])


def test_kr_is_reversed_major_distribution():
    for n in range(1, 7):
        big_d = comb(n, 2)
        for parts in partitions_of(n):
            lam = Partition(parts)
            dist = distribution(SkewShape(lam))
            for k in range(0, n):
                f = dist.poly(k)
                expected = reciprocal_shift(f, big_d) if not f.is_zero() else ZERO
                assert kr_kostka(lam, k) == expected, (parts, k)


def test_central_degree_identity():
    for n in range(1, 7):
        for parts in partitions_of(n):
            lam = Partition(parts)
            for k in range(0, n):
                for alpha in admissible_sequences(lam, k):
                    assert central_degree_identity(alpha, lam, k)


def test_koh_expansion_equals_binomial():
    for n in range(0, 9):
        for a in range(0, 9):
            assert koh_expansion(n, a) == gauss_binomial(n + a, n)
    with pytest.raises(ValueError):
        koh_expansion(-1, 2)


def test_koh_summands_cocentric_unimodal():
    for n in range(1, 7):
        for a in range(0, 7):
            for parts in partitions_of(n):
                st = shape_stats(koh_summand(parts, a))
                assert st.symmetric and st.unimodal
                if st.darga is not None:
                    assert st.darga == n * a
