"""Closed forms against the enumeration oracle, plus the proof
recurrences that the formulas were derived from.

Shapes that fail to be partitions (a formula index gone negative or
non-monotone) contribute the zero polynomial throughout, matching the
vanishing-binomial conventions inside the formulas themselves.
"""

import functools
from itertools import combinations

import pytest

from majdist.closed_forms import (
    DomainError,
    conjecture_formula,
    conjecture_target,
    evaluate_formula,
    f_hook_nk1,
    f_max_descents,
    f_n33,
    f_nk2,
    f_star,
    f_three_row_full,
    f_two_row,
    f_two_row_skew,
    f_two_row_skew_rsum,
    f_two_row_skew_telescope,
    lemma_skew_sum,
    stanley_distribution,
    two_row_total,
)
from majdist.qpoly import QPoly, ZERO, shape_stats
from majdist.shapes import Partition, SkewShape, partitions_of
from majdist.tableaux import distribution, enumerate_syt, statistics


def dist_poly(parts, i):
    """Oracle f_{shape,i}; zero for non-partition index tuples."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if i < 0 or any(p < 0 for p in parts):
        return ZERO
    if any(a < b for a, b in zip(parts, parts[1:])):
        return ZERO
    if not parts:
        return QPoly([1]) if i == 0 else ZERO
    return distribution(SkewShape(Partition(parts))).poly(i)


def skew_poly(n, k, j, i):
    shape = SkewShape(Partition((n, k)), Partition((j,) if j else ()))
    return distribution(shape).poly(i)


def test_two_row_known_values():
    assert f_two_row(3, 1, 1) == QPoly([0, 1, 1, 1])
    assert f_two_row(2, 2, 1) == QPoly([0, 0, 1])
    assert f_two_row(2, 2, 2) == QPoly([0, 0, 0, 0, 1])
    assert f_two_row(5, 0, 0) == 1
    assert f_two_row(5, 0, 1) == ZERO
    assert f_two_row(3, 3, 2) == QPoly([0, 0, 0, 0, 0, 1, 1, 1])


def test_two_row_domain():
    with pytest.raises(DomainError):
        f_two_row(2, 3, 1)
    with pytest.raises(DomainError):
        f_two_row(3, 1, -1)


def test_two_row_against_oracle():
    for n in range(1, 8):
        for k in range(0, n + 1):
            for i in range(0, k + 2):
                assert f_two_row(n, k, i) == dist_poly((n, k), i), (n, k, i)


def test_two_row_total_small():
    for n in range(1, 13):
        for k in range(0, n // 2 + 1):
            total = two_row_total(n, k)
            fsum = ZERO
            for i in range(0, k + 1):
                fsum = fsum + f_two_row(n - k, k, i)
            assert total == fsum
    with pytest.raises(DomainError):
        two_row_total(3, 2)


def test_skew_two_row_against_oracle():
    for n in range(1, 6):
        for k in range(1, n + 1):
            for j in range(0, n):
                for i in range(0, k + 2):
                    assert f_two_row_skew(n, k, j, i) == skew_poly(n, k, j, i)


def test_skew_clause_equivalences():
    for n in range(1, 7):
        for k in range(1, n + 1):
            for j in range(0, n):
                for i in range(1, k + 2):
                    value = f_two_row_skew(n, k, j, i)
                    assert value == f_two_row_skew_rsum(n, k, j, i)
                    tele = ZERO
                    for term in f_two_row_skew_telescope(n, k, j, i):
                        tele = tele + term
                    assert value == tele


def test_skew_known_value():
    # SYT of (3,2)/(1): four one-descent fillings with maj 1,2,2,3
    assert f_two_row_skew(3, 2, 1, 1) == QPoly([0, 1, 2, 1])


def test_f_star_against_oracle():
    for n in range(1, 7):
        for k in range(1, n + 1):
            for j in range(0, n):
                shape = SkewShape(Partition((n, k)), Partition((j,) if j else ()))
                by = {}
                for t in enumerate_syt(shape):
                    if t.row_of()[1] != 0:
                        continue
                    _, des, maj = statistics(t)
                    by.setdefault(des, {})
                    by[des][maj] = by[des].get(maj, 0) + 1
                for i in range(0, k + 2):
                    hist = by.get(i, {})
                    coeffs = [0] * (max(hist) + 1 if hist else 0)
                    for maj, c in hist.items():
                        coeffs[maj] = c
                    assert f_star(n, k, j, i) == QPoly(coeffs), (n, k, j, i)


def test_f_star_recurrence():
    # peel the largest entry off the top row
    for n in range(2, 11):
        for k in range(1, n):
            for j in range(0, n - 1):
                for i in range(2, k + 2):
                    rhs = f_star(n - 1, k, j, i)
                    for ell in range(1, k):
                        rhs = rhs + f_star(n - 1, k - ell, j, i - 1).shift(
                            n - j + k - ell)
                    assert f_star(n, k, j, i) == rhs


def test_hook_against_oracle():
    for n in range(1, 7):
        for k in range(1, n + 1):
            for i in range(0, k + 3):
                assert f_hook_nk1(n, k, i) == dist_poly((n, k, 1), i)


def test_nk2_against_oracle():
    for n in range(2, 7):
        for k in range(2, n + 1):
            for i in range(0, k + 3):
                assert f_nk2(n, k, i) == dist_poly((n, k, 2), i)
    with pytest.raises(DomainError):
        f_nk2(3, 1, 2)


@functools.lru_cache(maxsize=None)
def _last_box_refined(parts):
    """(descents, row of the largest entry) -> polynomial, by enumeration."""
    out = {}
    n = sum(parts)
    for t in enumerate_syt(SkewShape(Partition(parts))):
        _, des, maj = statistics(t)
        key = (des, t.row_of()[n] + 1)
        out.setdefault(key, {})
        out[key][maj] = out[key].get(maj, 0) + 1
    polys = {}
    for key, hist in out.items():
        coeffs = [0] * (max(hist) + 1)
        for maj, c in hist.items():
            coeffs[maj] = c
        polys[key] = QPoly(coeffs)
    return polys


def fj(parts, i, row):
    parts = tuple(p for p in parts if p > 0)
    if any(a < b for a, b in zip(parts, parts[1:])) or i < 0:
        return ZERO
    return _last_box_refined(parts).get((i, row), ZERO)


def test_nk2_proof_recurrences():
    # the three last-box recurrences behind the (n,k,2) formula
    for n in range(2, 9):
        for k in range(2, min(n, 10 - n) + 1):
            for i in range(0, k + 3):
                assert fj((n, k, 2), i, 1) == dist_poly((n - 1, k, 2), i)
                assert fj((n, k, 2), i, 3) == (
                    dist_poly((n, k, 1), i - 1).shift(n + k + 1)
                    - dist_poly((n, k), i - 2).shift(2 * n + 2 * k + 1)
                    + dist_poly((n, k), i - 1).shift(n + k)
                )
                if k >= 3:
                    assert fj((n, k, 2), i, 2) == (
                        dist_poly((n - 1, k - 1, 2), i - 1).shift(n + k + 1)
                        + dist_poly((n, k - 1, 2), i)
                        - dist_poly((n - 1, k - 1, 2), i)
                    )


def test_three_row_full_against_oracle():
    for n in range(1, 7):
        for j in range(0, n + 1):
            for k in range(0, j + 1):
                if n + j + k > 12:
                    continue
                assert f_three_row_full(n, j, k) == dist_poly((n, j, k), j + k)
    with pytest.raises(DomainError):
        f_three_row_full(2, 3, 1)


def test_n33_against_oracle():
    for n in range(3, 7):
        for i in range(2, 7):
            assert f_n33(n, i) == dist_poly((n, 3, 3), i)
    with pytest.raises(DomainError):
        f_n33(4, 7)
    with pytest.raises(DomainError):
        f_n33(2, 2)


def test_three_row_general_recurrence():
    """Recurrence on three-row shapes used to push conjectures upward.

    The inclusion-exclusion over runs at the end of the third row sums
    over nonempty subsets S of {1..lambda_3}, with ell = max(S); the
    oracle pins that reading down.
    """
    for ntot in range(3, 12):
        for parts in partitions_of(ntot):
            if len(parts) != 3:
                continue
            l1, l2, l3 = parts
            for i in range(0, ntot - l1 + 2):
                rhs = (
                    dist_poly((l1 - 1, l2, l3), i)
                    + dist_poly((l1 - 1, l2 - 1, l3), i - 1).shift(ntot - 1)
                    + dist_poly((l1, l2 - 1, l3), i)
                    - dist_poly((l1 - 1, l2 - 1, l3), i)
                )
                for ell in range(1, l3 + 1):
                    for j in range(1, ell + 1):
                        for s_set in combinations(range(1, ell + 1), j):
                            if max(s_set) != ell:
                                continue
                            term = dist_poly((l1, l2, l3 - ell), i - j)
                            if term.is_zero():
                                continue
                            shifted = term.shift(j * ntot - sum(s_set))
                            rhs = rhs + shifted if j % 2 else rhs - shifted
                assert dist_poly(parts, i) == rhs, (parts, i)


def test_general_first_row_recurrence():
    """Split any straight-shape tableau at the last entry of row one."""
    from majdist.shapes import subpartitions

    for ntot in range(1, 11):
        for parts in partitions_of(ntot):
            lam = Partition(parts)
            for i in range(0, ntot - lam[0] + 1):
                rhs = dist_poly((lam[0] - 1,) + parts[1:], i)
                for sigma in subpartitions(lam):
                    if sigma[0] != lam[0] or sigma.size == lam.size:
                        continue
                    if len(sigma) > 1 and sigma[1] > lam[0] - 1:
                        continue
                    head = (lam[0] - 1,) + sigma.parts[1:]
                    mu_dist = distribution(SkewShape(lam, sigma))
                    for j in range(0, i):
                        t1 = dist_poly(head, i - j - 1)
                        t2 = mu_dist.poly(j)
                        if t1.is_zero() or t2.is_zero():
                            continue
                        rhs = rhs + (t1 * t2).shift((j + 1) * sigma.size)
                assert dist_poly(parts, i) == rhs, (parts, i)


def test_max_descents_against_oracle():
    for n in range(1, 9):
        for parts in partitions_of(n):
            lam = Partition(parts)
            i = n - lam[0]
            assert f_max_descents(lam) == dist_poly(parts, i), parts
    with pytest.raises(DomainError):
        f_max_descents(Partition())


def test_stanley_distribution():
    for n in range(1, 9):
        for parts in partitions_of(n):
            lam = Partition(parts)
            assert stanley_distribution(lam) == distribution(SkewShape(lam)).total


def test_lemma_summation():
    for a in range(1, 12):
        for i in range(1, a + 1):
            for j in range(0, a + 1):
                lhs, rhs = lemma_skew_sum(a, i, j)
                assert lhs == rhs
    with pytest.raises(DomainError):
        lemma_skew_sum(3, 0, 1)


def test_cocentric_darga_of_two_row_terms():
    for n in range(2, 11):
        for i in range(1, n // 2 + 1):
            for k in range(i, n // 2 + 1):
                st = shape_stats(f_two_row(n - k, k, i))
                if st.darga is not None:
                    assert st.darga == n * i


def test_conjectures_against_oracle_small():
    cases = [
        ("nn3_i3", {"n": 4}),
        ("nn3_i3", {"n": 5}),
        ("n44_i3", {"n": 5}),
        ("nk3_i2", {"n": 4, "k": 3}),
        ("nk3_i2", {"n": 5, "k": 4}),
        ("n43_i3", {"n": 5}),
        ("n53_i3", {"n": 6}),
    ]
    for formula_id, params in cases:
        shape, i = conjecture_target(formula_id, **params)
        result = conjecture_formula(formula_id, **params)
        assert result.status == "conjecture"
        assert result.value == dist_poly(shape.parts, i), (formula_id, params)


def test_evaluate_formula_dispatch():
    r = evaluate_formula("two_row", {"n": 3, "k": 2, "i": 1})
    assert r.value == f_two_row(3, 2, 1)
    assert r.status == "theorem"
    r = evaluate_formula("stanley", {"shape": "3,2"})
    assert r.value == stanley_distribution(Partition([3, 2]))
    r = evaluate_formula("nk3_i2", {"n": "5", "k": "3"})
    assert r.status == "conjecture"
    with pytest.raises(DomainError):
        evaluate_formula("nope", {})
    with pytest.raises(DomainError):
        evaluate_formula("two_row", {"n": 3})
