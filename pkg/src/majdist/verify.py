"""Parameter-sweep verification campaigns.

Every theorem suite compares a closed form against the enumeration
oracle on a finite grid and fails loudly on a single inequality.
Conjecture suites run the same comparison but terminate in a distinct
status ("conjecture-consistent" / "conjecture-refuted") so that a
refutation is recorded as a finding rather than a build failure.

Reports are pure functions of (suite_id, bounds): grids are enumerated
in lexicographic order and findings sorted before emission, so reruns
are byte-identical.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator, Optional

from .closed_forms import (
    CONJECTURES,
    conjecture_formula,
    conjecture_target,
    f_hook_nk1,
    f_max_descents,
    f_n33,
    f_nk2,
    f_three_row_full,
    f_two_row,
    f_two_row_skew,
    f_two_row_skew_telescope,
    lemma_skew_sum,
    stanley_distribution,
    two_row_total,
)
from .kr_koh import (
    admissible_sequences,
    central_degree_identity,
    koh_expansion,
    koh_summand,
    kr_kostka,
)
from .permutations import Eq3ViolationError, a_polynomials, permutation_limit
from .qpoly import (
    QPoly,
    ZERO,
    gauss_binomial,
    monomial,
    reciprocal_shift,
    shape_stats,
)
from .schur import jt_e_specialization, jt_h_specialization, match_up_to_shift
from .shapes import Partition, SkewShape, partitions_of, subpartitions
from .tableaux import distribution, ssyt_principal_spec


class UnknownSuiteError(ValueError):
    """run_suite was asked for a suite id that does not exist."""


@dataclass(frozen=True)
class Finding:
    """One grid point: the oracle value, the formula value, and shape
    diagnostics of the formula value."""

    params: tuple[tuple[str, object], ...]
    expected: QPoly
    actual: QPoly
    equal: bool
    symmetric: bool
    unimodal: bool
    darga: Optional[int]

    @classmethod
    def compare(cls, params: dict, expected: QPoly, actual: QPoly) -> "Finding":
        st = shape_stats(actual)
        return cls(
            params=tuple(sorted(params.items())),
            expected=expected,
            actual=actual,
            equal=expected == actual,
            symmetric=st.symmetric,
            unimodal=st.unimodal,
            darga=st.darga,
        )

    def sort_key(self) -> str:
        return repr(self.params)

    def to_json(self) -> dict:
        return {
            "params": {k: v for k, v in self.params},
            "expected": self.expected.to_json(),
            "actual": self.actual.to_json(),
            "equal": self.equal,
            "symmetric": self.symmetric,
            "unimodal": self.unimodal,
            "darga": self.darga,
        }

    def csv_row(self) -> list:
        params = ";".join(f"{k}={v}" for k, v in self.params)
        return [params, self.equal, self.symmetric, self.unimodal,
                "" if self.darga is None else self.darga]


@dataclass(frozen=True)
class Report:
    suite_id: str
    grid: str
    findings: tuple[Finding, ...]
    status: str  # all-pass | mismatches | conjecture-consistent | conjecture-refuted

    @property
    def passed(self) -> bool:
        return self.status in ("all-pass", "conjecture-consistent")

    def failures(self) -> list[Finding]:
        return [f for f in self.findings if not f.equal or not f.unimodal]

    def to_json(self) -> dict:
        return {
            "suite_id": self.suite_id,
            "grid": self.grid,
            "status": self.status,
            "case_count": len(self.findings),
            "findings": [f.to_json() for f in self.findings],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["suite_id", "params", "equal", "symmetric", "unimodal", "darga"])
        for f in self.findings:
            writer.writerow([self.suite_id] + f.csv_row())
        return buf.getvalue()


def _report(suite_id: str, grid: str, findings: list[Finding], kind: str,
            require_unimodal: bool = False) -> Report:
    findings = sorted(findings, key=Finding.sort_key)
    ok = all(f.equal and (f.unimodal or not require_unimodal) for f in findings)
    if kind == "theorem":
        status = "all-pass" if ok else "mismatches"
    else:
        status = "conjecture-consistent" if ok else "conjecture-refuted"
    return Report(suite_id, grid, tuple(findings), status)


def _oracle_poly(shape: SkewShape, i: int) -> QPoly:
    return distribution(shape).poly(i)


# ---------------------------------------------------------------------------
# theorem suites


def _suite_two_row(bounds: dict) -> Report:
    cells = bounds.get("max_cells", 16)
    findings = []
    for n in range(1, cells + 1):
        for k in range(0, min(n, cells - n) + 1):
            dist = distribution(SkewShape(Partition((n, k) if k else (n,))))
            for i in range(0, k + 2):
                findings.append(Finding.compare(
                    {"n": n, "k": k, "i": i}, dist.poly(i), f_two_row(n, k, i)))
    return _report("two_row", f"rows (n,k), n+k <= {cells}, all i", findings, "theorem")


def _suite_hook_nk1(bounds: dict) -> Report:
    cells = bounds.get("max_cells", 14)
    findings = []
    for n in range(1, cells):
        for k in range(1, min(n, cells - n - 1) + 1):
            dist = distribution(SkewShape(Partition((n, k, 1))))
            for i in range(0, k + 3):
                findings.append(Finding.compare(
                    {"n": n, "k": k, "i": i}, dist.poly(i), f_hook_nk1(n, k, i)))
    return _report("hook_nk1", f"shape (n,k,1), n+k+1 <= {cells}, all i", findings, "theorem")


def _suite_skew_two_row(bounds: dict) -> Report:
    cells = bounds.get("max_cells", 13)
    max_n = bounds.get("max_n", 14)
    findings = []
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            for j in range(0, n):
                if n + k - j > cells:
                    continue
                shape = SkewShape(Partition((n, k)), Partition((j,) if j else ()))
                dist = distribution(shape)
                for i in range(1, k + 2):
                    oracle = dist.poly(i)
                    value = f_two_row_skew(n, k, j, i)
                    findings.append(Finding.compare(
                        {"n": n, "k": k, "j": j, "i": i}, oracle, value))
                    tele = ZERO
                    for term in f_two_row_skew_telescope(n, k, j, i):
                        tele = tele + term
                    findings.append(Finding.compare(
                        {"n": n, "k": k, "j": j, "i": i, "check": "telescope"},
                        oracle, tele))
    return _report(
        "skew_two_row",
        f"(n,k)\\(j), n <= {max_n}, n+k-j <= {cells}, i >= 1",
        findings, "theorem", require_unimodal=True)


def _suite_nk2(bounds: dict) -> Report:
    cells = bounds.get("max_cells", 14)
    findings = []
    for n in range(2, cells - 3):
        for k in range(2, min(n, cells - n - 2) + 1):
            dist = distribution(SkewShape(Partition((n, k, 2))))
            for i in range(0, k + 3):
                findings.append(Finding.compare(
                    {"n": n, "k": k, "i": i}, dist.poly(i), f_nk2(n, k, i)))
    return _report("nk2", f"shape (n,k,2), n+k+2 <= {cells}, all i", findings, "theorem")


def _suite_max_descents(bounds: dict) -> Report:
    max_n = bounds.get("max_n", 11)
    findings = []
    for n in range(1, max_n + 1):
        for parts in partitions_of(n):
            lam = Partition(parts)
            i = n - lam[0]
            findings.append(Finding.compare(
                {"shape": str(lam), "i": i},
                _oracle_poly(SkewShape(lam), i),
                f_max_descents(lam)))
    return _report("max_descents", f"all shapes of n <= {max_n} cells, maximal i",
                   findings, "theorem")


def _suite_three_row_full(bounds: dict) -> Report:
    cells = bounds.get("max_cells", 14)
    findings = []
    for n in range(1, cells + 1):
        for j in range(0, min(n, cells - n) + 1):
            for k in range(0, min(j, cells - n - j) + 1):
                parts = tuple(p for p in (n, j, k) if p)
                dist = distribution(SkewShape(Partition(parts)))
                findings.append(Finding.compare(
                    {"n": n, "j": j, "k": k},
                    dist.poly(j + k), f_three_row_full(n, j, k)))
    return _report("three_row_full", f"shape (n,j,k), n+j+k <= {cells}, i = j+k",
                   findings, "theorem")


def _suite_shift_match(bounds: dict) -> Report:
    """Maximal-descent distributions depend on the shape below the first
    row only up to a power of q: match against the principally
    specialized Schur polynomial of the conjugate."""
    max_vars = bounds.get("max_vars", 6)
    max_size = bounds.get("max_size", 8)
    findings = []
    for k in range(1, max_vars + 1):
        for size in range(1, max_size + 1):
            for parts in partitions_of(size, k):
                beta = Partition(parts)
                if len(beta) > k:
                    continue
                lam = Partition((k,) + beta.conjugate().parts)
                dist = distribution(SkewShape(lam))
                oracle = dist.poly(size)
                spec = ssyt_principal_spec(SkewShape(beta), k)
                s = match_up_to_shift(oracle, spec)
                actual = spec.shift(s) if s is not None else spec
                findings.append(Finding.compare(
                    {"beta": str(beta), "k": k}, oracle, actual))
    return _report("shift_match", f"beta with <= {max_vars} parts, |beta| <= {max_size}",
                   findings, "theorem")


def _suite_n33(bounds: dict) -> Report:
    max_n = bounds.get("max_n", 8)
    findings = []
    for n in range(3, max_n + 1):
        dist = distribution(SkewShape(Partition((n, 3, 3))))
        for i in range(2, 7):
            findings.append(Finding.compare(
                {"n": n, "i": i}, dist.poly(i), f_n33(n, i)))
    return _report("n33", f"shape (n,3,3), 3 <= n <= {max_n}, i = 2..6",
                   findings, "theorem")


def _suite_stanley(bounds: dict) -> Report:
    max_n = bounds.get("max_n", 12)
    findings = []
    for n in range(1, max_n + 1):
        for parts in partitions_of(n):
            lam = Partition(parts)
            dist = distribution(SkewShape(lam))
            total = ZERO
            for poly in dist.by_descents.values():
                total = total + poly
            findings.append(Finding.compare(
                {"shape": str(lam)}, total, stanley_distribution(lam)))
    return _report("stanley", f"all shapes of n <= {max_n} cells", findings, "theorem")


def _suite_two_row_total(bounds: dict) -> Report:
    max_n = bounds.get("max_n", 14)
    findings = []
    for n in range(1, max_n + 1):
        for k in range(0, n // 2 + 1):
            dist = distribution(SkewShape(Partition((n - k, k) if k else (n - k,))))
            oracle = ZERO
            for poly in dist.by_descents.values():
                oracle = oracle + poly
            value = two_row_total(n, k)
            findings.append(Finding.compare({"n": n, "k": k}, oracle, value))
            fsum = ZERO
            for i in range(0, k + 1):
                fsum = fsum + f_two_row(n - k, k, i)
            findings.append(Finding.compare(
                {"n": n, "k": k, "check": "descent_sum"}, fsum, value))
    return _report("two_row_total", f"n <= {max_n}, 0 <= k <= n/2", findings, "theorem")


def _suite_lemma(bounds: dict) -> Report:
    max_a = bounds.get("max_a", 20)
    findings = []
    for a in range(1, max_a + 1):
        for i in range(1, a + 1):
            for j in range(0, a + 1):
                lhs, rhs = lemma_skew_sum(a, i, j)
                findings.append(Finding.compare({"a": a, "i": i, "j": j}, lhs, rhs))
    return _report("lemma", f"1 <= i <= a <= {max_a}, 0 <= j <= a", findings, "theorem")


def _suite_sagan(bounds: dict) -> Report:
    n = bounds.get("n", min(8, permutation_limit()))
    return sagan(n)


def sagan(n: int) -> Report:
    """Unimodality of the refined 321-avoider polynomials A_{n,k}, the
    permutation/tableau equality behind them, and unimodality of all
    two-row skew distributions with at most n cells."""
    findings = []
    try:
        polys = a_polynomials(n)
    except Eq3ViolationError:
        from ._kernels import avoider_counts

        counts = avoider_counts(n)
        polys = {k: QPoly(int(c) for c in counts[k])
                 for k in range(counts.shape[0]) if any(counts[k])}
        findings.append(Finding.compare({"n": n, "check": "routes"}, ZERO, monomial(0)))
    for k in sorted(polys):
        findings.append(Finding.compare({"n": n, "k": k}, polys[k], polys[k]))
        findings.append(Finding.compare(
            {"n": n, "k": k, "check": "cocentric"},
            monomial(n * k) if polys[k].is_zero() else
            monomial(polys[k].min_degree() + polys[k].degree()),
            monomial(n * k)))
    for m in range(2, n + 1):
        for a in range(1, m):
            b = m - a
            if b > a:
                continue
            for j in range(0, a):
                shape = SkewShape(Partition((a, b)), Partition((j,) if j else ()))
                dist = distribution(shape)
                for i, poly in sorted(dist.by_descents.items()):
                    findings.append(Finding.compare(
                        {"shape": str(shape), "i": i, "check": "skew_unimodal"},
                        poly, poly))
    return _report("sagan", f"A_{{n,k}} at n = {n}; skew two-row shapes <= {n} cells",
                   findings, "theorem", require_unimodal=True)


def cocentricity(n: int, i: int) -> bool:
    """True iff every nonzero two-row f with i descents and n total cells
    has darga exactly n*i."""
    if n < 1 or i < 1:
        raise ValueError("stated for n >= 1, i >= 1")
    for k in range(i, n // 2 + 1):
        poly = f_two_row(n - k, k, i)
        if poly.is_zero():
            continue
        if poly.min_degree() + poly.degree() != n * i:
            return False
    return True


def _suite_kr(bounds: dict) -> Report:
    max_n = bounds.get("max_n", 8)
    findings = []
    for n in range(1, max_n + 1):
        big_d = comb(n, 2)
        for parts in partitions_of(n):
            lam = Partition(parts)
            dist = distribution(SkewShape(lam))
            for k in range(0, n):
                f = dist.poly(k)
                expected = reciprocal_shift(f, big_d) if not f.is_zero() else ZERO
                findings.append(Finding.compare(
                    {"shape": str(lam), "k": k}, expected, kr_kostka(lam, k)))
                target = monomial(2 * comb(n, 2) - n * k)
                ok = all(central_degree_identity(alpha, lam, k)
                         for alpha in admissible_sequences(lam, k))
                findings.append(Finding.compare(
                    {"shape": str(lam), "k": k, "check": "central_degree"},
                    target, target if ok else ZERO))
    return _report("kr", f"all shapes of n <= {max_n} cells, all k", findings, "theorem")


def _suite_koh(bounds: dict) -> Report:
    cells = bounds.get("max_cells", 14)
    findings = []
    for n in range(0, cells + 1):
        for a in range(0, cells - n + 1):
            findings.append(Finding.compare(
                {"n": n, "a": a}, gauss_binomial(n + a, n), koh_expansion(n, a)))
            target = monomial(n * a)
            ok = True
            for parts in partitions_of(n):
                st = shape_stats(koh_summand(parts, a))
                if st.darga is None:
                    continue
                if not (st.symmetric and st.unimodal and st.darga == n * a):
                    ok = False
            findings.append(Finding.compare(
                {"n": n, "a": a, "check": "summands"}, target, target if ok else ZERO))
    return _report("koh", f"n + a <= {cells}", findings, "theorem")


def _jt_shapes(max_straight: int, max_skew_outer: int) -> Iterator[SkewShape]:
    for n in range(0, max_straight + 1):
        for parts in partitions_of(n):
            yield SkewShape(Partition(parts))
    for n in range(1, max_skew_outer + 1):
        for parts in partitions_of(n):
            outer = Partition(parts)
            for inner_parts in subpartitions(outer):
                if inner_parts and Partition(inner_parts).size > 0:
                    yield SkewShape(outer, Partition(inner_parts))


def _suite_jt(bounds: dict) -> Report:
    max_straight = bounds.get("max_straight", 8)
    max_skew_outer = bounds.get("max_skew_outer", 8)
    max_vars = bounds.get("max_vars", 6)
    findings = []
    for shape in _jt_shapes(max_straight, max_skew_outer):
        for m in range(1, max_vars + 1):
            oracle = ssyt_principal_spec(shape, m)
            findings.append(Finding.compare(
                {"shape": str(shape), "m": m, "method": "h"},
                oracle, jt_h_specialization(shape, m)))
            findings.append(Finding.compare(
                {"shape": str(shape), "m": m, "method": "e"},
                oracle, jt_e_specialization(shape, m)))
    return _report(
        "jt",
        f"straight shapes <= {max_straight} cells and skew shapes with outer <= "
        f"{max_skew_outer} cells, m <= {max_vars}",
        findings, "theorem", require_unimodal=True)


# ---------------------------------------------------------------------------
# conjecture suites


_CONJ_GRID_DEFAULTS = {
    "nn3_i3": {"max_n": 6},
    "n44_i3": {"max_n": 6},
    "nk3_i2": {"max_cells": 14},
    "n43_i3": {"max_n": 7},
    "n53_i3": {"max_n": 6},
}


def _conjecture_grid(formula_id: str, bounds: dict) -> Iterator[dict]:
    defaults = _CONJ_GRID_DEFAULTS[formula_id]
    if formula_id == "nk3_i2":
        cells = bounds.get("max_cells", defaults["max_cells"])
        for n in range(3, cells - 5):
            for k in range(3, min(n, cells - n - 3) + 1):
                yield {"n": n, "k": k}
    else:
        lo = {"nn3_i3": 3, "n44_i3": 4, "n43_i3": 4, "n53_i3": 5}[formula_id]
        for n in range(lo, bounds.get("max_n", defaults["max_n"]) + 1):
            yield {"n": n}


def _conjecture_suite(formula_id: str) -> Callable[[dict], Report]:
    def run(bounds: dict) -> Report:
        findings = []
        for params in _conjecture_grid(formula_id, bounds):
            shape, i = conjecture_target(formula_id, **params)
            oracle = _oracle_poly(SkewShape(shape), i)
            value = conjecture_formula(formula_id, **params).value
            findings.append(Finding.compare(params, oracle, value))
        return _report(f"conj_{formula_id}", f"conjectured family {formula_id}",
                       findings, "conjecture")
    return run


def _suite_conj_skew_unimodal(bounds: dict) -> Report:
    max_outer = bounds.get("max_outer", 12)
    max_cells = bounds.get("max_cells", 11)
    findings = []
    for n in range(1, max_outer + 1):
        for parts in partitions_of(n):
            outer = Partition(parts)
            for inner_parts in subpartitions(outer):
                inner = Partition(inner_parts)
                if n - inner.size > max_cells or n == inner.size:
                    continue
                shape = SkewShape(outer, inner)
                dist = distribution(shape)
                for i, poly in sorted(dist.by_descents.items()):
                    findings.append(Finding.compare(
                        {"shape": str(shape), "i": i}, poly, poly))
    return _report(
        "conj_skew_unimodal",
        f"skew shapes, outer <= {max_outer} cells, <= {max_cells} skew cells",
        findings, "conjecture", require_unimodal=True)


# ---------------------------------------------------------------------------
# registry


SUITES: dict[str, Callable[[dict], Report]] = {
    "two_row": _suite_two_row,
    "hook_nk1": _suite_hook_nk1,
    "skew_two_row": _suite_skew_two_row,
    "nk2": _suite_nk2,
    "max_descents": _suite_max_descents,
    "three_row_full": _suite_three_row_full,
    "shift_match": _suite_shift_match,
    "n33": _suite_n33,
    "stanley": _suite_stanley,
    "two_row_total": _suite_two_row_total,
    "lemma": _suite_lemma,
    "sagan": _suite_sagan,
    "kr": _suite_kr,
    "koh": _suite_koh,
    "jt": _suite_jt,
    "conj_skew_unimodal": _suite_conj_skew_unimodal,
}
for _fid in CONJECTURES:
    SUITES[f"conj_{_fid}"] = _conjecture_suite(_fid)


def run_suite(suite_id: str, bounds: Optional[dict] = None) -> Report:
    """Run one verification campaign on its default (or overridden) grid."""
    if suite_id not in SUITES:
        raise UnknownSuiteError(
            f"unknown suite {suite_id!r}; known: {', '.join(sorted(SUITES))}")
    return SUITES[suite_id](bounds or {})
