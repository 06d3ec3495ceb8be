"""Closed formulas for major-index distributions with fixed descent number.

Every function returns the exact polynomial f_{shape,i}(q).  Theorem
formulas are stated for i >= 1; the i = 0 case is routed around them:
the value is 1 exactly when the shape admits a zero-descent tableau and
0 otherwise.  Product forms are evaluated as a single numerator product
divided by the full denominator product, so a nonzero remainder always
means a bug or out-of-domain parameters, never silent truncation.

Conjectured families (the two terminal-point formulas and the
(n,k,3)-type family) are quarantined behind FormulaResult.status ==
"conjecture"; they are compared with the oracle but never asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

from .qpoly import (
    ONE,
    QPoly,
    ZERO,
    exact_div,
    gauss_binomial as gb,
    monomial,
    one_minus_q,
    q_pochhammer,
)
from .schur import jt_e_specialization
from .shapes import Partition, SkewShape


class DomainError(ValueError):
    """Parameters outside a formula's stated domain."""


class ClauseMismatchError(AssertionError):
    """Two clauses of the same theorem evaluated to different polynomials."""


# ---------------------------------------------------------------------------
# two-row shapes


def two_row_difference(a: int, b: int, i: int) -> QPoly:
    """q^(i^2) * ([a,i][b,i] - [a+1,i][b-1,i]), total over integer inputs.

    Equals f_{(a,b),i} when (a,b) is a partition; used raw by the
    telescoping decomposition, where non-partition index pairs occur.
    """
    return (gb(a, i) * gb(b, i) - gb(a + 1, i) * gb(b - 1, i)).shift(i * i)


def f_two_row(n: int, k: int, i: int) -> QPoly:
    """f_{(n,k),i}: major-index distribution over SYT of a two-row shape.

    Evaluates both clauses of the closed form (quotient-product and
    difference of q-binomial products) and insists they agree.
    """
    if n < k or k < 0:
        raise DomainError(f"not a partition: ({n},{k})")
    if i < 0:
        raise DomainError("negative descent count")
    if i == 0:
        return ONE if k == 0 else ZERO
    num = one_minus_q(n - k + 1) * gb(n, i - 1) * gb(k - 1, i - 1)
    product_form = exact_div(num, one_minus_q(i)).shift(k + i * i - i)
    difference_form = two_row_difference(n, k, i)
    if product_form != difference_form:
        raise ClauseMismatchError(f"f_two_row clauses disagree at {(n, k, i)}")
    return product_form


def two_row_total(n: int, k: int) -> QPoly:
    """Distribution of maj over all SYT of shape (n-k, k): [n,k] - [n,k-1]."""
    if not n >= 2 * k >= 0:
        raise DomainError(f"need n >= 2k >= 0, got ({n},{k})")
    return gb(n, k) - gb(n, k - 1)


# ---------------------------------------------------------------------------
# two-row skew shapes


def f_two_row_skew(n: int, k: int, j: int, i: int) -> QPoly:
    """f_{(n,k) \\ (j), i} for n >= k > 0, 0 <= j < n.

    The i >= 1 value is q^(i^2)([n-j,i][k,i] - [n+1,i][k-j-1,i]); it is
    cross-checked against the r-indexed proof decomposition.  A
    zero-descent tableau exists exactly when the rows do not overlap
    (j >= k), in which case it is unique.
    """
    _check_skew_domain(n, k, j)
    if i < 0:
        raise DomainError("negative descent count")
    if i == 0:
        return ONE if j >= k else ZERO
    value = (gb(n - j, i) * gb(k, i) - gb(n + 1, i) * gb(k - j - 1, i)).shift(i * i)
    rsum = f_two_row_skew_rsum(n, k, j, i)
    if value != rsum:
        raise ClauseMismatchError(f"skew formula vs r-sum at {(n, k, j, i)}")
    return value


def f_two_row_skew_rsum(n: int, k: int, j: int, i: int) -> QPoly:
    """The r-indexed decomposition: summand r covers tableaux whose top
    row starts with the entry r."""
    _check_skew_domain(n, k, j)
    if i < 1:
        raise DomainError("r-sum stated for i >= 1")
    acc = ZERO
    for r in range(1, j + 2):
        term = gb(n - j, i) * gb(k - r, i - 1) - gb(n - r + 1, i - 1) * gb(k - j - 1, i)
        acc = acc + term.shift(i * i + i * (r - 1))
    return acc


def f_star(n: int, k: int, j: int, i: int) -> QPoly:
    """Distribution over skew tableaux of (n,k)\\(j) with i descents and
    the entry 1 in the top row."""
    _check_skew_domain(n, k, j)
    if i < 0:
        raise DomainError("negative descent count")
    if i == 0:
        return ZERO  # with k > 0 the second row forces a descent
    return (gb(n - j, i) * gb(k - 1, i - 1) - gb(n, i - 1) * gb(k - j - 1, i)).shift(i * i)


def f_two_row_skew_telescope(n: int, k: int, j: int, i: int) -> list[QPoly]:
    """The telescoping summands whose total is f_{(n,k)\\(j),i}.

    Summand s is the raw two-row difference at (n-s, k-j+s); each
    nonzero one is cocentric at darga (n-j+k)i, which is what makes the
    skew distribution unimodal.
    """
    _check_skew_domain(n, k, j)
    return [two_row_difference(n - s, k - j + s, i) for s in range(j + 1)]


def _check_skew_domain(n: int, k: int, j: int) -> None:
    if not (n >= k > 0 and 0 <= j < n):
        raise DomainError(f"out of theorem domain: ({n},{k})\\({j})")


# ---------------------------------------------------------------------------
# three-row families


def f_hook_nk1(n: int, k: int, i: int) -> QPoly:
    """f_{(n,k,1),i}.  The factor (1-q^(i-1)) kills i = 1, matching the
    two-descent minimum of the shape."""
    if not n >= k >= 1:
        raise DomainError(f"not a partition shape: ({n},{k},1)")
    if i < 0:
        raise DomainError("negative descent count")
    if i == 0:
        return ZERO
    num = one_minus_q(n - k + 1) * one_minus_q(i - 1) * gb(k, i - 1) * gb(n + 1, i - 1)
    den = one_minus_q(i) * one_minus_q(1)
    return exact_div(num, den).shift(k + i * i - 2 * i + 2)


def f_nk2(n: int, k: int, i: int) -> QPoly:
    """f_{(n,k,2),i} for n >= k >= 2.  Zero for i <= 1 (the shape has at
    least two descents); the closed form itself is stated for i >= 2."""
    if not n >= k >= 2:
        raise DomainError(f"out of theorem domain: ({n},{k},2)")
    if i < 0:
        raise DomainError("negative descent count")
    if i <= 1:
        return ZERO
    num = (
        one_minus_q(n - k + 1)
        * one_minus_q(k - 1)
        * one_minus_q(n)
        * gb(n + 1, i - 2)
        * gb(k, i - 2)
    )
    den = one_minus_q(i - 1) * one_minus_q(1) * one_minus_q(2)
    return exact_div(num, den).shift(k + i * i - 3 * i + 6)


def f_three_row_full(n: int, j: int, k: int) -> QPoly:
    """f_{(n,j,k), j+k}: three rows with the maximum number of descents."""
    if not n >= j >= k >= 0:
        raise DomainError(f"need n >= j >= k >= 0, got ({n},{j},{k})")
    value = gb(n, j) * gb(n, k) - (gb(n, j + 1) * gb(n, k - 1)).shift(j - k + 1)
    return value.shift(j * j + j * k + k * k)


def f_n33(n: int, i: int) -> QPoly:
    """f_{(n,3,3),i}, one clause per descent count i in 2..6."""
    if n < 3:
        raise DomainError(f"need n >= 3, got {n}")
    if i == 2:
        return gb(n - 1, 2).shift(9)
    if i == 3:
        return (gb(n - 1, 2) * gb(n + 3, 1)).shift(11) + (gb(n, 3) * gb(4, 1)).shift(12)
    if i == 4:
        return ((gb(n - 1, 2) * gb(n + 2, 2)) + (gb(n + 1, 4) * gb(5, 2))).shift(15)
    if i == 5:
        return (gb(n - 1, 2) * gb(n + 1, 3)).shift(21) + (gb(n + 1, 4) * gb(n + 3, 1)).shift(20)
    if i == 6:
        num = (
            one_minus_q(n - 2)
            * one_minus_q(n - 1) ** 2
            * one_minus_q(n) ** 2
            * one_minus_q(n + 1)
        )
        den = (
            one_minus_q(1)
            * one_minus_q(2) ** 2
            * one_minus_q(3) ** 2
            * one_minus_q(4)
        )
        product_form = exact_div(num, den).shift(27)
        difference_form = (gb(n, 3) * gb(n, 3)).shift(27) - (gb(n, 4) * gb(n, 2)).shift(28)
        if product_form != difference_form:
            raise ClauseMismatchError(f"f_n33 clauses disagree at n={n}")
        return product_form
    raise DomainError(f"no formula clause for i={i}")


# ---------------------------------------------------------------------------
# maximum descents for arbitrary shapes


def f_max_descents(lam: Partition) -> QPoly:
    """f_{lam, n - lam_1}: a q-shift of a principally specialized Schur
    polynomial in lam_1 variables, indexed by the conjugate of the
    shape below the first row."""
    if lam.size == 0:
        raise DomainError("empty shape")
    n = lam.size
    alpha = Partition(lam.parts[1:])
    spec = jt_e_specialization(SkewShape(alpha.conjugate()), lam[0])
    return spec.shift(comb(n - lam[0] + 1, 2))


# ---------------------------------------------------------------------------
# whole-shape totals and summation lemma


def stanley_distribution(lam: Partition) -> QPoly:
    """Distribution of maj over all SYT of lam, all descent counts mixed:
    q^(sum (i-1) lam_i) (q)_n / prod (1 - q^hook)."""
    n = lam.size
    den = ONE
    for row in lam.hook_lengths():
        for h in row:
            den = den * one_minus_q(h)
    shift = sum(r * p for r, p in enumerate(lam.parts))
    return exact_div(q_pochhammer(n), den).shift(shift)


def lemma_skew_sum(a: int, i: int, j: int) -> tuple[QPoly, QPoly]:
    """Both sides of the q-binomial summation lemma
    sum_{R=0..j} q^(iR) [a-R-1, i-1] = [a,i] - q^(i(j+1)) [a-j-1, i]."""
    if a < 0 or i < 1 or j < 0:
        raise DomainError(f"lemma stated for a >= 0, i >= 1, j >= 0")
    lhs = ZERO
    for r in range(j + 1):
        lhs = lhs + gb(a - r - 1, i - 1).shift(i * r)
    rhs = gb(a, i) - gb(a - j - 1, i).shift(i * (j + 1))
    return lhs, rhs


# ---------------------------------------------------------------------------
# conjectured families


@dataclass(frozen=True)
class FormulaResult:
    value: QPoly
    formula_id: str
    status: str  # "theorem" | "conjecture"
    params: dict

    def to_json(self) -> dict:
        return {
            "formula_id": self.formula_id,
            "status": self.status,
            "params": self.params,
            "value": self.value.to_json(),
        }


def _conj_nn3_i3(n: int) -> QPoly:
    if n < 3:
        raise DomainError("need n >= 3")
    return (gb(n + 2, 1) * gb(n, 3) * gb(2, 1)).shift(n + 8)


def _conj_n44_i3(n: int) -> QPoly:
    if n < 4:
        raise DomainError("need n >= 4")
    head = (gb(n - 2, 2) * gb(n, 1) * gb(6, 1)).shift(14)
    num = one_minus_q(4) * one_minus_q(n - 3) ** 2 * one_minus_q(n - 2)
    den = one_minus_q(1) ** 2 * one_minus_q(2) ** 2
    return head - exact_div(num, den).shift(17)


def _conj_nk3_i2(n: int, k: int) -> QPoly:
    if not n >= k >= 3:
        raise DomainError("need n >= k >= 3")
    num = one_minus_q(n - 1) * one_minus_q(n - k + 1) * one_minus_q(k - 2)
    den = one_minus_q(1) ** 2 * one_minus_q(2)
    return exact_div(num, den).shift(k + 6)


def _conj_n43_i3(n: int) -> QPoly:
    if n < 4:
        raise DomainError("need n >= 4")
    num = one_minus_q(5) * one_minus_q(n - 3) * one_minus_q(n) ** 2
    den = one_minus_q(1) ** 3 * one_minus_q(2)
    return exact_div(num, den).shift(12) + (gb(n - 2, 2) * gb(n + 4, 1)).shift(13)


def _conj_n53_i3(n: int) -> QPoly:
    if n < 5:
        raise DomainError("need n >= 5")
    den = one_minus_q(1) ** 3 * one_minus_q(2)
    num1 = one_minus_q(5) * one_minus_q(n - 3) * one_minus_q(n - 1) * one_minus_q(n + 2)
    num2 = one_minus_q(6) * one_minus_q(n - 5) * one_minus_q(n - 1) * one_minus_q(n + 1)
    return exact_div(num1, den).shift(13) + exact_div(num2, den).shift(14)


# id -> (evaluator, parameter names, shape builder, descent count)
CONJECTURES: dict[str, tuple[Callable[..., QPoly], tuple[str, ...], Callable[..., Partition], int]] = {
    "nn3_i3": (_conj_nn3_i3, ("n",), lambda n: Partition((n, n, 3)), 3),
    "n44_i3": (_conj_n44_i3, ("n",), lambda n: Partition((n, 4, 4)), 3),
    "nk3_i2": (_conj_nk3_i2, ("n", "k"), lambda n, k: Partition((n, k, 3)), 2),
    "n43_i3": (_conj_n43_i3, ("n",), lambda n: Partition((n, 4, 3)), 3),
    "n53_i3": (_conj_n53_i3, ("n",), lambda n: Partition((n, 5, 3)), 3),
}


def conjecture_formula(formula_id: str, **params: int) -> FormulaResult:
    """Evaluate a conjectured family.  Never asserted against anything
    here; the verify module compares it with the oracle and reports."""
    if formula_id not in CONJECTURES:
        raise DomainError(f"unknown conjecture id: {formula_id}")
    fn, names, _, _ = CONJECTURES[formula_id]
    missing = [name for name in names if name not in params]
    if missing:
        raise DomainError(f"{formula_id} needs parameters {names}")
    value = fn(*(params[name] for name in names))
    return FormulaResult(value, formula_id, "conjecture", dict(params))


def conjecture_target(formula_id: str, **params: int) -> tuple[Partition, int]:
    """The (shape, descent count) a conjecture claims to describe."""
    if formula_id not in CONJECTURES:
        raise DomainError(f"unknown conjecture id: {formula_id}")
    _, names, shape_fn, descents = CONJECTURES[formula_id]
    return shape_fn(*(params[name] for name in names)), descents


# scalar-parameter theorem formulas, for the CLI and the sweep driver
THEOREMS: dict[str, tuple[Callable[..., QPoly], tuple[str, ...]]] = {
    "two_row": (f_two_row, ("n", "k", "i")),
    "two_row_skew": (f_two_row_skew, ("n", "k", "j", "i")),
    "hook_nk1": (f_hook_nk1, ("n", "k", "i")),
    "nk2": (f_nk2, ("n", "k", "i")),
    "three_row_full": (f_three_row_full, ("n", "j", "k")),
    "n33": (f_n33, ("n", "i")),
    "two_row_total": (two_row_total, ("n", "k")),
}


def evaluate_formula(formula_id: str, params: dict) -> FormulaResult:
    """Uniform entry point used by the CLI `formula` subcommand."""
    if formula_id in THEOREMS:
        fn, names = THEOREMS[formula_id]
        missing = [name for name in names if name not in params]
        if missing:
            raise DomainError(f"{formula_id} needs parameters {names}")
        value = fn(*(int(params[name]) for name in names))
        return FormulaResult(value, formula_id, "theorem", dict(params))
    if formula_id in CONJECTURES:
        return conjecture_formula(formula_id, **{k: int(v) for k, v in params.items()})
    if formula_id == "stanley":
        lam = Partition.parse(str(params["shape"]))
        return FormulaResult(stanley_distribution(lam), formula_id, "theorem", dict(params))
    if formula_id == "max_descents":
        lam = Partition.parse(str(params["shape"]))
        return FormulaResult(f_max_descents(lam), formula_id, "theorem", dict(params))
    raise DomainError(f"unknown formula id: {formula_id}")
