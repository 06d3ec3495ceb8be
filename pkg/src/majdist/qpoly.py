"""Exact polynomial arithmetic in the variable q over the integers.

Polynomials are dense coefficient tuples, ascending by exponent, in
canonical form: the last coefficient is nonzero, and the zero polynomial
is the empty tuple.  Coefficients are Python ints, so nothing overflows.

This module also provides the q-combinatorial primitives used everywhere
else: the q-Pochhammer symbol, Gaussian binomial coefficients, and the
symmetry/unimodality/darga diagnostics.
"""

from __future__ import annotations

import functools
from typing import Iterable, Iterator, NamedTuple, Optional, Union


class InexactDivisionError(ArithmeticError):
    """A polynomial quotient would leave a nonzero remainder."""


class QPoly:
    """A univariate polynomial in q with integer coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- basic structure ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def min_degree(self) -> int:
        """Smallest exponent with nonzero coefficient; 0 for the zero polynomial."""
        for e, c in enumerate(self.coeffs):
            if c:
                return e
        return 0

    def __getitem__(self, e: int) -> int:
        if 0 <= e < len(self.coeffs):
            return self.coeffs[e]
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- ring operations ------------------------------------------------

    def __add__(self, other: Union["QPoly", int]) -> "QPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other: Union["QPoly", int]) -> "QPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Union["QPoly", int]) -> "QPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: Union["QPoly", int]) -> "QPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QPoly":
        if e < 0:
            raise ValueError("negative power")
        acc, base = ONE, self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def shift(self, s: int) -> "QPoly":
        """Multiply by q**s.  s must be nonnegative."""
        if s < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return ZERO
        return QPoly((0,) * s + self.coeffs)

    def __call__(self, x: int) -> int:
        """Evaluate at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- presentation ---------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                var = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    terms.append(var)
                elif c == -1:
                    terms.append(f"-{var}")
                else:
                    terms.append(f"{c}*{var}")
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self) -> str:
        return f"QPoly({self})"

    def to_json(self) -> dict:
        """Wire format: coefficients as decimal strings, ascending exponents."""
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc: dict) -> "QPoly":
        return cls(int(c) for c in doc["coeffs"])


def _coerce(x: Union[QPoly, int]) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly((x,))
    raise TypeError(f"cannot coerce {type(x).__name__} to QPoly")


ZERO = QPoly()
ONE = QPoly((1,))


def monomial(e: int, c: int = 1) -> QPoly:
    """c * q**e."""
    if e < 0:
        raise ValueError("negative exponent")
    return QPoly((0,) * e + (c,))


def one_minus_q(m: int) -> QPoly:
    """1 - q**m.  Zero for m = 0."""
    return ONE - monomial(m)


def exact_div(p: QPoly, d: QPoly) -> QPoly:
    """Divide p by d in Z[q], raising InexactDivisionError unless exact.

    An inexact division signals either a formula implementation bug or
    out-of-domain parameters, never something to truncate silently.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return ZERO
    rem = list(p.coeffs)
    dc = d.coeffs
    lead = dc[-1]
    qlen = len(rem) - len(dc) + 1
    if qlen <= 0:
        raise InexactDivisionError(f"inexact division: ({p}) / ({d})")
    quot = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        c = rem[k + len(dc) - 1]
        if c % lead:
            raise InexactDivisionError(f"inexact division: ({p}) / ({d})")
        f = c // lead
        if f:
            quot[k] = f
            for i, dci in enumerate(dc):
                rem[k + i] -= f * dci
    if any(rem):
        raise InexactDivisionError(f"inexact division: ({p}) / ({d})")
    return QPoly(quot)


@functools.cache
def q_pochhammer(m: int) -> QPoly:
    """(q)_m = (1-q)(1-q^2)...(1-q^m), with (q)_0 = 1."""
    if m < 0:
        raise ValueError("q_pochhammer of negative order")
    if m == 0:
        return ONE
    return q_pochhammer(m - 1) * one_minus_q(m)


@functools.cache
def gauss_binomial(m: int, n: int) -> QPoly:
    """The Gaussian binomial [m choose n]_q.

    Zero when n < 0, m < 0 or m < n; one when n = 0 <= m.  Computed by
    the q-Pascal recurrence [m,n] = [m-1,n] + q^(m-n)[m-1,n-1]; the
    Pochhammer-quotient definition is kept as a cross-check property in
    the test suite.
    """
    if n < 0 or m < 0 or m < n:
        return ZERO
    if n == 0 or n == m:
        return ONE
    if 2 * n > m:  # symmetry keeps the memo table small
        return gauss_binomial(m, m - n)
    return gauss_binomial(m - 1, n) + gauss_binomial(m - 1, n - 1).shift(m - n)


class ShapeStats(NamedTuple):
    symmetric: bool
    unimodal: bool
    min_deg: Optional[int]
    max_deg: Optional[int]
    darga: Optional[int]


def shape_stats(p: QPoly) -> ShapeStats:
    """Symmetry, unimodality and darga of a polynomial.

    The darga is min_deg + max_deg, i.e. twice the central degree, kept
    integral.  The zero polynomial is symmetric and unimodal by
    convention, with all degree fields None, so that vanishing formula
    branches do not poison family-level checks.
    """
    if p.is_zero():
        return ShapeStats(True, True, None, None, None)
    lo = p.min_degree()
    hi = p.degree()
    window = p.coeffs[lo : hi + 1]
    symmetric = window == window[::-1]
    unimodal = True
    rising = True
    for a, b in zip(p.coeffs, p.coeffs[1:]):
        if rising:
            if b < a:
                rising = False
        elif b > a:
            unimodal = False
            break
    return ShapeStats(symmetric, unimodal, lo, hi, lo + hi)


def reciprocal_shift(p: QPoly, big_d: int) -> QPoly:
    """q^D * p(1/q): the coefficient at exponent e moves to D - e.

    Requires D >= degree(p); this is the reversal that relates charge
    and major-index generating functions.
    """
    if big_d < p.degree():
        raise ValueError("negative exponent: D < degree")
    if p.is_zero():
        return ZERO
    out = [0] * (big_d + 1)
    for e, c in enumerate(p.coeffs):
        out[big_d - e] = c
    return QPoly(out)
