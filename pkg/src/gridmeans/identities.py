"""Exact verification of the supporting identities and bounds.

Three independent routes are kept for the alternating-sum identity — the sum
itself, its closed form, and a definite polynomial integral — so any two of
them cross-check the third.  The central-binomial bounds and the ratio
identity are pure integer comparisons, and n-th roots are only ever reported
as certified :class:`~gridmeans.exact.RootBound` enclosures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal

from .exact import RootBound, binomial, factorial, nth_root_bounds

__all__ = [
    "DensePolynomial",
    "VerificationReport",
    "ConvergenceRow",
    "alternating_binomial_sum",
    "alternating_binomial_sum_closed",
    "expand_xn_times_1px_n",
    "integrate_definite",
    "beta_integral_exact",
    "beta_factorial_value",
    "central_binomial_bounds_check",
    "binom_ratio_identity_check",
    "central_binomial_failures",
    "nth_root_convergence",
    "certified_gap",
]

BinomialChoice = Literal["2n", "2n+1"]


@dataclass(frozen=True)
class DensePolynomial:
    """Polynomial with exact rational coefficients, index = power of x.

    Trailing zero coefficients are stripped; the zero polynomial is the empty
    coefficient tuple.
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def evaluate(self, x: Fraction | int) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exact check: lhs == rhs, or lhs <= rhs for bounds."""

    case_index: int
    lhs: Fraction
    rhs: Fraction
    relation: Literal["eq", "le"] = "eq"
    passed: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lhs", Fraction(self.lhs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))
        if self.relation not in ("eq", "le"):
            raise ValueError(f"relation must be 'eq' or 'le', got {self.relation!r}")
        ok = self.lhs == self.rhs if self.relation == "eq" else self.lhs <= self.rhs
        object.__setattr__(self, "passed", ok)


@dataclass(frozen=True)
class ConvergenceRow:
    """One row of a convergence table.

    ``value`` is either an exact rational or a certified root enclosure; the
    gap to the limit is correspondingly a single rational or a certified
    interval (lo, hi) bracketing the true distance.
    """

    index: int
    value: Fraction | RootBound
    limit: Fraction
    gap: Fraction | tuple[Fraction, Fraction]


def certified_gap(bound: RootBound, limit: Fraction) -> tuple[Fraction, Fraction]:
    """Interval certainly containing |x - limit| for every x in the enclosure."""
    low = max(Fraction(0), bound.lo - limit, limit - bound.hi)
    high = max(bound.hi - limit, limit - bound.lo)
    return (low, high)


def alternating_binomial_sum(n: int) -> Fraction:
    """Exact value of sum_i (-1)**i C(n,i) / (n+1+i) for i = 0..n.

    Terms are accumulated over the common denominator lcm(n+1, ..., 2n+1),
    which keeps intermediate reductions cheap for n in the hundreds.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    common = math.lcm(*range(n + 1, 2 * n + 2))
    total = sum(
        (-1) ** i * binomial(n, i) * (common // (n + 1 + i)) for i in range(n + 1)
    )
    return Fraction(total, common)


def alternating_binomial_sum_closed(n: int) -> Fraction:
    """Closed form of :func:`alternating_binomial_sum`: 1/((n+1) C(2n+1, n))."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return Fraction(1, (n + 1) * binomial(2 * n + 1, n))


def expand_xn_times_1px_n(n: int) -> DensePolynomial:
    """Expansion of x**n (1+x)**n: coefficient C(n,i) at power n+i."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    coeffs = (Fraction(0),) * n + tuple(
        Fraction(binomial(n, i)) for i in range(n + 1)
    )
    return DensePolynomial(coeffs)


def integrate_definite(
    p: DensePolynomial, lower: Fraction | int, upper: Fraction | int
) -> Fraction:
    """Exact definite integral of a polynomial, term-wise x**(k+1)/(k+1)."""
    lower = Fraction(lower)
    upper = Fraction(upper)
    total = Fraction(0)
    for k, c in enumerate(p.coefficients):
        if c:
            total += c * (upper ** (k + 1) - lower ** (k + 1)) / (k + 1)
    return total


def beta_integral_exact(n: int) -> Fraction:
    """Integral of x**n (1+x)**n over [-1, 0], by exact polynomial expansion.

    Equals (-1)**n times :func:`beta_factorial_value`; no Gamma-function
    numerics are involved anywhere.
    """
    return integrate_definite(expand_xn_times_1px_n(n), Fraction(-1), Fraction(0))


def beta_factorial_value(n: int) -> Fraction:
    """The integral of t**n (1-t)**n over [0, 1] in factorial form: n!n!/(2n+1)!."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return Fraction(factorial(n) ** 2, factorial(2 * n + 1))


def central_binomial_bounds_check(n: int) -> tuple[VerificationReport, VerificationReport]:
    """Integer checks 4**n <= (2n+1) C(2n,n) and C(2n,n) <= 4**n."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    c = binomial(2 * n, n)
    lower = VerificationReport(n, Fraction(4**n), Fraction((2 * n + 1) * c), "le")
    upper = VerificationReport(n, Fraction(c), Fraction(4**n), "le")
    return lower, upper


def binom_ratio_identity_check(n: int) -> VerificationReport:
    """Integer check (n+1) C(2n+1,n) == (2n+1) C(2n,n)."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    lhs = (n + 1) * binomial(2 * n + 1, n)
    rhs = (2 * n + 1) * binomial(2 * n, n)
    return VerificationReport(n, Fraction(lhs), Fraction(rhs), "eq")


def central_binomial_failures(start: int, end: int) -> list[VerificationReport]:
    """Run the bounds and ratio checks for every n in [start, end]; return failures.

    C(2n,n) and C(2n+1,n) are maintained as two independently updated
    sequences (step ratios 2(2n+1)/(n+1) and 2(2n+3)/(n+2) respectively), so
    a sweep to n ~ 10**4 is linear in the range length.  The exactness of
    each integer division step is itself certified by the ratio identity
    check it feeds.
    """
    if start < 1:
        raise ValueError(f"start must be >= 1, got {start}")
    if end < start:
        raise ValueError(f"empty range {start}..{end}")
    failures: list[VerificationReport] = []
    c_even = binomial(2 * start, start)  # C(2n, n)
    c_odd = binomial(2 * start + 1, start)  # C(2n+1, n)
    power = 4**start
    for n in range(start, end + 1):
        lower = VerificationReport(n, Fraction(power), Fraction((2 * n + 1) * c_even), "le")
        upper = VerificationReport(n, Fraction(c_even), Fraction(power), "le")
        ratio = VerificationReport(
            n, Fraction((n + 1) * c_odd), Fraction((2 * n + 1) * c_even), "eq"
        )
        failures.extend(r for r in (lower, upper, ratio) if not r.passed)
        c_even = c_even * (2 * (2 * n + 1)) // (n + 1)
        c_odd = c_odd * (2 * (2 * n + 3)) // (n + 2)
        power *= 4
    return failures


def nth_root_convergence(
    values_of_n: Iterable[int], digits: int, which: BinomialChoice = "2n"
) -> list[ConvergenceRow]:
    """Certified n-th-root enclosures of C(2n,n) or C(2n+1,n), against limit 4."""
    limit = Fraction(4)
    rows = []
    for n in values_of_n:
        if n < 1:
            raise ValueError(f"n must be a positive integer, got {n}")
        top = 2 * n if which == "2n" else 2 * n + 1
        bound = nth_root_bounds(Fraction(binomial(top, n)), n, digits)
        rows.append(ConvergenceRow(n, bound, limit, certified_gap(bound, limit)))
    return rows
