"""Exact arithmetic primitives: rationals, combinatorics, certified roots.

Everything in this package is an integer or a rational, and every result is
exact.  ``ExactRational`` is the value type used for all ratios; root
extraction never produces a float, only a :class:`RootBound` whose endpoints
come from integer arithmetic and can be re-verified by comparing powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "ExactRational",
    "RootBound",
    "binomial",
    "factorial",
    "sum_powers",
    "integer_nth_root",
    "nth_root_bounds",
]

# Canonical reduced fraction with positive denominator.  The stdlib type
# maintains the invariants this package relies on: gcd(|num|, den) == 1,
# den > 0, and zero normalized to 0/1.
ExactRational = Fraction


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero when k > n, exact at any size."""
    return math.comb(n, k)


def factorial(n: int) -> int:
    """Exact n! for nonnegative n."""
    return math.factorial(n)


def sum_powers(m: int, k: int) -> int:
    """Sum of i**k over i = 1..m, by direct summation.

    Direct summation is O(m) big-integer additions, which is fast enough for
    every sweep this package runs (m stays below ~10**5).
    """
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if k < 0:
        raise ValueError(f"k must be a nonnegative integer, got {k}")
    return sum(i**k for i in range(1, m + 1))


def integer_nth_root(x: int, d: int) -> int:
    """Floor of the d-th root of a nonnegative integer.

    Uses Newton's method starting from a power-of-two overestimate; the final
    adjustment loop makes the floor property unconditional:
    ``r**d <= x < (r + 1)**d``.
    """
    if x < 0:
        raise ValueError(f"x must be nonnegative, got {x}")
    if d < 1:
        raise ValueError(f"root degree must be >= 1, got {d}")
    if d == 1 or x in (0, 1):
        return x
    if d == 2:
        return math.isqrt(x)
    # 2**ceil(bits/d) >= x**(1/d), so Newton descends monotonically.
    g = 1 << ((x.bit_length() + d - 1) // d)
    while True:
        nxt = ((d - 1) * g + x // g ** (d - 1)) // d
        if nxt >= g:
            break
        g = nxt
    while g**d > x:
        g -= 1
    while (g + 1) ** d <= x:
        g += 1
    return g


@dataclass(frozen=True)
class RootBound:
    """Certified rational enclosure ``[lo, hi]`` of a d-th root.

    ``lo**root_degree <= q <= hi**root_degree`` holds for the enclosed value
    ``q`` (checkable via :meth:`encloses`), and the width never exceeds
    ``10**-requested_digits``.  An exact rational root is represented with
    ``lo == hi``.
    """

    lo: Fraction
    hi: Fraction
    root_degree: int
    requested_digits: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.root_degree < 1:
            raise ValueError(f"root degree must be >= 1, got {self.root_degree}")
        if self.requested_digits < 1:
            raise ValueError(
                f"requested digits must be >= 1, got {self.requested_digits}"
            )
        if self.lo < 0:
            raise ValueError("lower bound must be nonnegative")
        if self.lo > self.hi:
            raise ValueError(f"bounds out of order: {self.lo} > {self.hi}")
        if self.width > Fraction(1, 10**self.requested_digits):
            raise ValueError(
                f"enclosure width {self.width} exceeds 10**-{self.requested_digits}"
            )

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def encloses(self, value: Fraction | int) -> bool:
        """Exact check that this bound brackets the d-th root of ``value``."""
        value = Fraction(value)
        d = self.root_degree
        return self.lo**d <= value <= self.hi**d


def nth_root_bounds(q: Fraction | int, d: int, digits: int) -> RootBound:
    """Enclose ``q**(1/d)`` between rationals differing by at most 10**-digits.

    If ``q`` is the exact d-th power of a rational the enclosure collapses to
    that rational (a reduced fraction a/b is a d-th power iff both a and b are
    perfect d-th powers).  Otherwise both endpoints are floor roots of scaled
    integers: with s = 10**digits, ``lo = r/s`` for
    ``r = integer_nth_root(num * s**d // den, d)`` and ``hi = (r + 1)/s``, so
    ``lo**d < q < hi**d`` holds by exact integer comparisons alone.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"cannot take an even-style root bound of negative {q}")
    if d < 1:
        raise ValueError(f"root degree must be >= 1, got {d}")
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    num, den = q.numerator, q.denominator
    root_num = integer_nth_root(num, d)
    if root_num**d == num:
        root_den = integer_nth_root(den, d)
        if root_den**d == den:
            exact = Fraction(root_num, root_den)
            return RootBound(exact, exact, d, digits)
    scale = 10**digits
    r = integer_nth_root(num * scale**d // den, d)
    return RootBound(Fraction(r, scale), Fraction(r + 1, scale), d, digits)
