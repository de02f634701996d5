"""Brute-force enumeration of grid boxes, independent of all closed forms.

Two enumeration levels are provided and must agree:

* placement level walks every individual box by its corner coordinates and
  trusts no counting formula at all;
* shape level iterates edge-length patterns and trusts only the per-shape
  placement count.

Layered this way, a disagreement localizes a bug to either the placement
count or the volume aggregation.  Sums accumulate as plain integers over the
common denominator m**n (each edge length is a multiple of 1/m), so no
per-term fraction reduction happens inside the hot loops.

Enumeration is exact and therefore never samples or truncates: a grid whose
predicted size exceeds the budget raises :class:`BudgetExceededError`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterator, Literal

from .grid import BoxShape, GridSpec, count_cubes_by_edge, count_cuboids_by_shape

__all__ = [
    "EnumerationBudget",
    "BudgetExceededError",
    "DEFAULT_PLACEMENT_BUDGET",
    "DEFAULT_SHAPE_BUDGET",
    "iter_cuboid_volumes",
    "iter_cube_volumes",
    "cuboid_mean_bruteforce",
    "cube_mean_bruteforce",
    "count_bruteforce",
]

EnumerationLevel = Literal["placement", "shape"]
BoxKind = Literal["cuboid", "cube"]

DEFAULT_PLACEMENT_BUDGET = 10**7
DEFAULT_SHAPE_BUDGET = 10**6


class BudgetExceededError(ValueError):
    """Predicted enumeration size is larger than the allowed budget."""

    def __init__(self, predicted: int, max_boxes: int):
        self.predicted = predicted
        self.max_boxes = max_boxes
        super().__init__(
            f"enumeration would visit {predicted} objects, over the budget of {max_boxes}"
        )

    def __reduce__(self):
        # keeps the two-argument constructor working across pickling
        return (BudgetExceededError, (self.predicted, self.max_boxes))


@dataclass(frozen=True)
class EnumerationBudget:
    """Cap on how many objects an enumeration pass may visit."""

    max_boxes: int
    level: EnumerationLevel

    def __post_init__(self) -> None:
        if self.max_boxes < 1:
            raise ValueError(f"max_boxes must be >= 1, got {self.max_boxes}")
        if self.level not in ("placement", "shape"):
            raise ValueError(f"level must be 'placement' or 'shape', got {self.level!r}")

    @classmethod
    def placement(cls, max_boxes: int = DEFAULT_PLACEMENT_BUDGET) -> EnumerationBudget:
        return cls(max_boxes, "placement")

    @classmethod
    def shape(cls, max_boxes: int = DEFAULT_SHAPE_BUDGET) -> EnumerationBudget:
        return cls(max_boxes, "shape")

    def check(self, predicted: int) -> None:
        if predicted > self.max_boxes:
            raise BudgetExceededError(predicted, self.max_boxes)


def _axis_intervals(m: int) -> list[tuple[int, int]]:
    """All grid intervals 0 <= a < b <= m along one axis."""
    return [(a, b) for a in range(m + 1) for b in range(a + 1, m + 1)]


def iter_cuboid_volumes(g: GridSpec) -> Iterator[int]:
    """Every grid cuboid's volume numerator (units of 1/m**n), one per placement."""
    intervals = _axis_intervals(g.m)
    for combo in itertools.product(intervals, repeat=g.n):
        yield prod(b - a for a, b in combo)


def iter_cube_volumes(g: GridSpec) -> Iterator[int]:
    """Every grid cube's volume numerator (units of 1/m**n), one per placement."""
    n, m = g.n, g.m
    for j in range(1, m + 1):
        volume = j**n
        for _ in itertools.product(range(m + 1 - j), repeat=n):
            yield volume


def _predicted_cuboids(g: GridSpec, level: EnumerationLevel) -> int:
    if level == "placement":
        return (g.m * (g.m + 1) // 2) ** g.n
    return g.m**g.n  # number of shapes


def _predicted_cubes(g: GridSpec, level: EnumerationLevel) -> int:
    if level == "placement":
        return sum((g.m + 1 - j) ** g.n for j in range(1, g.m + 1))
    return g.m  # number of distinct edge lengths


def cuboid_mean_bruteforce(g: GridSpec, budget: EnumerationBudget) -> Fraction:
    """Exact mean cuboid volume ratio by enumeration.

    Placement level averages over every individual box; shape level averages
    edge-length vectors weighted by :func:`count_cuboids_by_shape`.
    """
    budget.check(_predicted_cuboids(g, budget.level))
    if budget.level == "placement":
        total = 0
        count = 0
        for volume in iter_cuboid_volumes(g):
            total += volume
            count += 1
    else:
        total = 0
        count = 0
        for shape in itertools.product(range(1, g.m + 1), repeat=g.n):
            weight = count_cuboids_by_shape(g, BoxShape(shape))
            total += weight * prod(shape)
            count += weight
    return Fraction(total, count * g.m**g.n)


def cube_mean_bruteforce(g: GridSpec, budget: EnumerationBudget) -> Fraction:
    """Exact mean cube volume ratio by enumeration."""
    budget.check(_predicted_cubes(g, budget.level))
    total = 0
    count = 0
    if budget.level == "placement":
        for volume in iter_cube_volumes(g):
            total += volume
            count += 1
    else:
        for j in range(1, g.m + 1):
            weight = count_cubes_by_edge(g, j)
            total += weight * j**g.n
            count += weight
    return Fraction(total, count * g.m**g.n)


def count_bruteforce(g: GridSpec, kind: BoxKind, budget: EnumerationBudget) -> int:
    """Number of enumerated boxes, for cross-checking the closed-form totals."""
    if kind == "cuboid":
        budget.check(_predicted_cuboids(g, budget.level))
        if budget.level == "placement":
            return sum(1 for _ in iter_cuboid_volumes(g))
        return sum(
            count_cuboids_by_shape(g, BoxShape(shape))
            for shape in itertools.product(range(1, g.m + 1), repeat=g.n)
        )
    if kind == "cube":
        budget.check(_predicted_cubes(g, budget.level))
        if budget.level == "placement":
            return sum(1 for _ in iter_cube_volumes(g))
        return sum(count_cubes_by_edge(g, j) for j in range(1, g.m + 1))
    raise ValueError(f"kind must be 'cuboid' or 'cube', got {kind!r}")
