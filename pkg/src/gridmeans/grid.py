"""Mean-volume statistics of grid-aligned boxes in a subdivided hypercube.

Each edge of the unit n-cube is divided into m equal segments, and the boxes
considered are the axis-aligned cuboids (or cubes) whose faces all lie on the
resulting grid planes or the boundary.  This module counts those boxes, takes
the exact mean of their volumes as a fraction of the whole, and evaluates the
large-m limits of those means, all in exact rational arithmetic.

Everything is computed for the unit hypercube; attaching a physical edge
length is a separate scaling step (:func:`scale_volume`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .exact import RootBound, binomial, nth_root_bounds, sum_powers

__all__ = [
    "GridSpec",
    "BoxShape",
    "ScaledVolume",
    "count_cuboids_by_shape",
    "total_cuboids",
    "count_cubes_by_edge",
    "total_cubes",
    "cuboid_mean_ratio_sum",
    "cuboid_mean_ratio_closed",
    "cuboid_mean_ratio_limit",
    "cube_mean_ratio_sum",
    "cube_mean_ratio_expanded",
    "cube_mean_ratio_limit",
    "edge_ratio_bounds",
    "scale_volume",
]


@dataclass(frozen=True)
class GridSpec:
    """Dimension n and per-edge subdivision count m, both >= 1."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n}")
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"subdivision count must be a positive integer, got {self.m}")


@dataclass(frozen=True)
class BoxShape:
    """Edge lengths of a grid box in grid units, one entry per axis."""

    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(self.edges))
        for j in self.edges:
            if not isinstance(j, int) or j < 1:
                raise ValueError(f"edge lengths must be positive integers, got {j}")

    def validate_for(self, g: GridSpec) -> None:
        if len(self.edges) != g.n:
            raise ValueError(
                f"shape has {len(self.edges)} edges but grid dimension is {g.n}"
            )
        for j in self.edges:
            if j > g.m:
                raise ValueError(f"edge length {j} exceeds subdivision count {g.m}")


@dataclass(frozen=True)
class ScaledVolume:
    """A dimensionless volume ratio attached to a concrete edge length."""

    ratio: Fraction
    edge_scale: Fraction
    dimension: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "ratio", Fraction(self.ratio))
        object.__setattr__(self, "edge_scale", Fraction(self.edge_scale))
        if self.ratio < 0:
            raise ValueError("volume ratio must be nonnegative")
        if self.edge_scale <= 0:
            raise ValueError("edge scale must be positive")
        if self.dimension < 1:
            raise ValueError("dimension must be >= 1")

    @property
    def volume(self) -> Fraction:
        """Absolute volume: ratio times edge_scale**dimension."""
        return self.ratio * self.edge_scale**self.dimension


def count_cuboids_by_shape(g: GridSpec, s: BoxShape) -> int:
    """Number of placements of a cuboid with the given edge lengths.

    A box of edge j fits in m + 1 - j positions along one axis, and axes are
    independent.
    """
    s.validate_for(g)
    return prod(g.m + 1 - j for j in s.edges)


def total_cuboids(g: GridSpec) -> int:
    """Total number of grid-aligned cuboids: (m(m+1)/2)**n."""
    return (g.m * (g.m + 1) // 2) ** g.n


def count_cubes_by_edge(g: GridSpec, j: int) -> int:
    """Number of placements of a cube with edge length j: (m + 1 - j)**n."""
    if not 1 <= j <= g.m:
        raise ValueError(f"edge length {j} out of range 1..{g.m}")
    return (g.m + 1 - j) ** g.n


def total_cubes(g: GridSpec) -> int:
    """Total number of grid-aligned cubes: sum of i**n over i = 1..m."""
    return sum_powers(g.m, g.n)


def cuboid_mean_ratio_sum(g: GridSpec) -> Fraction:
    """Mean cuboid volume over the whole volume, from the defining sums.

    The n-fold sum over edge-length vectors factorizes into identical
    per-axis sums, so only two single-axis sums are needed; the result is
    (sum_i (m+1-i)i)**n / (m**n (sum_i i)**n).
    """
    n, m = g.n, g.m
    weighted = sum((m + 1 - i) * i for i in range(1, m + 1))
    placements = sum_powers(m, 1)
    return Fraction(weighted**n, m**n * placements**n)


def cuboid_mean_ratio_closed(g: GridSpec) -> Fraction:
    """Closed form of the mean cuboid volume ratio: ((m+2)/(3m))**n."""
    return Fraction((g.m + 2) ** g.n, (3 * g.m) ** g.n)


def cuboid_mean_ratio_limit(n: int) -> Fraction:
    """Large-m limit of the mean cuboid volume ratio: 1/3**n."""
    if n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n}")
    return Fraction(1, 3**n)


def cube_mean_ratio_sum(g: GridSpec) -> Fraction:
    """Mean cube volume over the whole volume, from the defining sums.

    Cubes of edge j occur (m+1-j)**n times with volume (j/m)**n each, so the
    mean ratio is sum_j (m+1-j)**n j**n / (m**n sum_i i**n).
    """
    n, m = g.n, g.m
    weighted = sum((m + 1 - j) ** n * j**n for j in range(1, m + 1))
    return Fraction(weighted, m**n * sum_powers(m, n))


def cube_mean_ratio_expanded(g: GridSpec) -> Fraction:
    """Mean cube volume ratio via the alternating binomial expansion.

    Expands (m+1-j)**n binomially and swaps the order of summation, giving
    sum_i (-1)**i C(n,i) (m+1)**(n-i) sum_j j**(n+i) over m**n sum_i i**n.
    Deliberately kept term-by-term with no simplification so it is an
    independent computation route against :func:`cube_mean_ratio_sum`.
    """
    n, m = g.n, g.m
    numerator = sum(
        (-1) ** i * binomial(n, i) * (m + 1) ** (n - i) * sum_powers(m, n + i)
        for i in range(n + 1)
    )
    return Fraction(numerator, m**n * sum_powers(m, n))


def cube_mean_ratio_limit(n: int) -> Fraction:
    """Large-m limit of the mean cube volume ratio: 1/C(2n+1, n)."""
    if n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n}")
    return Fraction(1, binomial(2 * n + 1, n))


def edge_ratio_bounds(n: int, digits: int) -> RootBound:
    """Certified enclosure of the limiting cube edge ratio.

    The cube whose volume equals the limiting mean has edge equal to the
    n-th root of :func:`cube_mean_ratio_limit`; the enclosure width is at
    most 10**-digits.
    """
    return nth_root_bounds(cube_mean_ratio_limit(n), n, digits)


def scale_volume(ratio: Fraction | int, a: Fraction | int, n: int) -> ScaledVolume:
    """Attach an edge length ``a`` to a dimensionless volume ratio."""
    return ScaledVolume(Fraction(ratio), Fraction(a), n)
