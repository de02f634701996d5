"""Exact mean-volume statistics of grid-aligned boxes in a subdivided hypercube.

Subdivide each edge of the unit n-cube into m equal parts and consider every
axis-aligned box whose faces lie on the grid planes.  This package computes
the exact mean volume of those boxes (all cuboids, or cubes only) as a
fraction of the whole, the large-m limits of those means, certified rational
enclosures of the limiting cube edge ratio, and brute-force enumeration
oracles plus identity checks that validate every closed form.
"""

from .exact import (
    ExactRational,
    RootBound,
    binomial,
    factorial,
    integer_nth_root,
    nth_root_bounds,
    sum_powers,
)
from .grid import (
    BoxShape,
    GridSpec,
    ScaledVolume,
    count_cubes_by_edge,
    count_cuboids_by_shape,
    cube_mean_ratio_expanded,
    cube_mean_ratio_limit,
    cube_mean_ratio_sum,
    cuboid_mean_ratio_closed,
    cuboid_mean_ratio_limit,
    cuboid_mean_ratio_sum,
    edge_ratio_bounds,
    scale_volume,
    total_cubes,
    total_cuboids,
)
from .identities import (
    ConvergenceRow,
    DensePolynomial,
    VerificationReport,
    alternating_binomial_sum,
    alternating_binomial_sum_closed,
    beta_factorial_value,
    beta_integral_exact,
    binom_ratio_identity_check,
    central_binomial_bounds_check,
    central_binomial_failures,
    certified_gap,
    expand_xn_times_1px_n,
    integrate_definite,
    nth_root_convergence,
)
from .oracle import (
    BudgetExceededError,
    EnumerationBudget,
    count_bruteforce,
    cube_mean_bruteforce,
    cuboid_mean_bruteforce,
    iter_cube_volumes,
    iter_cuboid_volumes,
)

__version__ = "0.1.0"

__all__ = [
    "ExactRational",
    "RootBound",
    "binomial",
    "factorial",
    "integer_nth_root",
    "nth_root_bounds",
    "sum_powers",
    "BoxShape",
    "GridSpec",
    "ScaledVolume",
    "count_cubes_by_edge",
    "count_cuboids_by_shape",
    "cube_mean_ratio_expanded",
    "cube_mean_ratio_limit",
    "cube_mean_ratio_sum",
    "cuboid_mean_ratio_closed",
    "cuboid_mean_ratio_limit",
    "cuboid_mean_ratio_sum",
    "edge_ratio_bounds",
    "scale_volume",
    "total_cubes",
    "total_cuboids",
    "ConvergenceRow",
    "DensePolynomial",
    "VerificationReport",
    "alternating_binomial_sum",
    "alternating_binomial_sum_closed",
    "beta_factorial_value",
    "beta_integral_exact",
    "binom_ratio_identity_check",
    "central_binomial_bounds_check",
    "central_binomial_failures",
    "certified_gap",
    "expand_xn_times_1px_n",
    "integrate_definite",
    "nth_root_convergence",
    "BudgetExceededError",
    "EnumerationBudget",
    "count_bruteforce",
    "cube_mean_bruteforce",
    "cuboid_mean_bruteforce",
    "iter_cube_volumes",
    "iter_cuboid_volumes",
    "__version__",
]
