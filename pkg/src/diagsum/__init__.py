"""Exact distributions and proven bounds for random diagonal sums.

Given an n x n matrix of mutually independent entry distributions, draw
a uniform permutation pi and form S = sum_j X[j, pi(j)]. This package
computes the exact distribution of S at desk scale, evaluates
theorem-level upper bounds on its lattice smoothness d_TV(S, 1 + S) and
its concentration function Q(S; t), and provides the supporting tools:
distribution arithmetic, the numerically maximized bound constant,
inverse-power-moment bounds, and generalized-hafnian norm inequalities.
"""

from ._kernels import BACKEND
from .bounds import (
    EPSILON_FLOOR,
    BernoulliPairStats,
    BoundConstant,
    BoundReport,
    EntrywiseAggregates,
    EpsilonViolationError,
    InverseMomentBounds,
    bernoulli_matrix_bounds,
    bernoulli_pair_stats,
    bound_constant,
    concentration_bound,
    entrywise_aggregates,
    fixed_pairing_bound,
    independent_sum_bound,
    inverse_moment_bounds,
    smoothness_bound,
)
from .diag_sum import (
    DEFAULT_ENUM_CAP,
    CapacityError,
    MatrixModel,
    enumeration_cap,
    exact_distribution,
    pair_mixture,
    pairing_decomposition,
    sample,
)
from .dist_core import (
    AtomicDistribution,
    Distribution,
    KindMismatchError,
    LatticeDistribution,
    bernoulli,
    concentration,
    convolve,
    mixture,
    shift,
    smoothness,
    tv_distance,
)
from .hafnian import (
    HafnianTensor,
    PartitionInstance,
    gnhaf,
    gnhaf_bound,
    haf,
    partition_sum_bound,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BACKEND",
    # distributions
    "LatticeDistribution",
    "AtomicDistribution",
    "Distribution",
    "KindMismatchError",
    "bernoulli",
    "convolve",
    "shift",
    "mixture",
    "tv_distance",
    "smoothness",
    "concentration",
    # diagonal sums
    "MatrixModel",
    "CapacityError",
    "DEFAULT_ENUM_CAP",
    "enumeration_cap",
    "exact_distribution",
    "pair_mixture",
    "pairing_decomposition",
    "sample",
    # bounds
    "EPSILON_FLOOR",
    "EpsilonViolationError",
    "BoundConstant",
    "bound_constant",
    "independent_sum_bound",
    "BoundReport",
    "smoothness_bound",
    "concentration_bound",
    "bernoulli_matrix_bounds",
    "fixed_pairing_bound",
    "EntrywiseAggregates",
    "entrywise_aggregates",
    "BernoulliPairStats",
    "bernoulli_pair_stats",
    "InverseMomentBounds",
    "inverse_moment_bounds",
    # hafnian tools
    "HafnianTensor",
    "gnhaf",
    "haf",
    "gnhaf_bound",
    "PartitionInstance",
    "partition_sum_bound",
]
