"""Generalized normalized hafnians and partition-sum inequalities.

The generalized normalized hafnian of a complex k x n x n tensor Z
(k <= floor(n/2)) is

    gnhaf(Z) = (n-2k)!/n! * sum over injective 2k-tuples (r_1,...,r_2k)
               of prod_l z[l, r_(2l-1), r_(2l)],

normalized so the all-ones tensor gives exactly 1. Slice diagonals
z[l, r, r] are stored but never read (tuples are injective). The module
also provides the classical hafnian (perfect-matching sum), the
product-of-quadratic-means upper bound on |gnhaf|, and an exact oracle
for the ordered-weak-partition inequality that the gnhaf bound rests on.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from . import _kernels as kernels
from .diag_sum import CapacityError

__all__ = [
    "HafnianTensor",
    "PartitionInstance",
    "gnhaf",
    "haf",
    "gnhaf_bound",
    "partition_sum_bound",
    "DEFAULT_TERM_CAP",
]

# Enumeration budget: number of products summed exactly.
DEFAULT_TERM_CAP = 10_000_000

# The partition oracle enumerates n!/prod(w!) ordered partitions.
_PARTITION_N_CAP = 8


@dataclass(frozen=True)
class HafnianTensor:
    """Complex k x n x n tensor with 1 <= k <= floor(n/2), n >= 2."""

    entries: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        arr = np.ascontiguousarray(self.entries, dtype=np.complex128)
        if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
            raise ValueError(
                f"HafnianTensor: entries must be k x n x n, got shape {arr.shape}"
            )
        k, n = arr.shape[0], arr.shape[1]
        if n < 2:
            raise ValueError(f"HafnianTensor: need n >= 2, got n={n}")
        if not 1 <= k <= n // 2:
            raise ValueError(
                f"HafnianTensor: need 1 <= k <= floor(n/2) = {n // 2}, got k={k}"
            )
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise ValueError("HafnianTensor: entries must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @property
    def k(self) -> int:
        return self.entries.shape[0]

    @property
    def n(self) -> int:
        return self.entries.shape[1]


def gnhaf(tensor: HafnianTensor, cap: int = DEFAULT_TERM_CAP) -> complex:
    """Generalized normalized hafnian by exact enumeration.

    Raises CapacityError when the term count n!/(n-2k)! exceeds ``cap``.
    """
    n, k = tensor.n, tensor.k
    count = math.perm(n, 2 * k)
    if count > cap:
        raise CapacityError(
            f"gnhaf enumeration needs {count} terms, above the cap {cap}"
        )
    return complex(kernels.gnhaf_raw(tensor.entries)) / count


def haf(matrix: np.ndarray | Sequence[Sequence[complex]], cap: int = DEFAULT_TERM_CAP) -> complex:
    """Hafnian of an even-dimensional complex matrix.

    Sum over perfect matchings of products of entries; only the symmetric
    part (z + z.T)/2 contributes, and it is used explicitly.
    """
    arr = np.asarray(matrix, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"haf: matrix must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if n < 2 or n % 2:
        raise ValueError(f"haf: dimension must be even and >= 2, got {n}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError("haf: entries must be finite")
    count = 1
    for i in range(n - 1, 0, -2):
        count *= i
    if count > cap:
        raise CapacityError(f"haf enumeration needs {count} terms, above the cap {cap}")
    sym = np.ascontiguousarray(0.5 * (arr + arr.T))
    return complex(kernels.haf_raw(sym))


def gnhaf_bound(tensor: HafnianTensor) -> tuple[float, float]:
    """Upper bounds on |gnhaf|: (symmetrized, plain) quadratic means.

    Per slice, the quadratic mean over ordered off-diagonal index pairs of
    the symmetrized entries (first value) or the raw entries (second);
    the bounds multiply across slices and satisfy
    |gnhaf| <= symmetrized <= plain, with equality in both when each
    slice is constant off the diagonal.
    """
    z = tensor.entries
    n = tensor.n
    mask = ~np.eye(n, dtype=bool)
    denom = n * (n - 1)
    sym = 0.5 * (z + z.transpose(0, 2, 1))
    rhs_sym = float(np.prod(np.sqrt((np.abs(sym) ** 2)[:, mask].sum(axis=1) / denom)))
    rhs_plain = float(np.prod(np.sqrt((np.abs(z) ** 2)[:, mask].sum(axis=1) / denom)))
    return rhs_sym, rhs_plain


def _sorted_subsets(n: int, size: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(n), size))


@dataclass(frozen=True)
class PartitionInstance:
    """Inputs for the ordered-weak-partition inequality.

    ``weights[l]`` is the (possibly zero) block size of slot l and
    ``blocks[l]`` maps every sorted weights[l]-subset of range(n) to a
    complex value. Ordered weak partitions assign pairwise disjoint
    blocks of these sizes covering range(n).
    """

    n: int
    weights: tuple[int, ...]
    blocks: tuple[Mapping[tuple[int, ...], complex], ...]

    def __post_init__(self) -> None:
        n = int(self.n)
        weights = tuple(int(w) for w in self.weights)
        if n < 1:
            raise ValueError(f"PartitionInstance: need n >= 1, got {n}")
        if not weights:
            raise ValueError("PartitionInstance: need at least one block")
        if any(w < 0 for w in weights):
            raise ValueError("PartitionInstance: block sizes must be >= 0")
        if sum(weights) != n:
            raise ValueError(
                f"PartitionInstance: block sizes must sum to n={n}, got {weights}"
            )
        blocks = tuple(dict(b) for b in self.blocks)
        if len(blocks) != len(weights):
            raise ValueError("PartitionInstance: one value table per block required")
        for l, (w, table) in enumerate(zip(weights, blocks)):
            expect = _sorted_subsets(n, w)
            if sorted(table.keys()) != expect:
                raise ValueError(
                    f"PartitionInstance: block {l} must map exactly the "
                    f"{len(expect)} sorted {w}-subsets of range({n})"
                )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "blocks", blocks)


def partition_sum_bound(inst: PartitionInstance) -> tuple[float, float]:
    """Exact (lhs, rhs) of the ordered-weak-partition inequality.

    lhs = |sum over ordered weak partitions of prod_l blocks[l][W_l]|,
    rhs = n!/prod(w_l!) * prod_l sqrt(mean |blocks[l]|^2). Enumeration is
    exact and limited to n <= 8.
    """
    n = inst.n
    if n > _PARTITION_N_CAP:
        raise CapacityError(
            f"partition_sum_bound enumerates exactly; n={n} exceeds {_PARTITION_N_CAP}"
        )
    d = len(inst.weights)

    def rec(l: int, remaining: tuple[int, ...]) -> complex:
        if l == d:
            return 1.0 + 0.0j
        total = 0.0 + 0.0j
        for comb in itertools.combinations(remaining, inst.weights[l]):
            rest = tuple(x for x in remaining if x not in comb)
            total += inst.blocks[l][comb] * rec(l + 1, rest)
        return total

    lhs = abs(rec(0, tuple(range(n))))
    rhs = float(math.factorial(n))
    for w, table in zip(inst.weights, inst.blocks):
        rhs /= math.factorial(w)
        vals = np.asarray(list(table.values()), dtype=np.complex128)
        rhs *= math.sqrt(float(np.mean(np.abs(vals) ** 2)))
    return lhs, rhs
