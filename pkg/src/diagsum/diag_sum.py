"""Random diagonal sums of matrices with independent entries.

A :class:`MatrixModel` holds an n x n grid of independent, finitely
supported entry distributions (all lattice or all atomic). A uniformly
random permutation ``pi`` selects one entry per row and the diagonal sum
is ``S = sum_j X[j, pi(j)]``. This module computes the exact distribution
of ``S`` (average of the n! convolution products), the symmetrized pair
mixtures that drive the concentration bounds, the fixed-pairing
decomposition of the exact law, and seeded Monte Carlo samples.

Entries are fully independent; models with dependence across the selected
diagonal are out of scope for this representation.
"""

from __future__ import annotations

import math
import os
from typing import Sequence

import numpy as np

from . import _kernels as kernels
from .dist_core import (
    MERGE_TOL,
    AtomicDistribution,
    Distribution,
    KindMismatchError,
    LatticeDistribution,
    bernoulli,
    convolve,
    mixture,
)

__all__ = [
    "CapacityError",
    "MatrixModel",
    "enumeration_cap",
    "exact_distribution",
    "pair_mixture",
    "pairing_decomposition",
    "sample",
    "check_permutation",
]

DEFAULT_ENUM_CAP = 9

# Defensive ceilings for intermediate growth (dense lattice cells / atoms).
_LATTICE_WIDTH_CAP = 1 << 20
_ATOMIC_NODE_CAP = 1 << 22
_ATOMIC_RESULT_CAP = 1 << 25


class CapacityError(RuntimeError):
    """Raised when an exact computation would exceed its enumeration cap."""


def enumeration_cap() -> int:
    """Permutation-enumeration cap: DIAGSUM_ENUM_CAP or 9."""
    raw = os.environ.get("DIAGSUM_ENUM_CAP")
    if raw is None or not raw.strip():
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise RuntimeError(f"DIAGSUM_ENUM_CAP must be an integer, got {raw!r}") from exc
    if cap < 2:
        raise RuntimeError(f"DIAGSUM_ENUM_CAP must be >= 2, got {cap}")
    return cap


class MatrixModel:
    """Square grid of independent entry distributions of one kind."""

    def __init__(self, entries: Sequence[Sequence[Distribution]]) -> None:
        rows = [tuple(row) for row in entries]
        n = len(rows)
        if n < 2:
            raise ValueError(f"MatrixModel: need n >= 2 rows, got {n}")
        if any(len(row) != n for row in rows):
            raise ValueError("MatrixModel: entries must form a square grid")
        first = rows[0][0]
        if isinstance(first, LatticeDistribution):
            want, kind = LatticeDistribution, "integer"
        elif isinstance(first, AtomicDistribution):
            want, kind = AtomicDistribution, "real"
        else:
            raise TypeError(
                f"MatrixModel: entries must be distributions, got {type(first).__name__}"
            )
        for j, row in enumerate(rows):
            for r, cell in enumerate(row):
                if not isinstance(cell, want):
                    raise KindMismatchError(
                        f"MatrixModel: entry [{j}][{r}] is {type(cell).__name__}; "
                        f"all entries must be {want.__name__}"
                    )
        self._entries = tuple(rows)
        self._n = n
        self._kind = kind
        self._packed: tuple[np.ndarray, np.ndarray, np.ndarray] | None = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def kind(self) -> str:
        """'integer' for lattice entries, 'real' for atomic entries."""
        return self._kind

    @property
    def entries(self) -> tuple[tuple[Distribution, ...], ...]:
        return self._entries

    @classmethod
    def bernoulli(cls, ps: Sequence[Sequence[float]] | np.ndarray) -> "MatrixModel":
        """Model with independent Bernoulli(p[j][r]) entries."""
        arr = np.asarray(ps, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("bernoulli: probability grid must be square")
        return cls([[bernoulli(p) for p in row] for row in arr])

    @classmethod
    def constant(
        cls, values: Sequence[Sequence[float]] | np.ndarray, kind: str = "integer"
    ) -> "MatrixModel":
        """Model of deterministic entries (point masses)."""
        arr = np.asarray(values, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("constant: value grid must be square")
        if kind == "integer":
            if np.any(arr != np.floor(arr)):
                raise ValueError("constant: integer kind requires integer values")
            return cls([[LatticeDistribution.point(int(v)) for v in row] for row in arr])
        if kind == "real":
            return cls([[AtomicDistribution.point(v) for v in row] for row in arr])
        raise ValueError(f"constant: kind must be 'integer' or 'real', got {kind!r}")

    def packed(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Kernel tables: (offsets-or-locations, masses, lengths).

        Lattice: int64 offs[n,n], float64 masses[n,n,L], int64 lens[n,n].
        Atomic: float64 locs[n,n,L] in the first slot instead of offsets.
        Padding is zero and never read (lens bounds every scan).
        """
        if self._packed is not None:
            return self._packed
        n = self._n
        lens = np.zeros((n, n), dtype=np.int64)
        for j in range(n):
            for r in range(n):
                lens[j, r] = self._entries[j][r].masses.size
        biggest = int(lens.max())
        masses = np.zeros((n, n, biggest))
        if self._kind == "integer":
            offs = np.zeros((n, n), dtype=np.int64)
            for j in range(n):
                for r in range(n):
                    cell = self._entries[j][r]
                    offs[j, r] = cell.offset
                    masses[j, r, : lens[j, r]] = cell.masses
            self._packed = (offs, masses, lens)
        else:
            locs = np.zeros((n, n, biggest))
            for j in range(n):
                for r in range(n):
                    cell = self._entries[j][r]
                    locs[j, r, : lens[j, r]] = cell.locations
                    masses[j, r, : lens[j, r]] = cell.masses
            self._packed = (locs, masses, lens)
        return self._packed


def check_permutation(phi: Sequence[int], n: int) -> tuple[int, ...]:
    """Validate a 0-based permutation of range(n)."""
    out = tuple(int(x) for x in phi)
    if sorted(out) != list(range(n)):
        raise ValueError(f"expected a permutation of 0..{n - 1}, got {phi!r}")
    return out


def _check_cap(model: MatrixModel, cap: int | None) -> None:
    limit = enumeration_cap() if cap is None else int(cap)
    if model.n > limit:
        raise CapacityError(
            f"n={model.n} exceeds the enumeration cap {limit}; raise "
            "DIAGSUM_ENUM_CAP (costs grow like n!) or estimate via sample()"
        )


def exact_distribution(model: MatrixModel, cap: int | None = None) -> Distribution:
    """Exact law of the diagonal sum, averaged over all n! permutations."""
    _check_cap(model, cap)
    n = model.n
    fact = math.factorial(n)
    first, masses, lens = model.packed()
    if model.kind == "integer":
        row_lo = first.min(axis=1)
        row_hi = (first + lens - 1).max(axis=1)
        width = int(row_hi.sum() - row_lo.sum()) + 1
        if width > _LATTICE_WIDTH_CAP:
            raise CapacityError(
                f"dense support of {width} lattice cells exceeds "
                f"{_LATTICE_WIDTH_CAP}; use sample()"
            )
        lo, acc = kernels.lattice_diag_sum(first, masses, lens)
        return LatticeDistribution(offset=int(lo), masses=acc / fact)
    if float(np.prod(lens.max(axis=1).astype(np.float64))) > _ATOMIC_NODE_CAP:
        raise CapacityError(
            f"per-permutation support may exceed {_ATOMIC_NODE_CAP} atoms; use sample()"
        )
    loc, mass, status = kernels.atomic_diag_sum(
        first, masses, lens, MERGE_TOL, _ATOMIC_RESULT_CAP
    )
    if status:
        raise CapacityError(
            f"accumulated support exceeds {_ATOMIC_RESULT_CAP} atoms; use sample()"
        )
    return AtomicDistribution(locations=loc, masses=mass / fact)


def pair_mixture(model: MatrixModel, j: int, k: int, r: int, s: int) -> Distribution:
    """Law of X[j,a] + X[k,b] where (a,b) is ((r,s) or (s,r)) fair-coin.

    Symmetric in (j,k) and in (r,s) separately. This is the two-row,
    two-column building block whose smoothness/concentration drives every
    theorem bound.
    """
    n = model.n
    for name, idx in (("j", j), ("k", k), ("r", r), ("s", s)):
        if not 0 <= idx < n:
            raise ValueError(f"pair_mixture: {name}={idx} out of range for n={n}")
    if j == k or r == s:
        raise ValueError("pair_mixture: need j != k and r != s")
    e = model.entries
    return mixture(
        [
            (0.5, convolve(e[j][r], e[k][s])),
            (0.5, convolve(e[k][r], e[j][s])),
        ]
    )


def pairing_decomposition(
    model: MatrixModel, phi: Sequence[int], cap: int | None = None
) -> Distribution:
    """Exact law of the diagonal sum via the fixed-pairing decomposition.

    Rows are consumed in the order given by the permutation ``phi`` as
    pairs (phi[0], phi[1]), (phi[2], phi[3]), ...; each pair contributes a
    pair-mixture factor, and for odd n the final row contributes a single
    entry factor. Averaging the resulting convolution products over the
    column choices reproduces exact_distribution (a useful cross-check:
    the two paths share no enumeration code).
    """
    _check_cap(model, cap)
    n = model.n
    phi = check_permutation(phi, n)
    m = n // 2
    e = model.entries
    factors: list[dict[tuple[int, int], Distribution]] = []
    for level in range(m):
        j, k = phi[2 * level], phi[2 * level + 1]
        level_factors: dict[tuple[int, int], Distribution] = {}
        for r in range(n):
            for s in range(r + 1, n):
                level_factors[(r, s)] = pair_mixture(model, j, k, r, s)
        factors.append(level_factors)
    if model.kind == "integer":
        unit: Distribution = LatticeDistribution.point(0)
    else:
        unit = AtomicDistribution.point(0.0)
    leaves: list[Distribution] = []

    def rec(level: int, remaining: tuple[int, ...], partial: Distribution) -> None:
        if level == m:
            if n % 2:
                partial = convolve(partial, e[phi[n - 1]][remaining[0]])
            leaves.append(partial)
            return
        for ai in range(len(remaining)):
            for bi in range(ai + 1, len(remaining)):
                a, b = remaining[ai], remaining[bi]
                rest = remaining[:ai] + remaining[ai + 1 : bi] + remaining[bi + 1 :]
                rec(level + 1, rest, convolve(partial, factors[level][(a, b)]))

    rec(0, tuple(range(n)), unit)
    # each leaf stands for 2^m equally likely ordered column choices
    weight = 1.0 / len(leaves)
    return mixture([(weight, leaf) for leaf in leaves])


def sample(model: MatrixModel, seed: int, count: int) -> AtomicDistribution:
    """Empirical law of the diagonal sum from ``count`` seeded draws.

    Uses numpy's PCG64 stream; results are reproducible for a fixed seed
    and numpy generation algorithm. The result is atomic even for integer
    models (empirical measures live on sampled reals).
    """
    count = int(count)
    if count < 1:
        raise ValueError(f"sample: count must be >= 1, got {count}")
    n = model.n
    big = 0
    for row in model.entries:
        big = max(big, max(cell.masses.size for cell in row))
    vals = np.zeros((n, n, big))
    cdf = np.ones((n, n, big))
    for j in range(n):
        for r in range(n):
            cell = model.entries[j][r]
            size = cell.masses.size
            if isinstance(cell, LatticeDistribution):
                points = cell.support.astype(np.float64)
            else:
                points = cell.locations
            vals[j, r, :size] = points
            vals[j, r, size:] = points[-1]
            cdf[j, r, :size] = np.cumsum(cell.masses)
            cdf[j, r, size - 1 :] = 1.0  # guard the rounding gap below u < 1
    rng = np.random.Generator(np.random.PCG64(seed))
    perms = rng.permuted(np.tile(np.arange(n), (count, 1)), axis=1)
    u = rng.random((count, n))
    sums = np.empty(count)
    rows = np.arange(n)[None, :]
    chunk = max(1, (1 << 22) // (n * big))
    for start in range(0, count, chunk):
        stop = min(count, start + chunk)
        c = cdf[rows, perms[start:stop]]
        v = vals[rows, perms[start:stop]]
        idx = (u[start:stop, :, None] > c).sum(axis=2)
        draws = np.take_along_axis(v, idx[:, :, None], axis=2)[:, :, 0]
        sums[start:stop] = draws.sum(axis=1)
    locs, counts = np.unique(sums, return_counts=True)
    return AtomicDistribution(locations=locs, masses=counts / count)
