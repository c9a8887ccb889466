"""Exact arithmetic on finitely supported probability distributions.

Two canonical representations:

* :class:`LatticeDistribution` -- integer support, stored as a dense mass
  vector anchored at an integer offset.
* :class:`AtomicDistribution` -- arbitrary real support, stored as strictly
  increasing atom locations with positive masses.

Both are immutable after construction. Construction canonicalizes: lattice
vectors are trimmed of zero ends, atomic supports are sorted and atoms
closer than :data:`MERGE_TOL` are coalesced, and the total mass (validated
to be 1 within :data:`MASS_TOL`) is rescaled to exactly sum to the float
total, so downstream operations start from machine-precision normalization.

Operations (:func:`convolve`, :func:`shift`, :func:`mixture`) never mix the
two kinds; use :meth:`LatticeDistribution.to_atomic` for explicit widening.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "MASS_TOL",
    "MERGE_TOL",
    "KindMismatchError",
    "LatticeDistribution",
    "AtomicDistribution",
    "Distribution",
    "bernoulli",
    "convolve",
    "shift",
    "mixture",
    "tv_distance",
    "smoothness",
    "concentration",
]

# Total mass must equal 1 within this before rescaling.
MASS_TOL = 1e-12
# Atoms whose location differs from the start of the current group by at
# most this are coalesced into that group.
MERGE_TOL = 1e-12


class KindMismatchError(TypeError):
    """Raised when an operation receives distributions of different kinds."""


def _check_masses(masses: np.ndarray, what: str) -> None:
    if masses.ndim != 1 or masses.size == 0:
        raise ValueError(f"{what}: masses must be a nonempty 1-D array")
    if not np.all(np.isfinite(masses)):
        raise ValueError(f"{what}: masses must be finite")
    if np.any(masses < 0.0):
        raise ValueError(f"{what}: masses must be nonnegative")
    total = float(masses.sum())
    if abs(total - 1.0) > MASS_TOL:
        raise ValueError(
            f"{what}: masses must sum to 1 within {MASS_TOL:g}, got {total!r}"
        )


def merge_atoms(
    locations: np.ndarray, masses: np.ndarray, tol: float = MERGE_TOL
) -> tuple[np.ndarray, np.ndarray]:
    """Sort atoms and coalesce groups closer than ``tol``.

    Group-start semantics: scanning in increasing location, an atom joins
    the open group iff its location is within ``tol`` of the group's first
    location; otherwise it starts a new group anchored at itself. Zero-mass
    atoms are dropped after grouping.
    """
    order = np.argsort(locations, kind="stable")
    loc = locations[order]
    mass = masses[order]
    if loc.size == 0:
        return loc, mass
    # Chain grouping (gap to previous > tol starts a group) matches
    # group-start grouping whenever every chain group has diameter <= tol;
    # refine the rare violating groups with an explicit scan.
    new_group = np.empty(loc.size, dtype=bool)
    new_group[0] = True
    np.greater(np.diff(loc), tol, out=new_group[1:])
    starts = np.flatnonzero(new_group)
    ends = np.append(starts[1:], loc.size)
    bad = np.flatnonzero(loc[ends - 1] - loc[starts] > tol)
    if bad.size:
        pieces = []
        for g in range(starts.size):
            b, e = starts[g], ends[g]
            anchor = loc[b]
            pieces.append(b)
            for i in range(b + 1, e):
                if loc[i] - anchor > tol:
                    anchor = loc[i]
                    pieces.append(i)
        starts = np.asarray(pieces, dtype=np.intp)
    out_loc = loc[starts]
    out_mass = np.add.reduceat(mass, starts)
    keep = out_mass > 0.0
    return out_loc[keep], out_mass[keep]


@dataclass(frozen=True)
class LatticeDistribution:
    """Probability distribution on the integers.

    ``masses[i]`` is the probability of ``offset + i``. Construction trims
    zero masses at both ends and rescales so the vector sums to exactly 1.0
    in float64; interior zeros are kept.
    """

    offset: int
    masses: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        masses = np.ascontiguousarray(self.masses, dtype=np.float64)
        _check_masses(masses, "LatticeDistribution")
        nz = np.flatnonzero(masses)
        if nz.size == 0:
            raise ValueError("LatticeDistribution: some mass must be positive")
        lo, hi = int(nz[0]), int(nz[-1]) + 1
        masses = masses[lo:hi] / masses[lo:hi].sum()
        masses.flags.writeable = False
        object.__setattr__(self, "offset", int(self.offset) + lo)
        object.__setattr__(self, "masses", masses)

    @classmethod
    def from_masses(
        cls, masses: Sequence[float] | np.ndarray, offset: int = 0
    ) -> "LatticeDistribution":
        return cls(offset=offset, masses=np.asarray(masses, dtype=np.float64))

    @classmethod
    def point(cls, value: int) -> "LatticeDistribution":
        return cls(offset=int(value), masses=np.ones(1))

    @property
    def support(self) -> np.ndarray:
        return np.arange(self.offset, self.offset + self.masses.size)

    def mean(self) -> float:
        return float(np.dot(self.support, self.masses))

    def variance(self) -> float:
        mu = self.mean()
        return float(np.dot((self.support - mu) ** 2, self.masses))

    def to_atomic(self) -> "AtomicDistribution":
        keep = self.masses > 0.0
        return AtomicDistribution(
            locations=self.support[keep].astype(np.float64),
            masses=self.masses[keep],
        )


@dataclass(frozen=True)
class AtomicDistribution:
    """Probability distribution with finitely many real atoms.

    Locations are strictly increasing after construction; atoms within
    :data:`MERGE_TOL` of a group start are coalesced (see
    :func:`merge_atoms`) and masses are rescaled to sum to exactly 1.0.
    """

    locations: np.ndarray = field(repr=False)
    masses: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        loc = np.ascontiguousarray(self.locations, dtype=np.float64)
        mass = np.ascontiguousarray(self.masses, dtype=np.float64)
        if loc.shape != mass.shape:
            raise ValueError("AtomicDistribution: locations/masses shape mismatch")
        if not np.all(np.isfinite(loc)):
            raise ValueError("AtomicDistribution: locations must be finite")
        _check_masses(mass, "AtomicDistribution")
        loc, mass = merge_atoms(loc, mass)
        mass = mass / mass.sum()
        loc.flags.writeable = False
        mass.flags.writeable = False
        object.__setattr__(self, "locations", loc)
        object.__setattr__(self, "masses", mass)

    @classmethod
    def from_atoms(
        cls,
        locations: Sequence[float] | np.ndarray,
        masses: Sequence[float] | np.ndarray,
    ) -> "AtomicDistribution":
        return cls(
            locations=np.asarray(locations, dtype=np.float64),
            masses=np.asarray(masses, dtype=np.float64),
        )

    @classmethod
    def point(cls, value: float) -> "AtomicDistribution":
        return cls(locations=np.array([float(value)]), masses=np.ones(1))

    def mean(self) -> float:
        return float(np.dot(self.locations, self.masses))

    def variance(self) -> float:
        mu = self.mean()
        return float(np.dot((self.locations - mu) ** 2, self.masses))


Distribution = Union[LatticeDistribution, AtomicDistribution]


def bernoulli(p: float) -> LatticeDistribution:
    """Bernoulli(p) on {0, 1}."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"bernoulli: p must lie in [0, 1], got {p!r}")
    return LatticeDistribution(offset=0, masses=np.array([1.0 - p, p]))


def _same_kind(a: Distribution, b: Distribution, op: str) -> bool:
    """True for lattice pairs, False for atomic pairs; raise otherwise."""
    if isinstance(a, LatticeDistribution) and isinstance(b, LatticeDistribution):
        return True
    if isinstance(a, AtomicDistribution) and isinstance(b, AtomicDistribution):
        return False
    raise KindMismatchError(
        f"{op}: cannot mix {type(a).__name__} and {type(b).__name__}; "
        "convert explicitly with to_atomic()"
    )


def convolve(a: Distribution, b: Distribution) -> Distribution:
    """Distribution of the sum of independent draws from ``a`` and ``b``."""
    if _same_kind(a, b, "convolve"):
        return LatticeDistribution(
            offset=a.offset + b.offset, masses=np.convolve(a.masses, b.masses)
        )
    return AtomicDistribution(
        locations=np.add.outer(a.locations, b.locations).ravel(),
        masses=np.outer(a.masses, b.masses).ravel(),
    )


def shift(a: LatticeDistribution, h: int) -> LatticeDistribution:
    """Translate a lattice distribution by the integer ``h``."""
    if not isinstance(a, LatticeDistribution):
        raise KindMismatchError("shift: expected a LatticeDistribution")
    return LatticeDistribution(offset=a.offset + int(h), masses=a.masses)


def mixture(components: Iterable[tuple[float, Distribution]]) -> Distribution:
    """Finite mixture sum(w_i * d_i); weights must be >= 0 and sum to 1."""
    comps = list(components)
    if not comps:
        raise ValueError("mixture: at least one component required")
    weights = np.array([w for w, _ in comps], dtype=np.float64)
    if np.any(weights < 0.0) or abs(weights.sum() - 1.0) > MASS_TOL:
        raise ValueError("mixture: weights must be nonnegative and sum to 1")
    dists = [d for _, d in comps]
    lattice = all(isinstance(d, LatticeDistribution) for d in dists)
    if not lattice and not all(isinstance(d, AtomicDistribution) for d in dists):
        raise KindMismatchError("mixture: components must share one kind")
    if lattice:
        lo = min(d.offset for d in dists)
        hi = max(d.offset + d.masses.size for d in dists)
        acc = np.zeros(hi - lo)
        for w, d in zip(weights, dists):
            acc[d.offset - lo : d.offset - lo + d.masses.size] += w * d.masses
        return LatticeDistribution(offset=lo, masses=acc)
    return AtomicDistribution(
        locations=np.concatenate([d.locations for d in dists]),
        masses=np.concatenate([w * d.masses for w, d in zip(weights, dists)]),
    )


def tv_distance(a: Distribution, b: Distribution) -> float:
    """Total-variation distance (1/2) * sum |a({x}) - b({x})|.

    For atomic arguments, atoms of the merged support falling in the same
    :data:`MERGE_TOL` group are identified before differencing.
    """
    if _same_kind(a, b, "tv_distance"):
        lo = min(a.offset, b.offset)
        hi = max(a.offset + a.masses.size, b.offset + b.masses.size)
        diff = np.zeros(hi - lo)
        diff[a.offset - lo : a.offset - lo + a.masses.size] += a.masses
        diff[b.offset - lo : b.offset - lo + b.masses.size] -= b.masses
        return 0.5 * float(np.abs(diff).sum())
    loc = np.concatenate([a.locations, b.locations])
    signed = np.concatenate([a.masses, -b.masses])
    order = np.argsort(loc, kind="stable")
    loc, signed = loc[order], signed[order]
    # group-start grouping, same rule as merge_atoms
    total = 0.0
    i = 0
    n = loc.size
    while i < n:
        anchor = loc[i]
        acc = signed[i]
        i += 1
        while i < n and loc[i] - anchor <= MERGE_TOL:
            acc += signed[i]
            i += 1
        total += abs(acc)
    return 0.5 * total


def smoothness(a: LatticeDistribution) -> float:
    """d_TV between ``a`` and ``a`` shifted by one lattice step.

    Equals (1/2) * sum_k |a({k}) - a({k-1})|; small values mean the mass
    vector varies slowly. Defined for lattice distributions only.
    """
    if not isinstance(a, LatticeDistribution):
        raise KindMismatchError("smoothness: expected a LatticeDistribution")
    padded = np.concatenate([[0.0], a.masses, [0.0]])
    return 0.5 * float(np.abs(np.diff(padded)).sum())


def concentration(a: Distribution, t: float) -> float:
    """Levy concentration: the largest mass of a closed window [x, x+t].

    The supremum over x is attained with the window's left end at an atom,
    so a sweep over atoms is exact. ``t`` must be >= 0.
    """
    t = float(t)
    if not t >= 0.0:
        raise ValueError(f"concentration: t must be >= 0, got {t!r}")
    if isinstance(a, LatticeDistribution):
        width = int(np.floor(t)) + 1  # lattice points covered by [x, x+t]
        if width >= a.masses.size:
            return 1.0
        cs = np.concatenate([[0.0], np.cumsum(a.masses)])
        best = float(np.max(cs[width:] - cs[: cs.size - width]))
        return min(1.0, best)
    if isinstance(a, AtomicDistribution):
        loc = a.locations
        cs = np.concatenate([[0.0], np.cumsum(a.masses)])
        # right[i] = index one past the last atom inside [loc[i], loc[i]+t]
        right = np.searchsorted(loc, loc + t, side="right")
        best = float(np.max(cs[right] - cs[: loc.size]))
        return min(1.0, best)
    raise KindMismatchError("concentration: expected a distribution")
