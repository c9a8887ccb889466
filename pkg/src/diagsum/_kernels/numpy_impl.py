"""Pure-numpy reference kernels.

Same contracts as the numba backend; used when numba is unavailable or
``DIAGSUM_BACKEND=numpy``. Results agree with the numba backend up to
float roundoff from differing summation orders.

All kernels take packed entry tables:

* lattice models: ``offs[n, n]`` int64, ``masses[n, n, L]`` float64 padded
  with zeros, ``lens[n, n]`` int64 actual lengths;
* atomic models: ``locs[n, n, L]`` float64 padded, ``masses``/``lens`` as
  above.

``*_diag_sum`` kernels return unnormalized accumulations over all n!
permutations (caller divides by n!).
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from ..dist_core import merge_atoms

NAME = "numpy"

# One compaction chunk for the atomic accumulator.
_CHUNK = 1 << 20


def lattice_diag_sum(
    offs: np.ndarray, masses: np.ndarray, lens: np.ndarray
) -> tuple[int, np.ndarray]:
    n = offs.shape[0]
    row_lo = (offs).min(axis=1)
    row_hi = (offs + lens - 1).max(axis=1)
    lo = int(row_lo.sum())
    width = int(row_hi.sum()) - lo + 1
    acc = np.zeros(width)
    entry = [[masses[j, r, : lens[j, r]] for r in range(n)] for j in range(n)]

    def rec(j: int, off: int, arr: np.ndarray, used: int) -> None:
        if j == n:
            acc[off - lo : off - lo + arr.size] += arr
            return
        for r in range(n):
            bit = 1 << r
            if used & bit:
                continue
            rec(j + 1, off + int(offs[j, r]), np.convolve(arr, entry[j][r]), used | bit)

    rec(0, 0, np.ones(1), 0)
    return lo, acc


def atomic_diag_sum(
    locs: np.ndarray,
    masses: np.ndarray,
    lens: np.ndarray,
    tol: float,
    max_atoms: int,
) -> tuple[np.ndarray, np.ndarray, int]:
    n = lens.shape[0]
    eloc = [[locs[j, r, : lens[j, r]] for r in range(n)] for j in range(n)]
    emass = [[masses[j, r, : lens[j, r]] for r in range(n)] for j in range(n)]
    acc_loc = np.empty(0)
    acc_mass = np.empty(0)
    pending: list[tuple[np.ndarray, np.ndarray]] = []
    pending_count = 0
    status = 0

    def compact() -> None:
        nonlocal acc_loc, acc_mass, pending, pending_count, status
        if not pending:
            return
        loc = np.concatenate([acc_loc] + [p[0] for p in pending])
        mass = np.concatenate([acc_mass] + [p[1] for p in pending])
        acc_loc, acc_mass = merge_atoms(loc, mass, tol)
        pending = []
        pending_count = 0
        if acc_loc.size > max_atoms:
            status = 1

    def rec(j: int, loc: np.ndarray, mass: np.ndarray, used: int) -> None:
        nonlocal pending_count
        if status:
            return
        if j == n:
            pending.append((loc, mass))
            pending_count += loc.size
            if pending_count >= _CHUNK:
                compact()
            return
        for r in range(n):
            bit = 1 << r
            if used & bit:
                continue
            cl = np.add.outer(loc, eloc[j][r]).ravel()
            cm = np.outer(mass, emass[j][r]).ravel()
            cl, cm = merge_atoms(cl, cm, tol)
            rec(j + 1, cl, cm, used | bit)

    rec(0, np.zeros(1), np.ones(1), 0)
    compact()
    return acc_loc, acc_mass, status


def _pair_mix_lattice(
    offs: np.ndarray, masses: np.ndarray, lens: np.ndarray, j: int, k: int, r: int, s: int
) -> tuple[int, np.ndarray]:
    a = np.convolve(masses[j, r, : lens[j, r]], masses[k, s, : lens[k, s]])
    b = np.convolve(masses[k, r, : lens[k, r]], masses[j, s, : lens[j, s]])
    oa = int(offs[j, r] + offs[k, s])
    ob = int(offs[k, r] + offs[j, s])
    lo = min(oa, ob)
    mix = np.zeros(max(oa + a.size, ob + b.size) - lo)
    mix[oa - lo : oa - lo + a.size] += 0.5 * a
    mix[ob - lo : ob - lo + b.size] += 0.5 * b
    return lo, mix


def _tv_smoothness(mix: np.ndarray) -> float:
    padded = np.concatenate([[0.0], mix, [0.0]])
    return 0.5 * float(np.abs(np.diff(padded)).sum())


def lattice_pair_nu(
    offs: np.ndarray, masses: np.ndarray, lens: np.ndarray
) -> np.ndarray:
    n = offs.shape[0]
    nu = np.full((n, n, n, n), np.nan)
    for j in range(n):
        for k in range(j + 1, n):
            for r in range(n):
                for s in range(r + 1, n):
                    _, mix = _pair_mix_lattice(offs, masses, lens, j, k, r, s)
                    val = min(1.0, max(0.0, 1.0 - _tv_smoothness(mix)))
                    nu[j, k, r, s] = nu[k, j, r, s] = val
                    nu[j, k, s, r] = nu[k, j, s, r] = val
    return nu


def _window_max_lattice(mix: np.ndarray, width: int) -> float:
    if width >= mix.size:
        return float(mix.sum())
    cs = np.concatenate([[0.0], np.cumsum(mix)])
    return float(np.max(cs[width:] - cs[: cs.size - width]))


def lattice_pair_zeta(
    offs: np.ndarray, masses: np.ndarray, lens: np.ndarray, ts: np.ndarray
) -> np.ndarray:
    n = offs.shape[0]
    zeta = np.full((ts.size, n, n, n, n), np.nan)
    widths = [int(np.floor(t)) + 1 for t in ts]
    for j in range(n):
        for k in range(j + 1, n):
            for r in range(n):
                for s in range(r + 1, n):
                    _, mix = _pair_mix_lattice(offs, masses, lens, j, k, r, s)
                    for ti, w in enumerate(widths):
                        conc = min(1.0, _window_max_lattice(mix, w))
                        val = min(1.0, max(0.0, 1.0 - conc))
                        zeta[ti, j, k, r, s] = zeta[ti, k, j, r, s] = val
                        zeta[ti, j, k, s, r] = zeta[ti, k, j, s, r] = val
    return zeta


def atomic_pair_zeta(
    locs: np.ndarray,
    masses: np.ndarray,
    lens: np.ndarray,
    ts: np.ndarray,
    tol: float,
) -> np.ndarray:
    n = lens.shape[0]
    zeta = np.full((ts.size, n, n, n, n), np.nan)
    for j in range(n):
        for k in range(j + 1, n):
            for r in range(n):
                for s in range(r + 1, n):
                    la = np.add.outer(
                        locs[j, r, : lens[j, r]], locs[k, s, : lens[k, s]]
                    ).ravel()
                    ma = np.outer(
                        masses[j, r, : lens[j, r]], masses[k, s, : lens[k, s]]
                    ).ravel()
                    lb = np.add.outer(
                        locs[k, r, : lens[k, r]], locs[j, s, : lens[j, s]]
                    ).ravel()
                    mb = np.outer(
                        masses[k, r, : lens[k, r]], masses[j, s, : lens[j, s]]
                    ).ravel()
                    loc, mass = merge_atoms(
                        np.concatenate([la, lb]),
                        0.5 * np.concatenate([ma, mb]),
                        tol,
                    )
                    cs = np.concatenate([[0.0], np.cumsum(mass)])
                    for ti in range(ts.size):
                        right = np.searchsorted(loc, loc + ts[ti], side="right")
                        conc = min(1.0, float(np.max(cs[right] - cs[: loc.size])))
                        val = min(1.0, max(0.0, 1.0 - conc))
                        zeta[ti, j, k, r, s] = zeta[ti, k, j, r, s] = val
                        zeta[ti, j, k, s, r] = zeta[ti, k, j, s, r] = val
    return zeta


def gnhaf_raw(z: np.ndarray) -> complex:
    """Sum over injective 2k-tuples of the slice-entry products."""
    k, n, _ = z.shape
    total = 0.0 + 0.0j
    it = itertools.permutations(range(n), 2 * k)
    while True:
        chunk = list(itertools.islice(it, 65536))
        if not chunk:
            break
        arr = np.asarray(chunk, dtype=np.intp)
        prod = z[0, arr[:, 0], arr[:, 1]].copy()
        for l in range(1, k):
            prod *= z[l, arr[:, 2 * l], arr[:, 2 * l + 1]]
        total += complex(prod.sum())
    return total


def haf_raw(z: np.ndarray) -> complex:
    """Sum over perfect matchings of the entry products (z symmetric)."""
    n = z.shape[0]

    def rec(avail: tuple[int, ...]) -> complex:
        if not avail:
            return 1.0 + 0.0j
        i0 = avail[0]
        rest = avail[1:]
        total = 0.0 + 0.0j
        for pos, jj in enumerate(rest):
            total += z[i0, jj] * rec(rest[:pos] + rest[pos + 1 :])
        return total

    return rec(tuple(range(n)))
