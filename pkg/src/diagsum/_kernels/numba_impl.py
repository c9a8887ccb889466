"""Numba-accelerated kernels.

Contracts and packed-table formats are documented in ``numpy_impl``; this
module must stay call-compatible with it. The permutation enumerations are
iterative (explicit choice stacks) so the jitted code allocates nothing per
node beyond the argsort index buffers.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"

_CHUNK = 1 << 20


@njit(cache=True)
def lattice_diag_sum(offs, masses, lens):
    n = offs.shape[0]
    lo = 0
    hi = 0
    for j in range(n):
        mn = offs[j, 0]
        mx = offs[j, 0] + lens[j, 0] - 1
        for r in range(1, n):
            if offs[j, r] < mn:
                mn = offs[j, r]
            e = offs[j, r] + lens[j, r] - 1
            if e > mx:
                mx = e
        lo += mn
        hi += mx
    width = hi - lo + 1
    acc = np.zeros(width)
    # partial convolutions per depth; every partial hull fits in width
    buf = np.zeros((n + 1, width))
    boff = np.zeros(n + 1, dtype=np.int64)
    blen = np.zeros(n + 1, dtype=np.int64)
    buf[0, 0] = 1.0
    blen[0] = 1
    used = np.zeros(n, dtype=np.bool_)
    choice = np.full(n, -1, dtype=np.int64)
    j = 0
    col = 0
    while True:
        while col < n and used[col]:
            col += 1
        if col == n:
            j -= 1
            if j < 0:
                break
            col = choice[j]
            used[col] = False
            choice[j] = -1
            col += 1
            continue
        lq = lens[j, col]
        lp = blen[j]
        lc = lp + lq - 1
        for i in range(lc):
            buf[j + 1, i] = 0.0
        for i in range(lp):
            m = buf[j, i]
            if m != 0.0:
                for t in range(lq):
                    buf[j + 1, i + t] += m * masses[j, col, t]
        boff[j + 1] = boff[j] + offs[j, col]
        blen[j + 1] = lc
        if j == n - 1:
            base = boff[n] - lo
            for i in range(lc):
                acc[base + i] += buf[n, i]
            col += 1
        else:
            used[col] = True
            choice[j] = col
            j += 1
            col = 0
    return lo, acc


@njit(cache=True)
def _merge_sorted(loc_a, mass_a, na, loc_b, mass_b, nb, out_loc, out_mass, tol):
    """Merge two sorted atom lists with group-start coalescing."""
    i = 0
    j = 0
    m = 0
    while i < na or j < nb:
        if j >= nb or (i < na and loc_a[i] <= loc_b[j]):
            loc = loc_a[i]
            mass = mass_a[i]
            i += 1
        else:
            loc = loc_b[j]
            mass = mass_b[j]
            j += 1
        if m > 0 and loc - out_loc[m - 1] <= tol:
            out_mass[m - 1] += mass
        else:
            out_loc[m] = loc
            out_mass[m] = mass
            m += 1
    return m


@njit(cache=True)
def _compact(chunk_loc, chunk_mass, cn, acc_loc, acc_mass, an, tol):
    order = np.argsort(chunk_loc[:cn])
    sl = np.empty(cn)
    sm = np.empty(cn)
    m = 0
    for q in range(cn):
        idx = order[q]
        loc = chunk_loc[idx]
        mass = chunk_mass[idx]
        if m > 0 and loc - sl[m - 1] <= tol:
            sm[m - 1] += mass
        else:
            sl[m] = loc
            sm[m] = mass
            m += 1
    out_loc = np.empty(an + m)
    out_mass = np.empty(an + m)
    k = _merge_sorted(acc_loc, acc_mass, an, sl, sm, m, out_loc, out_mass, tol)
    return out_loc, out_mass, k


@njit(cache=True)
def atomic_diag_sum(locs, masses, lens, tol, max_atoms):
    n = lens.shape[0]
    caps = np.empty(n + 1, dtype=np.int64)
    caps[0] = 1
    for d in range(n):
        mx = lens[d, 0]
        for r in range(1, n):
            if lens[d, r] > mx:
                mx = lens[d, r]
        caps[d + 1] = caps[d] * mx
    starts = np.zeros(n + 2, dtype=np.int64)
    for d in range(n + 1):
        starts[d + 1] = starts[d] + caps[d]
    bloc = np.empty(starts[n + 1])
    bmass = np.empty(starts[n + 1])
    blen = np.zeros(n + 1, dtype=np.int64)
    bloc[0] = 0.0
    bmass[0] = 1.0
    blen[0] = 1
    tmp_loc = np.empty(caps[n])
    tmp_mass = np.empty(caps[n])
    chunk_cap = _CHUNK if _CHUNK > caps[n] else caps[n]
    chunk_loc = np.empty(chunk_cap)
    chunk_mass = np.empty(chunk_cap)
    chunk_used = 0
    acc_loc = np.empty(0)
    acc_mass = np.empty(0)
    acc_len = 0
    status = 0
    used = np.zeros(n, dtype=np.bool_)
    choice = np.full(n, -1, dtype=np.int64)
    j = 0
    col = 0
    while True:
        while col < n and used[col]:
            col += 1
        if col == n:
            j -= 1
            if j < 0:
                break
            col = choice[j]
            used[col] = False
            choice[j] = -1
            col += 1
            continue
        # convolve parent atoms with entry (j, col), coalescing as we go
        lp = blen[j]
        lq = lens[j, col]
        pbase = starts[j]
        cnt = 0
        for i in range(lp):
            pl = bloc[pbase + i]
            pm = bmass[pbase + i]
            for t in range(lq):
                tmp_loc[cnt] = pl + locs[j, col, t]
                tmp_mass[cnt] = pm * masses[j, col, t]
                cnt += 1
        order = np.argsort(tmp_loc[:cnt])
        cbase = starts[j + 1]
        m = 0
        for q in range(cnt):
            idx = order[q]
            loc = tmp_loc[idx]
            mass = tmp_mass[idx]
            if m > 0 and loc - bloc[cbase + m - 1] <= tol:
                bmass[cbase + m - 1] += mass
            else:
                bloc[cbase + m] = loc
                bmass[cbase + m] = mass
                m += 1
        blen[j + 1] = m
        if j == n - 1:
            if chunk_used + m > chunk_cap:
                acc_loc, acc_mass, acc_len = _compact(
                    chunk_loc, chunk_mass, chunk_used, acc_loc, acc_mass, acc_len, tol
                )
                chunk_used = 0
                if acc_len > max_atoms:
                    status = 1
                    break
            for i in range(m):
                chunk_loc[chunk_used + i] = bloc[cbase + i]
                chunk_mass[chunk_used + i] = bmass[cbase + i]
            chunk_used += m
            col += 1
        else:
            used[col] = True
            choice[j] = col
            j += 1
            col = 0
    if status == 0 and chunk_used > 0:
        acc_loc, acc_mass, acc_len = _compact(
            chunk_loc, chunk_mass, chunk_used, acc_loc, acc_mass, acc_len, tol
        )
        if acc_len > max_atoms:
            status = 1
    return acc_loc[:acc_len].copy(), acc_mass[:acc_len].copy(), status


@njit(cache=True)
def _fill_pair_mix(offs, masses, lens, j, k, r, s, mix):
    """Write the symmetrized pair mixture into mix; return (lo, width)."""
    o1 = offs[j, r] + offs[k, s]
    l1 = lens[j, r] + lens[k, s] - 1
    o2 = offs[k, r] + offs[j, s]
    l2 = lens[k, r] + lens[j, s] - 1
    lo = min(o1, o2)
    wm = max(o1 + l1, o2 + l2) - lo
    for i in range(wm):
        mix[i] = 0.0
    b = o1 - lo
    for i in range(lens[j, r]):
        mi = 0.5 * masses[j, r, i]
        if mi != 0.0:
            for t in range(lens[k, s]):
                mix[b + i + t] += mi * masses[k, s, t]
    b = o2 - lo
    for i in range(lens[k, r]):
        mi = 0.5 * masses[k, r, i]
        if mi != 0.0:
            for t in range(lens[j, s]):
                mix[b + i + t] += mi * masses[j, s, t]
    return lo, wm


@njit(cache=True)
def lattice_pair_nu(offs, masses, lens):
    n = offs.shape[0]
    omin = offs[0, 0]
    omax = offs[0, 0]
    lmax = 0
    for j in range(n):
        for r in range(n):
            if offs[j, r] < omin:
                omin = offs[j, r]
            if offs[j, r] > omax:
                omax = offs[j, r]
            if lens[j, r] > lmax:
                lmax = lens[j, r]
    mix = np.zeros(2 * (omax - omin) + 2 * lmax - 1)
    nu = np.full((n, n, n, n), np.nan)
    for j in range(n):
        for k in range(j + 1, n):
            for r in range(n):
                for s in range(r + 1, n):
                    _, wm = _fill_pair_mix(offs, masses, lens, j, k, r, s, mix)
                    tv = mix[0] + mix[wm - 1]
                    for i in range(1, wm):
                        tv += abs(mix[i] - mix[i - 1])
                    val = 1.0 - 0.5 * tv
                    if val < 0.0:
                        val = 0.0
                    if val > 1.0:
                        val = 1.0
                    nu[j, k, r, s] = val
                    nu[k, j, r, s] = val
                    nu[j, k, s, r] = val
                    nu[k, j, s, r] = val
    return nu


@njit(cache=True)
def lattice_pair_zeta(offs, masses, lens, ts):
    n = offs.shape[0]
    omin = offs[0, 0]
    omax = offs[0, 0]
    lmax = 0
    for j in range(n):
        for r in range(n):
            if offs[j, r] < omin:
                omin = offs[j, r]
            if offs[j, r] > omax:
                omax = offs[j, r]
            if lens[j, r] > lmax:
                lmax = lens[j, r]
    mix = np.zeros(2 * (omax - omin) + 2 * lmax - 1)
    nt = ts.size
    widths = np.empty(nt, dtype=np.int64)
    for ti in range(nt):
        widths[ti] = np.int64(np.floor(ts[ti])) + 1
    zeta = np.full((nt, n, n, n, n), np.nan)
    for j in range(n):
        for k in range(j + 1, n):
            for r in range(n):
                for s in range(r + 1, n):
                    _, wm = _fill_pair_mix(offs, masses, lens, j, k, r, s, mix)
                    for ti in range(nt):
                        w = widths[ti]
                        if w >= wm:
                            conc = 0.0
                            for i in range(wm):
                                conc += mix[i]
                        else:
                            run = 0.0
                            for i in range(w):
                                run += mix[i]
                            conc = run
                            for i in range(w, wm):
                                run += mix[i] - mix[i - w]
                                if run > conc:
                                    conc = run
                        if conc > 1.0:
                            conc = 1.0
                        val = 1.0 - conc
                        if val < 0.0:
                            val = 0.0
                        zeta[ti, j, k, r, s] = val
                        zeta[ti, k, j, r, s] = val
                        zeta[ti, j, k, s, r] = val
                        zeta[ti, k, j, s, r] = val
    return zeta


@njit(cache=True)
def atomic_pair_zeta(locs, masses, lens, ts, tol):
    n = lens.shape[0]
    lmax = 0
    for j in range(n):
        for r in range(n):
            if lens[j, r] > lmax:
                lmax = lens[j, r]
    cap = 2 * lmax * lmax
    tloc = np.empty(cap)
    tmass = np.empty(cap)
    mloc = np.empty(cap)
    mmass = np.empty(cap)
    cs = np.empty(cap + 1)
    nt = ts.size
    zeta = np.full((nt, n, n, n, n), np.nan)
    for j in range(n):
        for k in range(j + 1, n):
            for r in range(n):
                for s in range(r + 1, n):
                    cnt = 0
                    for i in range(lens[j, r]):
                        pl = locs[j, r, i]
                        pm = 0.5 * masses[j, r, i]
                        for t in range(lens[k, s]):
                            tloc[cnt] = pl + locs[k, s, t]
                            tmass[cnt] = pm * masses[k, s, t]
                            cnt += 1
                    for i in range(lens[k, r]):
                        pl = locs[k, r, i]
                        pm = 0.5 * masses[k, r, i]
                        for t in range(lens[j, s]):
                            tloc[cnt] = pl + locs[j, s, t]
                            tmass[cnt] = pm * masses[j, s, t]
                            cnt += 1
                    order = np.argsort(tloc[:cnt])
                    m = 0
                    for q in range(cnt):
                        idx = order[q]
                        loc = tloc[idx]
                        mass = tmass[idx]
                        if m > 0 and loc - mloc[m - 1] <= tol:
                            mmass[m - 1] += mass
                        else:
                            mloc[m] = loc
                            mmass[m] = mass
                            m += 1
                    cs[0] = 0.0
                    for i in range(m):
                        cs[i + 1] = cs[i] + mmass[i]
                    for ti in range(nt):
                        t = ts[ti]
                        best = 0.0
                        jj = 0
                        for i in range(m):
                            lim = mloc[i] + t
                            if jj < i:
                                jj = i
                            while jj < m and mloc[jj] <= lim:
                                jj += 1
                            run = cs[jj] - cs[i]
                            if run > best:
                                best = run
                        if best > 1.0:
                            best = 1.0
                        val = 1.0 - best
                        if val < 0.0:
                            val = 0.0
                        zeta[ti, j, k, r, s] = val
                        zeta[ti, k, j, r, s] = val
                        zeta[ti, j, k, s, r] = val
                        zeta[ti, k, j, s, r] = val
    return zeta


@njit(cache=True)
def gnhaf_raw(z):
    k = z.shape[0]
    n = z.shape[1]
    two_k = 2 * k
    total = 0.0 + 0.0j
    used = np.zeros(n, dtype=np.bool_)
    choice = np.full(two_k, -1, dtype=np.int64)
    prod = np.empty(two_k + 1, dtype=np.complex128)
    prod[0] = 1.0 + 0.0j
    pos = 0
    cand = 0
    while True:
        while cand < n and used[cand]:
            cand += 1
        if cand == n:
            pos -= 1
            if pos < 0:
                break
            cand = choice[pos]
            used[cand] = False
            choice[pos] = -1
            cand += 1
            continue
        if pos % 2 == 1:
            prod[pos + 1] = prod[pos] * z[pos // 2, choice[pos - 1], cand]
        else:
            prod[pos + 1] = prod[pos]
        if pos == two_k - 1:
            total += prod[pos + 1]
            cand += 1
        else:
            used[cand] = True
            choice[pos] = cand
            pos += 1
            cand = 0
    return total


@njit(cache=True)
def haf_raw(z):
    n = z.shape[0]
    half = n // 2
    total = 0.0 + 0.0j
    used = np.zeros(n, dtype=np.bool_)
    first = np.zeros(half, dtype=np.int64)
    partner = np.full(half, -1, dtype=np.int64)
    prod = np.empty(half + 1, dtype=np.complex128)
    prod[0] = 1.0 + 0.0j
    level = 0
    while True:
        if partner[level] == -1:
            i0 = 0
            while used[i0]:
                i0 += 1
            first[level] = i0
            used[i0] = True
            cand = i0 + 1
        else:
            used[partner[level]] = False
            cand = partner[level] + 1
        while cand < n and used[cand]:
            cand += 1
        if cand == n:
            used[first[level]] = False
            partner[level] = -1
            level -= 1
            if level < 0:
                break
            continue
        partner[level] = cand
        used[cand] = True
        prod[level + 1] = prod[level] * z[first[level], cand]
        if level == half - 1:
            total += prod[level + 1]
        else:
            level += 1
    return total
