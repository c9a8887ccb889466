"""Upper bounds for diagonal-sum smoothness and concentration.

The central estimate: for the diagonal sum of an n x n model, both the
lattice smoothness d_TV(S, 1 + S) and the concentration Q(S; t) are at most

    K(1/(8*eps)) / sqrt(pi) / sqrt(1/8 + floor(m/2) * aggregate),

with m = floor(n/2), where ``aggregate`` averages a per-pair quantity
(one minus the smoothness / concentration of the symmetrized pair
mixtures), eps dominates every individual pair quantity, and K is the
numerically maximized constant from :func:`bound_constant`. Variants: an
explicit Bernoulli-matrix form computed from the success probabilities
alone, and a fixed-pairing form that accepts certified lower bounds on
the pair quantities and a variance-style epsilon condition.

Also here: the quadratic-mean bound for sums of independent variables,
entrywise relaxations of the pair aggregates, the closed-form Bernoulli
pair statistics, and inverse-power-moment bounds for E(alpha + Y)^-beta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import _kernels as kernels
from .dist_core import (
    MERGE_TOL,
    AtomicDistribution,
    Distribution,
    KindMismatchError,
    LatticeDistribution,
    concentration,
    smoothness,
)
from .diag_sum import (
    CapacityError,
    MatrixModel,
    check_permutation,
    enumeration_cap,
    exact_distribution,
)

__all__ = [
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
]

# Smallest auto-selected epsilon; keeps the constant finite when every
# pair quantity vanishes (e.g. constant entries).
EPSILON_FLOOR = 1e-12

# Dense width cap for lattice pair-mixture tables.
_TABLE_WIDTH_CAP = 1 << 22

_GRID_POINTS = 4096
_GRID_LO = 1e-8
_GOLDEN_REL_TOL = 1e-12


class EpsilonViolationError(ValueError):
    """A pair quantity exceeds the supplied epsilon (precondition failure)."""


@dataclass(frozen=True)
class BoundConstant:
    """Maximization result for the bound constant.

    ``value`` is sup over x >= 0 of

        h(x) = (alpha + x)^beta / (1 + x)
               * (x / (alpha + 1 + x)^beta + alpha^-beta),

    attained (or approached, for beta = 1) at ``maximizer``. It always
    lies in [1, 1 + beta/alpha] and decreases in alpha. For beta = 1/2
    the interior maximizer is a root of an explicit quintic and
    ``quintic_residual`` reports |quintic(maximizer)| normalized by the
    largest coefficient magnitude (None for other beta).
    """

    alpha: float
    beta: float
    value: float
    maximizer: float
    quintic_residual: float | None


def _h_func(alpha: float, beta: float):
    a_neg = alpha**-beta

    def h(x):
        return (alpha + x) ** beta / (1.0 + x) * (
            x / (alpha + 1.0 + x) ** beta + a_neg
        )

    return h


def _golden_max(f, a: float, b: float) -> float:
    """Golden-section maximization on [a, b]; relative x-tolerance 1e-12."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    invphi2 = (3.0 - math.sqrt(5.0)) / 2.0
    span = b - a
    c = a + invphi2 * span
    d = a + invphi * span
    fc = f(c)
    fd = f(d)
    scale = max(1.0, abs(a), abs(b))
    for _ in range(200):
        if span <= _GOLDEN_REL_TOL * scale:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            span = b - a
            c = a + invphi2 * span
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            span = b - a
            d = a + invphi * span
            fd = f(d)
    return 0.5 * (a + b)


def _quintic_coeffs(alpha: float) -> np.ndarray:
    """Ascending coefficients of the beta=1/2 critical-point quintic."""
    a = alpha
    return np.array(
        [
            (1.0 + a) ** 2 * (1.0 - 3.0 * a),
            (1.0 + a) * (1.0 - 9.0 * a - 6.0 * a**2),
            -(2.0 + 15.0 * a + 15.0 * a**2 + 3.0 * a**3),
            -(2.0 + 10.0 * a + 5.0 * a**2),
            1.0 - 2.0 * a,
            1.0,
        ]
    )


def bound_constant(alpha: float, beta: float = 0.5) -> BoundConstant:
    """Numerically maximize h over x >= 0 (1e-9 accurate in the value).

    Log grid plus golden-section refinement of every grid-local maximum;
    for beta = 1/2 the winner is Newton-polished on the quintic. The grid
    extends to 1e12 * (1 + 1/alpha) because the maximizer diverges as
    beta -> 1 (at beta = 1, h increases to its sup 1 + 1/alpha).
    """
    alpha = float(alpha)
    beta = float(beta)
    if not (math.isfinite(alpha) and alpha > 0.0):
        raise ValueError(f"bound_constant: alpha must be positive, got {alpha!r}")
    if not 0.0 < beta <= 1.0:
        raise ValueError(f"bound_constant: beta must be in (0, 1], got {beta!r}")
    h = _h_func(alpha, beta)
    xs = np.concatenate(
        [[0.0], np.geomspace(_GRID_LO, 1e12 * (1.0 + 1.0 / alpha), _GRID_POINTS)]
    )
    vals = h(xs)
    last = xs.size - 1
    interior = np.flatnonzero(
        (vals[1:-1] >= vals[:-2]) & (vals[1:-1] >= vals[2:])
    ) + 1
    local = []
    if vals[0] >= vals[1]:
        local.append(0)
    local.extend(int(i) for i in interior)
    if vals[last] >= vals[last - 1]:
        local.append(last)
    best_x = 0.0
    best_v = float(vals[0])
    for i in local:
        a = xs[i - 1] if i > 0 else 0.0
        b = xs[i + 1] if i < last else xs[last]
        x = _golden_max(h, float(a), float(b))
        for cand in (x, float(xs[i])):
            v = float(h(cand))
            if v > best_v:
                best_x, best_v = cand, v
    residual = None
    if beta == 0.5:
        coeffs = _quintic_coeffs(alpha)
        desc = coeffs[::-1]
        deriv = np.polyder(np.poly1d(desc)).coeffs
        x = best_x
        for _ in range(100):
            slope = float(np.polyval(deriv, x))
            if slope == 0.0:
                break
            step = float(np.polyval(desc, x)) / slope
            nxt = x - step
            if nxt < 0.0:
                nxt = 0.0
            if abs(nxt - x) <= 1e-15 * max(1.0, abs(x)):
                x = nxt
                break
            x = nxt
        v = float(h(x)) if math.isfinite(x) else -math.inf
        # the polished root is the same critical point up to float noise;
        # keep it unless the value genuinely dropped
        if v >= best_v * (1.0 - 1e-13):
            best_x, best_v = x, max(v, best_v)
        residual = float(
            abs(np.polyval(desc, best_x)) / np.max(np.abs(coeffs))
        )
    return BoundConstant(
        alpha=alpha,
        beta=beta,
        value=best_v,
        maximizer=best_x,
        quintic_residual=residual,
    )


def independent_sum_bound(quantities: Sequence[float] | np.ndarray) -> float:
    """Concentration/smoothness bound for a sum of independent variables.

    ``quantities[j]`` is the concentration Q(Y_j; t) (or the one-step
    smoothness distance) of the j-th summand; the bound is
    sqrt(2/pi) / sqrt(1/4 + sum_j (1 - q_j)).
    """
    q = np.asarray(quantities, dtype=np.float64)
    if q.size == 0:
        raise ValueError("independent_sum_bound: need at least one summand")
    if not np.all(np.isfinite(q)) or np.any(q < 0.0) or np.any(q > 1.0):
        raise ValueError("independent_sum_bound: quantities must lie in [0, 1]")
    return float(math.sqrt(2.0 / math.pi) / math.sqrt(0.25 + float((1.0 - q).sum())))


@dataclass(frozen=True)
class BoundReport:
    """One evaluated theorem bound.

    ``bound_value`` is the raw theorem value (may exceed 1);
    ``bound_clipped`` is min(1, raw). ``exact`` and ``slack`` (raw bound
    minus exact) are filled when the exact distribution is within the
    enumeration cap. ``t`` is the window width for concentration-flavored
    bounds, None for smoothness ones.
    """

    bound_name: str
    epsilon: float
    aggregate: float
    constant: float
    bound_value: float
    bound_clipped: float
    t: float | None = None
    exact: float | None = None
    slack: float | None = None


def _offdiag_mask(n: int) -> np.ndarray:
    off = ~np.eye(n, dtype=bool)
    return off[:, :, None, None] & off[None, None, :, :]


def _masked_stats(table: np.ndarray, mask: np.ndarray):
    vals = table[mask]
    agg = float(vals.mean())
    flat = np.where(mask, table, -np.inf)
    idx = np.unravel_index(int(np.argmax(flat)), table.shape)
    return agg, float(table[idx]), idx


def _guard_lattice_tables(model: MatrixModel) -> None:
    offs, _, lens = model.packed()
    width = 2 * int(offs.max() - offs.min()) + 2 * int(lens.max()) - 1
    if width > _TABLE_WIDTH_CAP:
        raise CapacityError(
            f"pair-mixture support of {width} lattice cells exceeds {_TABLE_WIDTH_CAP}"
        )


def _nu_table(model: MatrixModel) -> np.ndarray:
    if model.kind != "integer":
        raise KindMismatchError("pair smoothness needs integer-valued entries")
    _guard_lattice_tables(model)
    offs, masses, lens = model.packed()
    return kernels.lattice_pair_nu(offs, masses, lens)


def _zeta_table(model: MatrixModel, t: float) -> np.ndarray:
    ts = np.array([float(t)])
    if not ts[0] >= 0.0:
        raise ValueError(f"t must be >= 0, got {t!r}")
    first, masses, lens = model.packed()
    if model.kind == "integer":
        _guard_lattice_tables(model)
        return kernels.lattice_pair_zeta(first, masses, lens, ts)[0]
    return kernels.atomic_pair_zeta(first, masses, lens, ts, MERGE_TOL)[0]


def _resolve_epsilon(
    epsilon: float | None, max_q: float, idx, what: str
) -> float:
    if epsilon is None:
        return min(1.0, max(max_q, EPSILON_FLOOR))
    eps = float(epsilon)
    if not 0.0 < eps <= 1.0:
        raise ValueError(f"epsilon must be in (0, 1], got {epsilon!r}")
    if max_q > eps:
        raise EpsilonViolationError(
            f"{what} {max_q!r} at (j,k,r,s)={tuple(int(i) for i in idx)} "
            f"exceeds epsilon={eps!r}"
        )
    return eps


def _theorem_value(eps: float, aggregate: float, n: int) -> tuple[float, float]:
    cst = bound_constant(1.0 / (8.0 * eps)).value
    m = n // 2
    raw = cst / (math.sqrt(math.pi) * math.sqrt(0.125 + (m // 2) * aggregate))
    return cst, raw


def _exact_within_cap(model: MatrixModel, cap: int | None) -> Distribution | None:
    limit = enumeration_cap() if cap is None else int(cap)
    if model.n > limit:
        return None
    return exact_distribution(model, limit)


def smoothness_bound(
    model: MatrixModel, epsilon: float | None = None, cap: int | None = None
) -> BoundReport:
    """Bound d_TV(S, 1+S) from the pair-mixture smoothness table.

    ``epsilon`` must dominate every pair quantity (auto-selected to the
    table maximum when None, the tightest admissible choice). The exact
    distance is attached whenever n is within the enumeration cap.
    """
    table = _nu_table(model)
    mask = _offdiag_mask(model.n)
    agg, mx, idx = _masked_stats(table, mask)
    eps = _resolve_epsilon(epsilon, mx, idx, "pair smoothness quantity")
    cst, raw = _theorem_value(eps, agg, model.n)
    dist = _exact_within_cap(model, cap)
    exact = smoothness(dist) if dist is not None else None
    return BoundReport(
        bound_name="smoothness",
        epsilon=eps,
        aggregate=agg,
        constant=cst,
        bound_value=raw,
        bound_clipped=min(1.0, raw),
        exact=exact,
        slack=None if exact is None else raw - exact,
    )


def concentration_bound(
    model: MatrixModel,
    t: float,
    epsilon: float | None = None,
    cap: int | None = None,
) -> BoundReport:
    """Bound the concentration Q(S; t) from the pair-mixture table."""
    table = _zeta_table(model, t)
    mask = _offdiag_mask(model.n)
    agg, mx, idx = _masked_stats(table, mask)
    eps = _resolve_epsilon(epsilon, mx, idx, "pair concentration quantity")
    cst, raw = _theorem_value(eps, agg, model.n)
    dist = _exact_within_cap(model, cap)
    exact = concentration(dist, t) if dist is not None else None
    return BoundReport(
        bound_name="concentration",
        epsilon=eps,
        aggregate=agg,
        constant=cst,
        bound_value=raw,
        bound_clipped=min(1.0, raw),
        t=float(t),
        exact=exact,
        slack=None if exact is None else raw - exact,
    )


def _bernoulli_pair_tables(ps: np.ndarray):
    a = ps[:, None, :, None]  # p[j, r]
    b = ps[None, :, None, :]  # p[k, s]
    c = ps[None, :, :, None]  # p[k, r]
    d = ps[:, None, None, :]  # p[j, s]
    u = a + b + c + d
    v = a * b + c * d
    w = 0.5 * u - v
    tau = np.minimum(w, 1.0 - w)
    sig2 = 0.5 * u + v - 0.25 * u**2
    return tau, 0.5 * sig2


def bernoulli_matrix_bounds(
    ps: Sequence[Sequence[float]] | np.ndarray,
    epsilon: float | None = None,
    cap: int | None = None,
) -> tuple[BoundReport, BoundReport]:
    """Explicit bounds for Bernoulli(p[j][r]) entries.

    Returns (smoothness report, concentration-at-0 report) computed from
    the closed-form pair statistics; no distribution arithmetic is
    involved in the bounds themselves. A supplied epsilon is validated
    against both tables.
    """
    arr = np.asarray(ps, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("bernoulli_matrix_bounds: probability grid must be square")
    n = arr.shape[0]
    if n < 2:
        raise ValueError("bernoulli_matrix_bounds: need n >= 2")
    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError("bernoulli_matrix_bounds: probabilities must lie in [0, 1]")
    tau, half_sig2 = _bernoulli_pair_tables(arr)
    mask = _offdiag_mask(n)
    chi, tmax, tidx = _masked_stats(tau, mask)
    psi, smax, sidx = _masked_stats(half_sig2, mask)
    eps_s = _resolve_epsilon(epsilon, tmax, tidx, "pair statistic tau")
    eps_c = _resolve_epsilon(epsilon, smax, sidx, "pair statistic sigma^2/2")
    cst_s, raw_s = _theorem_value(eps_s, chi, n)
    cst_c, raw_c = _theorem_value(eps_c, psi, n)
    dist = _exact_within_cap(MatrixModel.bernoulli(arr), cap)
    exact_s = smoothness(dist) if dist is not None else None
    exact_c = concentration(dist, 0.0) if dist is not None else None
    smooth = BoundReport(
        bound_name="bernoulli_smoothness",
        epsilon=eps_s,
        aggregate=chi,
        constant=cst_s,
        bound_value=raw_s,
        bound_clipped=min(1.0, raw_s),
        exact=exact_s,
        slack=None if exact_s is None else raw_s - exact_s,
    )
    conc = BoundReport(
        bound_name="bernoulli_concentration0",
        epsilon=eps_c,
        aggregate=psi,
        constant=cst_c,
        bound_value=raw_c,
        bound_clipped=min(1.0, raw_c),
        t=0.0,
        exact=exact_c,
        slack=None if exact_c is None else raw_c - exact_c,
    )
    return smooth, conc


def fixed_pairing_bound(
    model: MatrixModel,
    phi: Sequence[int],
    t: float | None = None,
    lower_bounds: np.ndarray | None = None,
    epsilon: float | None = None,
    cap: int | None = None,
) -> BoundReport:
    """Generalized bound for one fixed row pairing.

    Rows are paired (phi[0], phi[1]), (phi[2], phi[3]), ...; the
    aggregate averages certified lower bounds of the pair quantities over
    the pairing's rows and all ordered column pairs. ``lower_bounds``
    (shape n x n x n x n, indexed [j, k, r, s], diagonals ignored)
    defaults to the computed table itself. epsilon must satisfy the
    variance condition mean(q^2) - mean(q)^2 <= eps * mean(q); when None
    the smallest admissible value is chosen.

    ``t`` selects the concentration flavor (any model kind); t=None the
    smoothness flavor (integer models only).
    """
    n = model.n
    phi = check_permutation(phi, n)
    table = _nu_table(model) if t is None else _zeta_table(model, t)
    mask = _offdiag_mask(n)
    if lower_bounds is None:
        lb = table
    else:
        lb = np.asarray(lower_bounds, dtype=np.float64)
        if lb.shape != table.shape:
            raise ValueError(
                f"lower_bounds must have shape {table.shape}, got {lb.shape}"
            )
        good = (
            np.isfinite(lb[mask])
            & (lb[mask] >= 0.0)
            & (lb[mask] <= 1.0)
            # 1e-12 slack: exact mathematical values must not be rejected
            # for rounding in the computed table
            & (lb[mask] <= table[mask] + 1e-12)
        )
        if not bool(good.all()):
            bad = np.array(np.where(mask))[:, ~good][:, 0]
            raise ValueError(
                "lower_bounds must lie in [0, 1] and not exceed the computed "
                f"pair quantity; first violation at (j,k,r,s)={tuple(bad)}"
            )
    m = n // 2
    rs = ~np.eye(n, dtype=bool)
    parts = [lb[phi[2 * l], phi[2 * l + 1]][rs] for l in range(m)]
    flat = np.concatenate(parts)
    xi1 = float(flat.mean())
    xi2 = float((flat**2).mean())
    spread = xi2 - xi1 * xi1
    if epsilon is None:
        need = spread / xi1 if xi1 > 0.0 else 0.0
        eps = min(1.0, max(need, EPSILON_FLOOR))
    else:
        eps = float(epsilon)
        if not 0.0 < eps <= 1.0:
            raise ValueError(f"epsilon must be in (0, 1], got {epsilon!r}")
        if spread > eps * xi1:
            raise EpsilonViolationError(
                f"variance condition fails: mean(q^2) - mean(q)^2 = {spread!r} "
                f"> epsilon * mean(q) = {eps * xi1!r}"
            )
    cst, raw = _theorem_value(eps, xi1, n)
    dist = _exact_within_cap(model, cap)
    if dist is None:
        exact = None
    elif t is None:
        exact = smoothness(dist)
    else:
        exact = concentration(dist, t)
    return BoundReport(
        bound_name="pairing_smoothness" if t is None else "pairing_concentration",
        epsilon=eps,
        aggregate=xi1,
        constant=cst,
        bound_value=raw,
        bound_clipped=min(1.0, raw),
        t=None if t is None else float(t),
        exact=exact,
        slack=None if exact is None else raw - exact,
    )


class EntrywiseAggregates(NamedTuple):
    """Entrywise relaxations of the pair aggregates (valid substitutes).

    Each is an average over all n^2 entries of one minus the entry's own
    smoothness distance / concentration; they never exceed the pair
    aggregates, so substituting them into the theorem keeps the bounds
    valid (useless for constant entries, where they vanish).
    """

    smoothness_aggregate: float | None
    concentration_aggregate: float | None


def entrywise_aggregates(
    model: MatrixModel, t: float | None = None
) -> EntrywiseAggregates:
    smooth_agg = None
    conc_agg = None
    if model.kind == "integer":
        smooth_agg = float(
            np.mean([1.0 - smoothness(c) for row in model.entries for c in row])
        )
    elif t is None:
        raise ValueError("entrywise_aggregates: t is required for real models")
    if t is not None:
        tt = float(t)
        if not tt >= 0.0:
            raise ValueError(f"t must be >= 0, got {t!r}")
        conc_agg = float(
            np.mean([1.0 - concentration(c, tt) for row in model.entries for c in row])
        )
    return EntrywiseAggregates(smooth_agg, conc_agg)


class BernoulliPairStats(NamedTuple):
    """Closed-form statistics of the two-entry Bernoulli pair mixture."""

    u: float
    v: float
    w: float
    tau: float
    sigma2: float
    tv_smooth: float
    conc0: float


def bernoulli_pair_stats(a: float, b: float, c: float, d: float) -> BernoulliPairStats:
    """Statistics of R = (Be(a)*Be(b) + Be(c)*Be(d)) / 2 (fair mixture of
    the two convolutions).

    R has masses (1 - w - v/2, w, v/2) on {0, 1, 2}; ``tv_smooth`` is
    d_TV(R, 1 + R) and ``conc0`` the largest single mass.
    """
    vals = (float(a), float(b), float(c), float(d))
    for name, x in zip("abcd", vals):
        if not 0.0 <= x <= 1.0:
            raise ValueError(f"bernoulli_pair_stats: {name}={x!r} outside [0, 1]")
    a, b, c, d = vals
    u = a + b + c + d
    v = a * b + c * d
    w = 0.5 * u - v
    tau = min(w, 1.0 - w)
    sigma2 = 0.5 * u + v - 0.25 * u * u
    tv_smooth = (
        0.5 * (1.0 - w) + 0.25 * abs(2.0 - 4.0 * w - v) + 0.25 * abs(2.0 * w - v)
    )
    conc0 = max(1.0 - w - 0.5 * v, w, 0.5 * v)
    return BernoulliPairStats(
        u=u, v=v, w=w, tau=tau, sigma2=sigma2, tv_smooth=tv_smooth, conc0=conc0
    )


class InverseMomentBounds(NamedTuple):
    """Bounds on E(alpha + Y)^-beta for a nonnegative variable Y.

    ``taylor_rhs``: second-order bound at expansion point c (any c > 0).
    ``cor_rhs``: bound_constant value over (alpha + mean)^beta; requires
    Var Y <= E Y, None otherwise. ``opt_rhs``: the taylor bound at its
    optimal c = mean + var/mean (reported for reference; equals
    taylor_rhs when c is chosen optimally).
    """

    exact: float
    taylor_rhs: float
    cor_rhs: float | None
    opt_rhs: float


def inverse_moment_bounds(
    dist: Distribution, alpha: float, beta: float, c: float
) -> InverseMomentBounds:
    alpha = float(alpha)
    beta = float(beta)
    c = float(c)
    if not (math.isfinite(alpha) and alpha > 0.0):
        raise ValueError(f"inverse_moment_bounds: alpha must be positive, got {alpha!r}")
    if not 0.0 < beta <= 1.0:
        raise ValueError(f"inverse_moment_bounds: beta must be in (0, 1], got {beta!r}")
    if not (math.isfinite(c) and c > 0.0):
        raise ValueError(f"inverse_moment_bounds: c must be positive, got {c!r}")
    if isinstance(dist, LatticeDistribution):
        keep = dist.masses > 0.0
        y = dist.support.astype(np.float64)[keep]
        mass = dist.masses[keep]
    elif isinstance(dist, AtomicDistribution):
        y = dist.locations
        mass = dist.masses
    else:
        raise KindMismatchError("inverse_moment_bounds: expected a distribution")
    if np.any(y < 0.0):
        raise ValueError("inverse_moment_bounds: Y must be nonnegative")
    mu = float(np.dot(y, mass))
    var = float(np.dot((y - mu) ** 2, mass))
    exact = float(np.dot((alpha + y) ** -beta, mass))
    curvature = (var + (c - mu) ** 2) / (c * c) * (
        alpha**-beta - (alpha + c * (beta + 1.0)) / (alpha + c) ** (beta + 1.0)
    )
    taylor = (
        (alpha + c) ** -beta
        + beta * (c - mu) / (alpha + c) ** (beta + 1.0)
        + curvature
    )
    if var <= mu + 1e-12 * max(1.0, mu):
        mean_form = bound_constant(alpha, beta).value / (alpha + mu) ** beta
    else:
        mean_form = None
    if mu * mu + var == 0.0:
        opt = alpha**-beta
    else:
        kappa = mu / (var + mu * (alpha + mu))
        opt = (kappa**beta * mu * mu + var * alpha**-beta) / (mu * mu + var)
    return InverseMomentBounds(exact=exact, taylor_rhs=taylor, cor_rhs=mean_form, opt_rhs=opt)
