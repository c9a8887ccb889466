"""Randomized verification campaigns.

Each campaign draws seeded random instances, checks the package's
inequalities and identities against independent oracles, and returns a
:class:`CampaignResult`. The CLI ``verify`` subcommand and the
acceptance test suite both run these, so a command-line run and the test
gate always agree.

Campaigns never print; callers render ``CampaignResult.line()``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .bounds import (
    bernoulli_matrix_bounds,
    bernoulli_pair_stats,
    bound_constant,
    concentration_bound,
    fixed_pairing_bound,
    independent_sum_bound,
    inverse_moment_bounds,
    smoothness_bound,
)
from .diag_sum import MatrixModel, exact_distribution, pairing_decomposition
from .dist_core import (
    AtomicDistribution,
    LatticeDistribution,
    bernoulli,
    concentration,
    convolve,
    mixture,
    smoothness,
    tv_distance,
)
from .hafnian import (
    HafnianTensor,
    PartitionInstance,
    gnhaf,
    gnhaf_bound,
    partition_sum_bound,
)

__all__ = [
    "CampaignResult",
    "constants_regression",
    "constant_brackets",
    "theorem_dominance",
    "decomposition_equality",
    "bernoulli_algebra",
    "gnhaf_inequality",
    "partition_inequality",
    "inverse_moment_dominance",
    "independent_sum_consistency",
    "trend_report",
    "SUITES",
    "run_suites",
]

DEFAULT_SEED = 20250819

_MAX_NOTES = 8


@dataclass
class CampaignResult:
    """Outcome of one campaign: check counts and the worst margin seen.

    ``worst`` is the most negative slack across all recorded checks
    (positive when everything passed with room); ``notes`` carries the
    first few violations plus informational lines; ``data`` holds
    campaign-specific structured output (e.g. trend rows).
    """

    name: str
    checks: int = 0
    violations: int = 0
    worst: float = math.inf
    notes: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violations == 0 and self.checks > 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        worst = "n/a" if math.isinf(self.worst) else f"{self.worst:.3e}"
        return (
            f"{self.name}: {status} checks={self.checks} "
            f"violations={self.violations} worst_margin={worst}"
        )

    # --- recording helpers -------------------------------------------------
    def _margin(self, margin: float, label: str) -> None:
        self.checks += 1
        if margin < self.worst:
            self.worst = margin
        if not margin >= 0.0:  # catches NaN too
            self.violations += 1
            if len(self.notes) < _MAX_NOTES:
                self.notes.append(f"VIOLATION {label} (margin {margin:.6e})")

    def le(self, lhs: float, rhs: float, tol: float, label: str) -> None:
        """Record the ordered check lhs <= rhs + tol."""
        self._margin(rhs - lhs + tol, label)

    def close(self, a: float, b: float, tol: float, label: str) -> None:
        """Record the proximity check |a - b| <= tol."""
        self._margin(tol - abs(a - b), label)

    def true(self, cond: bool, label: str) -> None:
        self._margin(0.0 if cond else -1.0, label)

    def info(self, text: str) -> None:
        if len(self.notes) < 4 * _MAX_NOTES:
            self.notes.append(text)


def _rng(seed: int, key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(key,)))


def _random_atomic_model(rng: np.random.Generator, n: int, atoms: int = 3) -> MatrixModel:
    entries = []
    for _ in range(n):
        row = []
        for _ in range(n):
            locs = np.sort(rng.uniform(-1.0, 2.0, atoms))
            masses = rng.uniform(0.1, 1.0, atoms)
            masses /= masses.sum()
            row.append(AtomicDistribution.from_atoms(locs, masses))
        entries.append(row)
    return MatrixModel(entries)


# --- 1. constants regression ---------------------------------------------


def constants_regression() -> CampaignResult:
    """Frozen reference values of the half-power constant."""
    res = CampaignResult("constants-regression")
    first = bound_constant(0.125)
    second = bound_constant(0.25)
    res.close(first.value, 1.9241, 1e-3, "value at alpha=1/8")
    res.close(first.maximizer, 1.97329, 1e-3, "maximizer at alpha=1/8")
    res.close(second.value, 1.5593, 1e-3, "value at alpha=1/4")
    res.close(second.maximizer, 2.544854, 1e-4, "maximizer at alpha=1/4")
    res.info(f"K(1/8) = {first.value:.12f} at x = {first.maximizer:.12f}")
    res.info(f"K(1/4) = {second.value:.12f} at x = {second.maximizer:.12f}")
    return res


# --- 2. constant brackets --------------------------------------------------


def constant_brackets(seed: int = DEFAULT_SEED, cases: int = 100) -> CampaignResult:
    """1 <= K(alpha, beta) <= 1 + beta/alpha, decreasing in alpha."""
    res = CampaignResult("constant-brackets")
    rng = _rng(seed, 2)
    tol = 1e-9
    for i in range(cases):
        alpha = float(10.0 ** rng.uniform(-2.0, 2.0))
        beta = float(rng.uniform(1e-6, 1.0))
        val = bound_constant(alpha, beta).value
        res.le(1.0, val, tol, f"case {i}: lower bracket alpha={alpha} beta={beta}")
        res.le(
            val,
            1.0 + beta / alpha,
            tol,
            f"case {i}: upper bracket alpha={alpha} beta={beta}",
        )
        bigger = alpha * float(10.0 ** rng.uniform(0.1, 1.0))
        val2 = bound_constant(bigger, beta).value
        res.le(
            val2,
            val,
            tol,
            f"case {i}: monotonicity alpha {alpha} -> {bigger} beta={beta}",
        )
    return res


# --- 3. theorem dominance --------------------------------------------------


def theorem_dominance(
    seed: int = DEFAULT_SEED, per_config: int = 500, nmax: int = 6
) -> CampaignResult:
    """Every theorem bound dominates the exact quantity (slack >= -1e-10).

    Two configurations, ``per_config`` models each: Bernoulli(p) entries
    with uniform p, and 3-atom real entries. The exact distribution is
    computed once per model; reports are evaluated with cap=0 so they do
    not redo that enumeration.
    """
    res = CampaignResult("theorem-dominance")
    tol = 1e-10
    ts = (0.0, 0.5, 1.0)
    hi = max(int(nmax), 2) + 1

    rng = _rng(seed, 3)
    for i in range(per_config):
        n = int(rng.integers(2, hi))
        ps = rng.random((n, n))
        model = MatrixModel.bernoulli(ps)
        dist = exact_distribution(model, cap=n)
        exact_s = smoothness(dist)
        tag = f"bernoulli model {i} (n={n})"
        res.le(
            exact_s, smoothness_bound(model, cap=0).bound_value, tol, f"{tag} smoothness"
        )
        for t in ts:
            res.le(
                concentration(dist, t),
                concentration_bound(model, t, cap=0).bound_value,
                tol,
                f"{tag} concentration t={t}",
            )
        rep_s, rep_c = bernoulli_matrix_bounds(ps, cap=0)
        res.le(exact_s, rep_s.bound_value, tol, f"{tag} explicit smoothness")
        res.le(
            concentration(dist, 0.0),
            rep_c.bound_value,
            tol,
            f"{tag} explicit concentration",
        )
        phi = [int(x) for x in rng.permutation(n)]
        res.le(
            exact_s,
            fixed_pairing_bound(model, phi, cap=0).bound_value,
            tol,
            f"{tag} fixed pairing",
        )

    rng = _rng(seed, 4)
    for i in range(per_config):
        n = int(rng.integers(2, hi))
        model = _random_atomic_model(rng, n)
        dist = exact_distribution(model, cap=n)
        tag = f"atomic model {i} (n={n})"
        for t in ts:
            res.le(
                concentration(dist, t),
                concentration_bound(model, t, cap=0).bound_value,
                tol,
                f"{tag} concentration t={t}",
            )
        phi = [int(x) for x in rng.permutation(n)]
        res.le(
            concentration(dist, 0.5),
            fixed_pairing_bound(model, phi, t=0.5, cap=0).bound_value,
            tol,
            f"{tag} fixed pairing t=0.5",
        )
    return res


# --- 4. pairing decomposition ----------------------------------------------


def decomposition_equality(
    seed: int = DEFAULT_SEED, models: int = 100, pairings: int = 5, nmax: int = 6
) -> CampaignResult:
    """Each fixed pairing's mixture reproduces the exact law (TV <= 1e-12)."""
    res = CampaignResult("pairing-decomposition")
    rng = _rng(seed, 5)
    hi = max(int(nmax), 2) + 1
    for i in range(models):
        n = int(rng.integers(2, hi))
        if i % 2 == 0:
            model = MatrixModel.bernoulli(rng.random((n, n)))
        else:
            model = _random_atomic_model(rng, n)
        dist = exact_distribution(model, cap=n)
        for _ in range(pairings):
            phi = [int(x) for x in rng.permutation(n)]
            dec = pairing_decomposition(model, phi, cap=n)
            res.le(
                tv_distance(dec, dist),
                0.0,
                1e-12,
                f"model {i} ({model.kind}, n={n}) phi={phi}",
            )
    return res


# --- 5. Bernoulli pair algebra ----------------------------------------------


def _pair_oracle(a: float, b: float, c: float, d: float):
    r = mixture(
        [
            (0.5, convolve(bernoulli(a), bernoulli(b))),
            (0.5, convolve(bernoulli(c), bernoulli(d))),
        ]
    )
    return smoothness(r), concentration(r, 0.0)


# (u, v) -> (1 - tv_smooth, w, 1 - conc0, sigma2); all values dyadic.
_CORNER_TABLE = {
    (0.0, 0.0): (0.0, 0.0, 0.0, 0.0),
    (1.0, 0.0): (0.5, 0.5, 0.5, 0.25),
    (2.0, 0.0): (0.0, 1.0, 0.0, 0.0),
    (2.0, 1.0): (0.0, 0.0, 0.5, 1.0),
    (3.0, 1.0): (0.5, 0.5, 0.5, 0.25),
    (4.0, 2.0): (0.0, 0.0, 0.0, 0.0),
}


def bernoulli_algebra(
    seed: int = DEFAULT_SEED, random_points: int = 1000
) -> CampaignResult:
    """Closed forms vs distribution oracles on the 0.1-step grid plus
    random probability quadruples, the sandwich inequalities, and the
    exact zero-one corner table."""
    res = CampaignResult("bernoulli-pair-algebra")
    tol = 1e-12

    def check_point(a: float, b: float, c: float, d: float, where: str) -> None:
        st = bernoulli_pair_stats(a, b, c, d)
        tv_o, conc_o = _pair_oracle(a, b, c, d)
        res.close(st.tv_smooth, tv_o, tol, f"{where} tv formula")
        res.close(st.conc0, conc_o, tol, f"{where} conc0 formula")
        smooth = 1.0 - st.tv_smooth
        anti = 1.0 - st.conc0
        res.le(min(st.w, 1.0 - st.w), smooth, tol, f"{where} tv sandwich lower")
        res.le(smooth, min(2.0 * st.w, 1.0 - st.w), tol, f"{where} tv sandwich upper")
        res.le(0.5 * st.sigma2, anti, tol, f"{where} conc sandwich lower")
        res.le(anti, 2.0 * st.sigma2, tol, f"{where} conc sandwich upper")
        res.le(max(st.u - 2.0, 0.0), st.v, tol, f"{where} v sandwich lower")
        res.le(
            st.v,
            min(0.25 * st.u**2, 2.0 - st.u + 0.25 * st.u**2),
            tol,
            f"{where} v sandwich upper",
        )

    grid = np.linspace(0.0, 1.0, 11)
    for a, b, c, d in itertools.product(grid, repeat=4):
        check_point(a, b, c, d, f"grid ({a:.1f},{b:.1f},{c:.1f},{d:.1f})")
    rng = _rng(seed, 9)
    for i in range(random_points):
        a, b, c, d = (float(x) for x in rng.random(4))
        check_point(a, b, c, d, f"random point {i}")
    for a, b, c, d in itertools.product((0.0, 1.0), repeat=4):
        st = bernoulli_pair_stats(a, b, c, d)
        key = (st.u, st.v)
        where = f"corner (a,b,c,d)=({a:.0f},{b:.0f},{c:.0f},{d:.0f})"
        if key not in _CORNER_TABLE:
            res.true(False, f"{where}: unexpected (u,v)={key}")
            continue
        smooth, w, anti, sigma2 = _CORNER_TABLE[key]
        res.true(1.0 - st.tv_smooth == smooth, f"{where} table column 1")
        res.true(st.w == w, f"{where} table column 2")
        res.true(1.0 - st.conc0 == anti, f"{where} table column 3")
        res.true(st.sigma2 == sigma2, f"{where} table column 4")
    return res


# --- 6. generalized hafnian -------------------------------------------------


def gnhaf_inequality(
    seed: int = DEFAULT_SEED,
    random_cases: int = 1000,
    constant_cases: int = 100,
    nmax: int = 6,
) -> CampaignResult:
    """|gnhaf| <= symmetrized bound <= plain bound; equality on constant
    slices; exactly 1 on the all-ones tensor."""
    res = CampaignResult("gnhaf-inequality")
    rng = _rng(seed, 6)
    top = max(int(nmax), 2)

    def rel_le(lhs: float, rhs: float, label: str) -> None:
        scale = max(abs(lhs), abs(rhs), 1e-30)
        res.le(lhs / scale, rhs / scale, 1e-9, label)

    def draw_shape() -> tuple[int, int]:
        k = int(rng.integers(1, 3 if top >= 4 else 2))
        n = int(rng.integers(2 * k, top + 1))
        return k, n

    for i in range(random_cases):
        k, n = draw_shape()
        z = rng.standard_normal((k, n, n)) + 1j * rng.standard_normal((k, n, n))
        tensor = HafnianTensor(z)
        g = abs(gnhaf(tensor))
        rhs_sym, rhs_plain = gnhaf_bound(tensor)
        rel_le(g, rhs_sym, f"random tensor {i} (k={k}, n={n}): value vs sym")
        rel_le(rhs_sym, rhs_plain, f"random tensor {i} (k={k}, n={n}): sym vs plain")

    for i in range(constant_cases):
        k, n = draw_shape()
        z = np.empty((k, n, n), dtype=np.complex128)
        for l in range(k):
            z[l] = rng.standard_normal() + 1j * rng.standard_normal()
        # diagonals never enter; junk there must not matter
        idx = np.arange(n)
        z[:, idx, idx] = rng.standard_normal((k, n)) + 1j * rng.standard_normal((k, n))
        tensor = HafnianTensor(z)
        g = abs(gnhaf(tensor))
        rhs_sym, rhs_plain = gnhaf_bound(tensor)
        scale = max(g, 1e-30)
        res.close(g / scale, rhs_sym / scale, 1e-12, f"constant tensor {i}: sym equality")
        res.close(
            g / scale, rhs_plain / scale, 1e-12, f"constant tensor {i}: plain equality"
        )

    for k, n in [(1, 2), (1, 3), (1, 6), (2, 4), (2, 5), (2, 6)]:
        g = gnhaf(HafnianTensor(np.ones((k, n, n), dtype=np.complex128)))
        res.true(g == 1.0 + 0.0j, f"all-ones tensor (k={k}, n={n}) is exactly 1")
    return res


# --- 7. partition inequality -------------------------------------------------


def _random_composition(rng: np.random.Generator, n: int, d: int) -> tuple[int, ...]:
    cuts = np.sort(rng.integers(0, n + 1, size=d - 1))
    edges = np.concatenate(([0], cuts, [n]))
    return tuple(int(x) for x in np.diff(edges))


def partition_inequality(
    seed: int = DEFAULT_SEED, cases: int = 500, constant_cases: int = 100, nmax: int = 6
) -> CampaignResult:
    """Ordered-weak-partition sums never exceed the multinomial quadratic
    mean bound; equality for constant block functions."""
    res = CampaignResult("partition-inequality")
    rng = _rng(seed, 7)
    top = min(max(int(nmax), 2), 8)

    def instance(n: int, weights: tuple[int, ...], constant: bool) -> PartitionInstance:
        blocks = []
        for w in weights:
            subsets = itertools.combinations(range(n), w)
            if constant:
                val = complex(rng.standard_normal(), rng.standard_normal())
                blocks.append({s: val for s in subsets})
            else:
                blocks.append(
                    {
                        s: complex(rng.standard_normal(), rng.standard_normal())
                        for s in subsets
                    }
                )
        return PartitionInstance(n=n, weights=weights, blocks=tuple(blocks))

    for i in range(cases):
        n = int(rng.integers(2, top + 1))
        d = int(rng.integers(1, 4))
        weights = _random_composition(rng, n, d)
        lhs, rhs = partition_sum_bound(instance(n, weights, constant=False))
        scale = max(lhs, rhs, 1e-30)
        res.le(lhs / scale, rhs / scale, 1e-9, f"case {i}: n={n} weights={weights}")

    for i in range(constant_cases):
        n = int(rng.integers(2, top + 1))
        d = int(rng.integers(1, 4))
        weights = _random_composition(rng, n, d)
        lhs, rhs = partition_sum_bound(instance(n, weights, constant=True))
        scale = max(lhs, rhs, 1e-30)
        res.close(
            lhs / scale,
            rhs / scale,
            1e-12,
            f"constant case {i}: n={n} weights={weights}",
        )
    return res


# --- 8. inverse-power moments -------------------------------------------------


def inverse_moment_dominance(
    seed: int = DEFAULT_SEED, cases: int = 1000, equality_cases: int = 20
) -> CampaignResult:
    """exact <= taylor_rhs always, exact <= cor_rhs when Var <= mean, and
    the two-point family attains cor_rhs at the maximizing mean."""
    res = CampaignResult("inverse-moments")
    rng = _rng(seed, 8)
    tol = 1e-10
    for i in range(cases):
        width = int(rng.integers(1, 6))
        masses = rng.uniform(0.05, 1.0, width)
        masses /= masses.sum()
        if i % 4 == 0:
            dist: LatticeDistribution | AtomicDistribution = (
                LatticeDistribution.from_masses(masses, offset=int(rng.integers(0, 4)))
            )
        else:
            locs = np.sort(rng.uniform(0.0, 5.0, width))
            dist = AtomicDistribution.from_atoms(locs, masses)
        alpha = float(10.0 ** rng.uniform(-2.0, 2.0))
        beta = float(rng.uniform(1e-6, 1.0))
        c = float(rng.uniform(1e-3, 10.0))
        imb = inverse_moment_bounds(dist, alpha, beta, c)
        tag = f"case {i} alpha={alpha:.4g} beta={beta:.4g} c={c:.4g}"
        res.le(imb.exact, imb.taylor_rhs, tol, f"{tag}: taylor")
        if imb.cor_rhs is not None:
            res.le(imb.exact, imb.cor_rhs, tol, f"{tag}: mean-form bound")
        mu = dist.mean()
        if mu > 0.0:
            var = dist.variance()
            at_opt = inverse_moment_bounds(dist, alpha, beta, mu + var / mu)
            scale = max(abs(imb.opt_rhs), 1.0)
            res.close(
                at_opt.taylor_rhs / scale,
                imb.opt_rhs / scale,
                tol,
                f"{tag}: taylor at optimal c equals opt_rhs",
            )
            res.le(imb.exact, imb.opt_rhs, tol, f"{tag}: optimal taylor")

    for i in range(equality_cases):
        alpha = float(10.0 ** rng.uniform(-2.0, 2.0))
        beta = float(rng.uniform(0.05, 0.95))
        bc = bound_constant(alpha, beta)
        mu = bc.maximizer
        tag = f"equality case {i} alpha={alpha:.4g} beta={beta:.4g}"
        if not mu > 0.0:
            res.true(False, f"{tag}: maximizer not positive")
            continue
        dist = AtomicDistribution.from_atoms(
            [0.0, 1.0 + mu], [1.0 / (1.0 + mu), mu / (1.0 + mu)]
        )
        imb = inverse_moment_bounds(dist, alpha, beta, 1.0 + mu)
        res.true(imb.cor_rhs is not None, f"{tag}: mean-form bound applies")
        if imb.cor_rhs is not None:
            res.close(imb.exact / imb.cor_rhs, 1.0, tol, f"{tag}: attains mean-form bound")
        res.close(imb.exact / imb.taylor_rhs, 1.0, tol, f"{tag}: attains taylor")
    return res


# --- 9. independent-sum consistency -------------------------------------------


def independent_sum_consistency() -> CampaignResult:
    """Smoothness/concentration of Bernoulli(1/2) i.i.d. sums never exceed
    the quadratic-mean bound; 4-digit regression of the n=8 example."""
    res = CampaignResult("independent-sums")
    tol = 1e-12
    half = bernoulli(0.5)
    dist = convolve(half, half)
    for n in range(2, 13):
        if n > 2:
            dist = convolve(dist, half)
        res.le(
            smoothness(dist),
            independent_sum_bound([0.5] * n),
            tol,
            f"n={n}: smoothness",
        )
        for t in (0.0, 0.5, 1.0):
            q = concentration(half, t)
            res.le(
                concentration(dist, t),
                independent_sum_bound([q] * n),
                tol,
                f"n={n}: concentration t={t}",
            )
    example = independent_sum_bound([0.5] * 8)
    res.close(example, 0.3870, 1e-4, "n=8 half-quantity example, 4 digits")
    res.info(f"n=8 uniform-half bound = {example:.12f}")
    return res


# --- 10. trend report ----------------------------------------------------------


def trend_report() -> CampaignResult:
    """Bound values for the all-Bernoulli(1/2) model over n = 2..9.

    The decreasing trend is reported, not asserted; the only hard checks
    are finiteness and positivity.
    """
    res = CampaignResult("trend-report")
    rows = []
    for n in range(2, 10):
        ps = np.full((n, n), 0.5)
        model = MatrixModel.bernoulli(ps)
        rep_s = smoothness_bound(model, cap=9)
        rep_c = concentration_bound(model, 0.0, cap=9)
        res.true(
            math.isfinite(rep_s.bound_value) and rep_s.bound_value > 0.0,
            f"n={n}: smoothness bound finite",
        )
        res.true(
            math.isfinite(rep_c.bound_value) and rep_c.bound_value > 0.0,
            f"n={n}: concentration bound finite",
        )
        rows.append(
            {
                "n": n,
                "smoothness_bound": rep_s.bound_value,
                "smoothness_exact": rep_s.exact,
                "concentration0_bound": rep_c.bound_value,
                "concentration0_exact": rep_c.exact,
            }
        )
        res.info(
            f"n={n}: smooth bound {rep_s.bound_value:.6f} (exact {rep_s.exact:.6f}), "
            f"conc0 bound {rep_c.bound_value:.6f} (exact {rep_c.exact:.6f})"
        )
    smooth_vals = [r["smoothness_bound"] for r in rows]
    conc_vals = [r["concentration0_bound"] for r in rows]
    decreasing = all(b <= a for a, b in zip(smooth_vals, smooth_vals[1:])) and all(
        b <= a for a, b in zip(conc_vals, conc_vals[1:])
    )
    res.data["trend_rows"] = rows
    res.info(f"monotone decreasing trend: {'yes' if decreasing else 'no'}")
    return res


SUITES = (
    "constants",
    "brackets",
    "dominance",
    "decomposition",
    "bernoulli-pairs",
    "hafnian",
    "partition",
    "moments",
    "independent",
    "trend",
)


def _dispatch(
    name: str, seed: int, instances: int | None, nmax: int | None
) -> CampaignResult:
    top = 6 if nmax is None else int(nmax)
    if name == "constants":
        return constants_regression()
    if name == "brackets":
        return constant_brackets(seed, cases=instances or 100)
    if name == "dominance":
        return theorem_dominance(seed, per_config=instances or 500, nmax=top)
    if name == "decomposition":
        return decomposition_equality(seed, models=instances or 100, nmax=top)
    if name == "bernoulli-pairs":
        return bernoulli_algebra(seed, random_points=instances or 1000)
    if name == "hafnian":
        return gnhaf_inequality(seed, random_cases=instances or 1000, nmax=top)
    if name == "partition":
        return partition_inequality(seed, cases=instances or 500, nmax=top)
    if name == "moments":
        return inverse_moment_dominance(seed, cases=instances or 1000)
    if name == "independent":
        return independent_sum_consistency()
    if name == "trend":
        return trend_report()
    raise ValueError(f"unknown campaign {name!r}; available: {', '.join(SUITES)}")


def run_suites(
    names,
    seed: int = DEFAULT_SEED,
    instances: int | None = None,
    nmax: int | None = None,
) -> list[CampaignResult]:
    """Run the named campaigns (in SUITES order) with one shared seed.

    ``instances`` scales each campaign's main case count; ``nmax`` caps
    the random model size (2..9 sensible; enumeration is factorial)."""
    wanted = set(names)
    unknown = wanted - set(SUITES)
    if unknown:
        raise ValueError(
            f"unknown suite(s) {sorted(unknown)}; available: {', '.join(SUITES)}"
        )
    return [_dispatch(n, seed, instances, nmax) for n in SUITES if n in wanted]
