"""Distribution arithmetic against hand oracles and known values."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagsum.dist_core import (
    MERGE_TOL,
    AtomicDistribution,
    KindMismatchError,
    LatticeDistribution,
    bernoulli,
    concentration,
    convolve,
    merge_atoms,
    mixture,
    shift,
    smoothness,
    tv_distance,
)


def lattice_dict(d: LatticeDistribution) -> dict:
    return {int(k): float(m) for k, m in zip(d.support, d.masses)}


def atomic_dict(d: AtomicDistribution) -> dict:
    return {float(l): float(m) for l, m in zip(d.locations, d.masses)}


# --- construction ------------------------------------------------------------


def test_lattice_trims_zero_ends_and_shifts_offset():
    d = LatticeDistribution.from_masses([0.0, 0.5, 0.0, 0.5, 0.0], offset=3)
    assert d.offset == 4
    np.testing.assert_allclose(d.masses, [0.5, 0.0, 0.5])
    np.testing.assert_array_equal(d.support, [4, 5, 6])


def test_lattice_keeps_interior_zeros():
    d = LatticeDistribution.from_masses([0.25, 0.0, 0.75])
    assert d.masses.size == 3 and d.masses[1] == 0.0


def test_lattice_renormalizes_tiny_drift():
    masses = np.array([0.5, 0.5 + 3e-13])
    d = LatticeDistribution.from_masses(masses)
    assert d.masses.sum() == pytest.approx(1.0, abs=1e-15)


def test_lattice_validation_errors():
    with pytest.raises(ValueError):
        LatticeDistribution.from_masses([])
    with pytest.raises(ValueError):
        LatticeDistribution.from_masses([0.5, -0.1, 0.6])
    with pytest.raises(ValueError):
        LatticeDistribution.from_masses([0.5, 0.6])
    with pytest.raises(ValueError):
        LatticeDistribution.from_masses([0.5, np.nan])
    with pytest.raises(ValueError):
        LatticeDistribution.from_masses([0.0, 0.0])


def test_lattice_is_immutable():
    d = bernoulli(0.25)
    with pytest.raises(ValueError):
        d.masses[0] = 0.9


def test_point_and_bernoulli():
    p = LatticeDistribution.point(-7)
    assert p.offset == -7 and p.masses.tolist() == [1.0]
    b = bernoulli(0.3)
    assert lattice_dict(b) == {0: 0.7, 1: 0.3}
    assert lattice_dict(bernoulli(0.0)) == {0: 1.0}
    assert lattice_dict(bernoulli(1.0)) == {1: 1.0}
    with pytest.raises(ValueError):
        bernoulli(1.5)


def test_moments():
    d = LatticeDistribution.from_masses([0.2, 0.3, 0.5], offset=10)
    assert d.mean() == pytest.approx(0.3 + 2 * 0.5 + 10)
    ex2 = 0.3 + 4 * 0.5
    assert d.variance() == pytest.approx(ex2 - 1.3**2)
    a = AtomicDistribution.from_atoms([-1.5, 2.0], [0.25, 0.75])
    assert a.mean() == pytest.approx(-1.5 * 0.25 + 2.0 * 0.75)


def test_to_atomic_drops_interior_zeros():
    d = LatticeDistribution.from_masses([0.25, 0.0, 0.75], offset=-1)
    a = d.to_atomic()
    assert atomic_dict(a) == {-1.0: 0.25, 1.0: 0.75}
    assert a.mean() == pytest.approx(d.mean())


def test_atomic_sorts_and_merges():
    a = AtomicDistribution.from_atoms([2.0, 0.0, 2.0 + 0.5e-12], [0.3, 0.4, 0.3])
    assert a.locations.tolist() == [0.0, 2.0]
    np.testing.assert_allclose(a.masses, [0.4, 0.6])


def test_atomic_validation_errors():
    with pytest.raises(ValueError):
        AtomicDistribution.from_atoms([0.0, 1.0], [1.0])
    with pytest.raises(ValueError):
        AtomicDistribution.from_atoms([np.inf], [1.0])
    with pytest.raises(ValueError):
        AtomicDistribution.from_atoms([0.0], [0.98])


def test_merge_atoms_group_start_semantics():
    # chain spacing below tol but group diameter above it: the second gap
    # must start a new group anchored at its own location
    locs = np.array([0.0, 0.8e-12, 1.6e-12])
    mass = np.array([0.2, 0.3, 0.5])
    out_loc, out_mass = merge_atoms(locs, mass, tol=MERGE_TOL)
    assert out_loc.tolist() == [0.0, 1.6e-12]
    np.testing.assert_allclose(out_mass, [0.5, 0.5])


def test_merge_atoms_keeps_separated_atoms():
    locs = np.array([3.0, 1.0, 2.0])
    mass = np.array([0.1, 0.2, 0.3])
    out_loc, out_mass = merge_atoms(locs, mass)
    assert out_loc.tolist() == [1.0, 2.0, 3.0]
    assert out_mass.tolist() == [0.2, 0.3, 0.1]


# --- convolution ---------------------------------------------------------------


def test_convolve_lattice_oracle():
    rng = np.random.default_rng(11)
    for _ in range(25):
        la = int(rng.integers(1, 5))
        lb = int(rng.integers(1, 5))
        ma = rng.random(la) + 0.01
        mb = rng.random(lb) + 0.01
        a = LatticeDistribution.from_masses(ma / ma.sum(), offset=int(rng.integers(-3, 4)))
        b = LatticeDistribution.from_masses(mb / mb.sum(), offset=int(rng.integers(-3, 4)))
        c = convolve(a, b)
        oracle = {}
        for x, mx in lattice_dict(a).items():
            for y, my in lattice_dict(b).items():
                oracle[x + y] = oracle.get(x + y, 0.0) + mx * my
        got = lattice_dict(c)
        assert set(got) == set(oracle)
        for k, v in oracle.items():
            assert got[k] == pytest.approx(v, abs=1e-14)


def test_convolve_atomic_oracle():
    rng = np.random.default_rng(12)
    for _ in range(25):
        la = int(rng.integers(1, 4))
        lb = int(rng.integers(1, 4))
        ma = rng.random(la) + 0.01
        mb = rng.random(lb) + 0.01
        a = AtomicDistribution.from_atoms(
            np.sort(rng.uniform(-2, 2, la)), ma / ma.sum()
        )
        b = AtomicDistribution.from_atoms(
            np.sort(rng.uniform(-2, 2, lb)), mb / mb.sum()
        )
        c = convolve(a, b)
        oracle_locs = np.add.outer(a.locations, b.locations).ravel()
        oracle_mass = np.outer(a.masses, b.masses).ravel()
        ref = AtomicDistribution.from_atoms(oracle_locs, oracle_mass)
        assert tv_distance(c, ref) <= 1e-14
        assert c.mean() == pytest.approx(a.mean() + b.mean(), abs=1e-12)


def test_convolve_kind_mismatch():
    with pytest.raises(KindMismatchError):
        convolve(bernoulli(0.5), AtomicDistribution.point(0.0))


def test_shift():
    d = shift(bernoulli(0.25), 3)
    assert lattice_dict(d) == {3: 0.75, 4: 0.25}
    with pytest.raises(KindMismatchError):
        shift(AtomicDistribution.point(0.0), 1)


# --- mixture ---------------------------------------------------------------------


def test_mixture_lattice():
    m = mixture([(0.25, LatticeDistribution.point(0)), (0.75, bernoulli(0.5))])
    assert lattice_dict(m) == {0: 0.25 + 0.375, 1: 0.375}


def test_mixture_atomic():
    m = mixture(
        [
            (0.5, AtomicDistribution.point(1.5)),
            (0.5, AtomicDistribution.from_atoms([0.0, 1.5], [0.4, 0.6])),
        ]
    )
    assert atomic_dict(m) == {0.0: 0.2, 1.5: 0.8}


def test_mixture_validation():
    with pytest.raises(ValueError):
        mixture([])
    with pytest.raises(ValueError):
        mixture([(0.7, bernoulli(0.5)), (0.7, bernoulli(0.5))])
    with pytest.raises(ValueError):
        mixture([(-0.5, bernoulli(0.5)), (1.5, bernoulli(0.5))])
    with pytest.raises(KindMismatchError):
        mixture([(0.5, bernoulli(0.5)), (0.5, AtomicDistribution.point(0.0))])


# --- functionals ---------------------------------------------------------------------


def test_tv_distance_known_values():
    assert tv_distance(bernoulli(0.5), bernoulli(0.5)) == 0.0
    assert tv_distance(bernoulli(0.0), bernoulli(1.0)) == 1.0
    assert tv_distance(bernoulli(0.2), bernoulli(0.7)) == pytest.approx(0.5)
    a = LatticeDistribution.point(0)
    b = LatticeDistribution.point(5)
    assert tv_distance(a, b) == 1.0


def test_tv_distance_matches_atomic_view():
    rng = np.random.default_rng(13)
    for _ in range(20):
        ma = rng.random(4) + 0.01
        mb = rng.random(3) + 0.01
        a = LatticeDistribution.from_masses(ma / ma.sum(), offset=-1)
        b = LatticeDistribution.from_masses(mb / mb.sum(), offset=0)
        d1 = tv_distance(a, b)
        d2 = tv_distance(a.to_atomic(), b.to_atomic())
        assert d1 == pytest.approx(d2, abs=1e-14)
        assert d1 == pytest.approx(tv_distance(b, a), abs=1e-15)


def test_tv_distance_atomic_groups_close_atoms():
    a = AtomicDistribution.point(1.0)
    b = AtomicDistribution.point(1.0 + 0.5e-12)
    assert tv_distance(a, b) == 0.0


def test_smoothness_known_values():
    assert smoothness(LatticeDistribution.point(4)) == 1.0
    assert smoothness(bernoulli(0.5)) == 0.5
    uniform4 = LatticeDistribution.from_masses([0.25] * 4)
    assert smoothness(uniform4) == pytest.approx(0.25)
    with pytest.raises(KindMismatchError):
        smoothness(AtomicDistribution.point(0.0))


def test_smoothness_equals_shift_tv():
    rng = np.random.default_rng(14)
    for _ in range(20):
        m = rng.random(int(rng.integers(1, 7))) + 0.01
        d = LatticeDistribution.from_masses(m / m.sum(), offset=int(rng.integers(-2, 3)))
        assert smoothness(d) == pytest.approx(tv_distance(d, shift(d, 1)), abs=1e-14)


def test_concentration_lattice():
    d = LatticeDistribution.from_masses([0.2, 0.3, 0.5])
    assert concentration(d, 0.0) == 0.5
    assert concentration(d, 0.99) == 0.5  # window still covers one point
    assert concentration(d, 1.0) == pytest.approx(0.8)
    assert concentration(d, 1.5) == pytest.approx(0.8)
    assert concentration(d, 2.0) == 1.0
    assert concentration(d, 50.0) == 1.0
    with pytest.raises(ValueError):
        concentration(d, -0.5)


def test_concentration_atomic_closed_window():
    d = AtomicDistribution.from_atoms([0.0, 0.5, 1.0], [0.2, 0.3, 0.5])
    assert concentration(d, 0.0) == 0.5
    # closed interval [0.5, 1.0] captures both endpoints
    assert concentration(d, 0.5) == pytest.approx(0.8)
    assert concentration(d, 1.0) == 1.0
    assert concentration(d, 0.49) == 0.5


def test_concentration_monotone_in_t():
    rng = np.random.default_rng(15)
    m = rng.random(6) + 0.01
    d = AtomicDistribution.from_atoms(np.sort(rng.uniform(0, 3, 6)), m / m.sum())
    values = [concentration(d, t) for t in np.linspace(0, 4, 30)]
    assert all(b >= a - 1e-15 for a, b in zip(values, values[1:]))


# --- property tests --------------------------------------------------------------------


@st.composite
def lattice_dists(draw):
    size = draw(st.integers(min_value=1, max_value=6))
    masses = draw(
        st.lists(
            st.floats(min_value=0.01, max_value=1.0),
            min_size=size,
            max_size=size,
        )
    )
    offset = draw(st.integers(min_value=-5, max_value=5))
    arr = np.asarray(masses)
    return LatticeDistribution.from_masses(arr / arr.sum(), offset=offset)


@settings(max_examples=50, deadline=None)
@given(lattice_dists(), lattice_dists())
def test_convolve_properties(a, b):
    c = convolve(a, b)
    assert c.masses.sum() == pytest.approx(1.0, abs=1e-12)
    assert c.mean() == pytest.approx(a.mean() + b.mean(), abs=1e-9)
    assert c.variance() == pytest.approx(a.variance() + b.variance(), abs=1e-9)


@settings(max_examples=50, deadline=None)
@given(lattice_dists(), lattice_dists())
def test_tv_bounds_and_symmetry(a, b):
    d = tv_distance(a, b)
    assert 0.0 <= d <= 1.0 + 1e-15
    assert d == pytest.approx(tv_distance(b, a), abs=1e-15)


@settings(max_examples=50, deadline=None)
@given(lattice_dists())
def test_smoothness_in_unit_interval(a):
    s = smoothness(a)
    assert 0.0 <= s <= 1.0 + 1e-15
