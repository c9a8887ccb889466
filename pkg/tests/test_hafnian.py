"""Generalized hafnians and partition sums against direct enumeration."""

import itertools
import math

import numpy as np
import pytest

from diagsum.diag_sum import CapacityError
from diagsum.hafnian import (
    HafnianTensor,
    PartitionInstance,
    gnhaf,
    gnhaf_bound,
    haf,
    partition_sum_bound,
)


def gnhaf_oracle(z: np.ndarray) -> complex:
    """Injective-tuple enumeration straight from the definition."""
    k, n = z.shape[0], z.shape[1]
    total = 0.0 + 0.0j
    for tup in itertools.permutations(range(n), 2 * k):
        prod = 1.0 + 0.0j
        for level in range(k):
            prod *= z[level, tup[2 * level], tup[2 * level + 1]]
        total += prod
    return total / math.perm(n, 2 * k)


def haf_oracle(a: np.ndarray) -> complex:
    """Perfect-matching recursion on the symmetrized matrix."""
    a = 0.5 * (a + a.T)
    idx = list(range(a.shape[0]))

    def rec(rest):
        if not rest:
            return 1.0 + 0.0j
        first = rest[0]
        total = 0.0 + 0.0j
        for i, other in enumerate(rest[1:], start=1):
            total += a[first, other] * rec(rest[1:i] + rest[i + 1 :])
        return total

    return rec(idx)


def random_tensor(rng, k, n, *, real=False) -> HafnianTensor:
    shape = (k, n, n)
    if real:
        arr = rng.normal(size=shape).astype(np.complex128)
    else:
        arr = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    return HafnianTensor(arr)


# --- validation ------------------------------------------------------------------


def test_tensor_validation():
    with pytest.raises(ValueError):
        HafnianTensor(np.ones((2, 2)))  # not 3-d
    with pytest.raises(ValueError):
        HafnianTensor(np.ones((1, 2, 3)))  # not square slices
    with pytest.raises(ValueError):
        HafnianTensor(np.ones((2, 3, 3)))  # k > floor(n/2)
    with pytest.raises(ValueError):
        HafnianTensor(np.ones((0, 4, 4)))  # k = 0
    bad = np.ones((1, 2, 2), dtype=np.complex128)
    bad[0, 0, 0] = np.nan
    with pytest.raises(ValueError):
        HafnianTensor(bad)
    t = HafnianTensor(np.ones((2, 5, 5)))
    assert (t.k, t.n) == (2, 5)


def test_haf_validation():
    with pytest.raises(ValueError):
        haf(np.ones((3, 3)))  # odd
    with pytest.raises(ValueError):
        haf(np.ones((2, 3)))  # not square
    with pytest.raises(ValueError):
        haf(np.array([[np.inf, 1.0], [1.0, 0.0]]))


def test_capacity_errors():
    t = HafnianTensor(np.ones((2, 6, 6)))
    with pytest.raises(CapacityError):
        gnhaf(t, cap=10)
    with pytest.raises(CapacityError):
        haf(np.ones((6, 6)), cap=10)


# --- gnhaf values ------------------------------------------------------------------


def test_all_ones_is_exactly_one():
    for k, n in [(1, 2), (1, 5), (2, 4), (2, 6), (3, 6)]:
        assert gnhaf(HafnianTensor(np.ones((k, n, n)))) == 1 + 0j


@pytest.mark.parametrize("k,n", [(1, 2), (1, 3), (1, 5), (2, 4), (2, 5)])
def test_gnhaf_matches_oracle(k, n):
    rng = np.random.default_rng(500 + 10 * k + n)
    for _ in range(4):
        t = random_tensor(rng, k, n)
        got = gnhaf(t)
        want = gnhaf_oracle(t.entries)
        assert got == pytest.approx(want, rel=1e-12, abs=1e-12)


def test_gnhaf_multilinear_in_slices():
    rng = np.random.default_rng(21)
    base = rng.normal(size=(2, 5, 5)) + 1j * rng.normal(size=(2, 5, 5))
    bump = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    shifted = base.copy()
    shifted[0] += bump
    only_bump = base.copy()
    only_bump[0] = bump
    lhs = gnhaf(HafnianTensor(shifted))
    rhs = gnhaf(HafnianTensor(base)) + gnhaf(HafnianTensor(only_bump))
    assert lhs == pytest.approx(rhs, rel=1e-11)


def test_gnhaf_ignores_slice_diagonals():
    rng = np.random.default_rng(22)
    t = random_tensor(rng, 2, 5)
    junk = t.entries.copy()
    for level in range(2):
        np.fill_diagonal(junk[level], rng.normal(size=5) * 1e6)
    assert gnhaf(HafnianTensor(junk)) == pytest.approx(gnhaf(t), rel=1e-12)


# --- classical hafnian ------------------------------------------------------------------


def test_haf_small_hand_value():
    # n=4: haf = a01*a23 + a02*a13 + a03*a12 on the symmetric part
    a = np.arange(16, dtype=float).reshape(4, 4)
    s = 0.5 * (a + a.T)
    want = s[0, 1] * s[2, 3] + s[0, 2] * s[1, 3] + s[0, 3] * s[1, 2]
    assert haf(a) == pytest.approx(want)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_haf_matches_oracle(n):
    rng = np.random.default_rng(600 + n)
    for _ in range(3):
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        assert haf(a) == pytest.approx(haf_oracle(a), rel=1e-12)


@pytest.mark.parametrize("k,n", [(2, 4), (3, 6)])
def test_gnhaf_hafnian_relation(k, n):
    # equal symmetric slices with n = 2k: gnhaf = k! 2^k / n! * haf
    rng = np.random.default_rng(700 + n)
    a = rng.normal(size=(n, n))
    a = 0.5 * (a + a.T)
    t = HafnianTensor(np.broadcast_to(a, (k, n, n)).astype(np.complex128))
    lhs = gnhaf(t)
    rhs = math.factorial(k) * 2**k / math.factorial(n) * haf(a)
    assert lhs == pytest.approx(rhs, rel=1e-11)


# --- quadratic-mean bound ------------------------------------------------------------------


def test_gnhaf_bound_dominates():
    rng = np.random.default_rng(23)
    for _ in range(40):
        n = int(rng.integers(2, 7))
        k = int(rng.integers(1, n // 2 + 1))
        t = random_tensor(rng, k, n, real=bool(rng.integers(2)))
        rhs_sym, rhs_plain = gnhaf_bound(t)
        value = abs(gnhaf(t))
        scale = max(value, rhs_sym, rhs_plain, 1e-30)
        assert (rhs_sym - value) / scale >= -1e-9
        assert (rhs_plain - rhs_sym) / scale >= -1e-9


def test_gnhaf_bound_equality_for_constant_slices():
    rng = np.random.default_rng(24)
    for _ in range(10):
        n = int(rng.integers(2, 7))
        k = int(rng.integers(1, n // 2 + 1))
        consts = rng.normal(size=k) + 1j * rng.normal(size=k)
        z = np.empty((k, n, n), dtype=np.complex128)
        for level in range(k):
            z[level] = consts[level]
            np.fill_diagonal(z[level], rng.normal(size=n))  # junk diagonals
        t = HafnianTensor(z)
        rhs_sym, rhs_plain = gnhaf_bound(t)
        value = abs(gnhaf(t))
        want = float(np.prod(np.abs(consts)))
        assert value == pytest.approx(want, rel=1e-12, abs=1e-15)
        assert rhs_sym == pytest.approx(want, rel=1e-12, abs=1e-15)
        assert rhs_plain == pytest.approx(want, rel=1e-12, abs=1e-15)


def test_gnhaf_bound_ignores_diagonals():
    rng = np.random.default_rng(25)
    t = random_tensor(rng, 2, 5)
    junk = t.entries.copy()
    for level in range(2):
        np.fill_diagonal(junk[level], 1e9)
    assert gnhaf_bound(HafnianTensor(junk)) == pytest.approx(gnhaf_bound(t))


# --- partition inequality ------------------------------------------------------------------


def partition_oracle(inst: PartitionInstance) -> complex:
    """Sum over ordered weak partitions, enumerated as ordered set splits."""
    total = 0.0 + 0.0j

    def rec(level, remaining, acc):
        nonlocal total
        if level == len(inst.weights):
            total += acc
            return
        for comb in itertools.combinations(remaining, inst.weights[level]):
            rest = tuple(x for x in remaining if x not in comb)
            rec(level + 1, rest, acc * inst.blocks[level][comb])

    rec(0, tuple(range(inst.n)), 1.0 + 0.0j)
    return total


def random_instance(rng, n, d) -> PartitionInstance:
    cuts = sorted(rng.integers(0, n + 1, size=d - 1).tolist()) if d > 1 else []
    weights = tuple(
        b - a for a, b in zip([0] + cuts, cuts + [n])
    )
    blocks = []
    for w in weights:
        table = {}
        for comb in itertools.combinations(range(n), w):
            table[comb] = complex(rng.normal(), rng.normal())
        blocks.append(table)
    return PartitionInstance(n=n, weights=weights, blocks=tuple(blocks))


def test_partition_validation():
    with pytest.raises(ValueError):
        PartitionInstance(n=0, weights=(0,), blocks=({(): 1.0},))
    with pytest.raises(ValueError):
        PartitionInstance(n=2, weights=(), blocks=())
    with pytest.raises(ValueError):
        PartitionInstance(n=2, weights=(1, 2), blocks=({}, {}))
    with pytest.raises(ValueError):
        PartitionInstance(n=2, weights=(-1, 3), blocks=({}, {}))
    with pytest.raises(ValueError):
        # table keys must be exactly the sorted 1-subsets
        PartitionInstance(
            n=2,
            weights=(1, 1),
            blocks=({(0,): 1.0}, {(0,): 1.0, (1,): 1.0}),
        )


def test_partition_capacity():
    n = 9
    table = {comb: 1.0 for comb in itertools.combinations(range(n), n)}
    inst = PartitionInstance(n=n, weights=(n,), blocks=(table,))
    with pytest.raises(CapacityError):
        partition_sum_bound(inst)


def test_partition_bound_dominates_and_matches_oracle():
    rng = np.random.default_rng(26)
    for _ in range(40):
        n = int(rng.integers(1, 7))
        d = int(rng.integers(1, 4))
        inst = random_instance(rng, n, d)
        lhs, rhs = partition_sum_bound(inst)
        assert lhs == pytest.approx(abs(partition_oracle(inst)), rel=1e-11, abs=1e-12)
        scale = max(lhs, rhs, 1e-30)
        assert (rhs - lhs) / scale >= -1e-9


def test_partition_equality_for_constant_blocks():
    rng = np.random.default_rng(27)
    for _ in range(10):
        n = int(rng.integers(1, 7))
        d = int(rng.integers(1, 4))
        inst = random_instance(rng, n, d)
        consts = rng.normal(size=d) + 1j * rng.normal(size=d)
        blocks = tuple(
            {comb: complex(consts[l]) for comb in table}
            for l, table in enumerate(inst.blocks)
        )
        const_inst = PartitionInstance(n=n, weights=inst.weights, blocks=blocks)
        lhs, rhs = partition_sum_bound(const_inst)
        count = math.factorial(n)
        for w in inst.weights:
            count //= math.factorial(w)
        want = count * float(np.prod(np.abs(consts)))
        assert lhs == pytest.approx(want, rel=1e-11)
        assert rhs == pytest.approx(want, rel=1e-11)


def test_empty_blocks_are_legal():
    # zero-size blocks contribute a scalar factor through the empty subset
    inst = PartitionInstance(
        n=2,
        weights=(0, 2),
        blocks=({(): 3.0}, {(0, 1): 2.0}),
    )
    lhs, rhs = partition_sum_bound(inst)
    assert lhs == pytest.approx(6.0)
    assert rhs == pytest.approx(6.0)
