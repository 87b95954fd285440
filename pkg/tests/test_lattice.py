"""HNF sublattice enumeration: uniqueness, counts, membership."""

import random

from hwcover.arith import sigma1, omega
from hwcover.lattice import (
    Hnf2,
    Hnf3,
    hnf2_all,
    hnf2_of,
    hnf3_all,
    hnf3_of,
    transform2,
    transform3,
)


def brute_sigma1(n):
    return sum(d for d in range(1, n + 1) if n % d == 0)


def test_2d_counts():
    for n in range(1, 40):
        lats = hnf2_all(n)
        assert len(lats) == sigma1(n) == brute_sigma1(n)
        assert len(set(lats)) == len(lats)
        assert all(h.index == n for h in lats)


def test_3d_counts():
    for n in range(1, 20):
        lats = hnf3_all(n)
        assert len(lats) == omega(n)
        assert len(set(lats)) == len(lats)
        assert all(h.index == n for h in lats)


def test_membership_of_basis_and_combinations():
    rng = random.Random(3)
    for h in rng.sample(hnf3_all(12), 10):
        c1, c2, c3 = h.columns()
        for _ in range(20):
            i, j, k = rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5)
            v = tuple(i * a + j * b + k * c for a, b, c in zip(c1, c2, c3))
            assert h.contains(v)


def test_membership_density_in_a_period_box():
    # an index-n sublattice contains n Z^3, so membership is n-periodic and
    # the box [0, n)^3 holds exactly n^3 / n = n^2 lattice points
    for n in (2, 3, 4, 6):
        for h in hnf3_all(n):
            hits = sum(
                h.contains((i, j, k))
                for i in range(n) for j in range(n) for k in range(n)
            )
            assert hits == n * n, h
    for n in (2, 3, 4, 5, 6, 8):
        for h in hnf2_all(n):
            hits = sum(h.contains((i, j)) for i in range(n) for j in range(n))
            assert hits == n, h


def test_2d_distinct_as_point_sets():
    lats = hnf2_all(12)
    for i, A in enumerate(lats):
        for B in lats[i + 1:]:
            same = all(B.contains(v) for v in A.columns()) and all(
                A.contains(v) for v in B.columns()
            )
            assert not same, (A, B)


def test_canonicalization_is_basis_independent():
    rng = random.Random(11)
    for h in rng.sample(hnf3_all(24), 15):
        cols = [list(c) for c in h.columns()]
        for _ in range(12):  # random unimodular column operations
            a, b = rng.sample(range(3), 2)
            q = rng.randint(-3, 3)
            cols[a] = [u + q * v for u, v in zip(cols[a], cols[b])]
        rng.shuffle(cols)
        assert hnf3_of(cols) == h
    for h in rng.sample(hnf2_all(30), 10):
        cols = [list(c) for c in h.columns()]
        for _ in range(8):
            a, b = rng.sample(range(2), 2)
            q = rng.randint(-3, 3)
            cols[a] = [u + q * v for u, v in zip(cols[a], cols[b])]
        assert hnf2_of(cols) == h


def test_transforms_are_involutions():
    for h in hnf2_all(18):
        assert transform2(transform2(h, (1, -1)), (1, -1)) == h
    for h in hnf3_all(8):
        assert transform3(transform3(h, (1, -1, -1)), (1, -1, -1)) == h


def test_negating_everything_fixes_any_lattice():
    for h in hnf3_all(12):
        assert transform3(h, (-1, -1, -1)) == h
    for h in hnf2_all(24):
        assert transform2(h, (-1, -1)) == h


def test_reduce_coset_is_a_transversal():
    h = Hnf2(b=4, c=3, a=2)
    reps = {h.reduce_coset(s, t) for s in range(-8, 9) for t in range(-8, 9)}
    assert reps == {(s, t) for s in range(4) for t in range(2)}
    # reduction respects the lattice: difference is always a member
    for s in range(-8, 9):
        for t in range(-8, 9):
            rs, rt = h.reduce_coset(s, t)
            assert h.contains((s - rs, t - rt))


def test_redundant_generators_are_fine():
    h = hnf2_of([(4, 0), (1, 2), (5, 2), (8, 0)])
    assert h == hnf2_of([(4, 0), (1, 2)])
    assert isinstance(h, Hnf2)
    g = hnf3_of([(2, 0, 0), (0, 2, 0), (1, 1, 1), (3, 1, 1)])
    assert isinstance(g, Hnf3)
    assert g.contains((3, 1, 1))
