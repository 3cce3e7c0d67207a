import itertools

import numpy as np
import pytest

from mackext.errors import SizeGuard
from mackext.group import make_context
from mackext.oracle import YoshidaAlgebra, all_subgroups, ext_dims, resolve_simple, top_multiplicities


@pytest.fixture(scope="module")
def a31():
    return YoshidaAlgebra(make_context(3, 1))


@pytest.fixture(scope="module")
def a32():
    return YoshidaAlgebra(make_context(3, 2))


@pytest.mark.parametrize("p,r,n", [(3, 1, 2), (3, 2, 6), (5, 2, 8), (3, 3, 28)])
def test_subgroup_counts(p, r, n):
    subs = all_subgroups(make_context(p, r))
    assert len(subs) == len(set(subs)) == n
    assert subs[0].rank == 0 and subs[-1].rank == r


def test_size_guard():
    with pytest.raises(SizeGuard):
        all_subgroups(make_context(3, 4))
    with pytest.raises(SizeGuard):
        all_subgroups(make_context(7, 3))
    assert len(all_subgroups(make_context(7, 3), override=True)) == 2 + 2 * 57


def test_hom_dims_rank_one(a31):
    assert a31.dim(0, 0) == 3
    assert a31.dim(0, 1) == 1
    assert a31.total_dim == 6


def test_hom_spaces(a32):
    n = len(a32)
    for s, t in itertools.product(range(n), repeat=2):
        h = a32.hom(s, t)
        assert h.dim == h.expected_dim() == h.dense_solution_dim()
        for b in h.basis:
            assert h.is_equivariant(b)
        coords = np.arange(h.dim) % 3
        assert np.array_equal(h.coords(h.matrix(coords)), coords)
    assert a32.total_dim == 68


def test_composition_matches_matrices(a32):
    rng = np.random.default_rng(1)
    n = len(a32)
    for q, m, l in itertools.product(range(n), repeat=3):
        a = rng.integers(0, 3, a32.dim(m, l))
        c = rng.integers(0, 3, a32.dim(q, m))
        got = a32.compose(l, m, q, a, c)
        direct = a32.hom(m, l).matrix(a) @ a32.hom(q, m).matrix(c) % 3
        assert np.array_equal(a32.hom(q, l).matrix(got), direct)


def test_associative(a32):
    rng = np.random.default_rng(2)
    n = len(a32)
    for _ in range(60):
        q, m, k, l = rng.integers(0, n, 4)
        x = rng.integers(0, 3, a32.dim(k, l))
        y = rng.integers(0, 3, a32.dim(m, k))
        z = rng.integers(0, 3, a32.dim(q, m))
        left = a32.compose(l, m, q, a32.compose(l, k, m, x, y), z)
        right = a32.compose(l, k, q, x, a32.compose(k, m, q, y, z))
        assert np.array_equal(left, right)


def test_identity(a32):
    for q in range(len(a32)):
        e = a32.identity(q)
        for l in range(len(a32)):
            c = np.arange(a32.dim(q, l)) % 3
            assert np.array_equal(a32.compose(l, q, q, c, e), c)


@pytest.mark.parametrize("q", range(6))
def test_simples(a32, q):
    s = a32.simple(q)
    assert s.support == {h: int(h == q) for h in range(6)}


def test_simples_rank_one(a31):
    assert a31.simple(0).support == {0: 1, 1: 0}
    assert a31.simple(1).support == {0: 0, 1: 1}


def test_radical(a31, a32):
    assert a31.radical_dim == 4
    assert a32.radical_dim == 62
    assert a31.radical_powers() == [4, 1, 0]
    assert a32.radical_powers()[-1] == 0


@pytest.mark.parametrize("q", range(6))
def test_top_of_projective(a32, q):
    top = top_multiplicities(a32, q)
    assert top == {l: int(l == q) for l in range(6)}


def test_resolution_rank_nullity(a32):
    stages = resolve_simple(a32, 4)
    assert stages[0].free.dim == sum(a32.dim(0, l) for l in range(6))
    assert stages[0].kernel_dim == stages[0].free.dim - 1
    for prev, cur in zip(stages, stages[1:]):
        assert cur.free.dim == prev.kernel_dim + cur.kernel_dim


def test_ext_dims_small():
    assert ext_dims(make_context(3, 1), 5) == [1] * 6
    assert ext_dims(make_context(5, 2), 3) == [1, 2, 7, 16]


def test_ext_dims_rank_three_low_degree():
    assert ext_dims(make_context(3, 3), 2) == [1, 3, 16]
