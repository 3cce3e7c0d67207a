import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mackext import fp


@pytest.fixture(params=fp.available_backends())
def backend(request):
    old = fp.set_backend(request.param)
    yield request.param
    fp.set_backend(old)


def brute_rank(m, p):
    # Gaussian elimination in plain Python integers
    rows = [list(map(int, r)) for r in np.asarray(m) % p]
    rank, cols = 0, len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def test_compiled_backend_built():
    assert "compiled" in fp.available_backends()


def test_unknown_backend():
    with pytest.raises(ValueError):
        fp.set_backend("gpu")


def test_rref_shape(backend):
    m = np.array([[0, 2, 4], [0, 1, 2], [3, 0, 1]])
    r, piv = fp.rref(m, 5)
    assert piv == [0, 1]
    assert r.tolist() == [[1, 0, 2], [0, 1, 2]]
    assert fp.rank(np.zeros((0, 3), dtype=np.int64), 5) == 0


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([3, 5, 7]),
    st.integers(1, 9),
    st.integers(1, 9),
    st.integers(0, 2**32 - 1),
)
def test_backends_agree(p, nr, nc, seed):
    m = np.random.default_rng(seed).integers(0, p, size=(nr, nc))
    results = {}
    for name in fp.available_backends():
        old = fp.set_backend(name)
        try:
            results[name] = fp.rref(m, p)
        finally:
            fp.set_backend(old)
    ref = results["python"]
    for r, piv in results.values():
        assert piv == ref[1]
        assert np.array_equal(r, ref[0])
    assert len(ref[1]) == brute_rank(m, p)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 5]), st.integers(1, 8), st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_nullspaces(p, nr, nc, seed):
    m = np.random.default_rng(seed).integers(0, p, size=(nr, nc))
    n = fp.nullspace(m, p)
    assert len(n) == nc - fp.rank(m, p)
    assert not (m @ n.T % p).any()
    left = fp.left_nullspace(m, p)
    assert len(left) == nr - fp.rank(m, p)
    assert not (left @ m % p).any()


def test_in_span(backend):
    b = np.array([[1, 1, 0], [0, 1, 1]])
    assert fp.in_span([[1, 2, 1]], b, 3)
    assert not fp.in_span([[1, 0, 0]], b, 3)


def test_fallback_selected_without_extension(monkeypatch):
    import importlib
    import sys

    monkeypatch.setitem(sys.modules, "mackext.fp._core", None)
    monkeypatch.delattr(fp, "_core")
    try:
        mod = importlib.reload(fp)
        assert mod.BACKEND == "python"
        assert mod.available_backends() == ["python"]
        assert mod.rank([[1, 2], [2, 4]], 5) == 1
    finally:
        monkeypatch.undo()
        importlib.reload(fp)
    assert fp.BACKEND == "compiled"
