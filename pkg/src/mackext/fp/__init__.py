"""Dense linear algebra over F_p on int64 numpy arrays.

Row reduction runs in a compiled extension when it was built, otherwise in a
numpy implementation with the same contract.  :func:`set_backend` switches
between them at runtime (used by tests and the benchmark).
"""

from __future__ import annotations

import numpy as np

from . import _fallback

try:
    from . import _core
except ImportError:  # extension not built
    _core = None

_BACKENDS = {"python": _fallback.rref_inplace}
if _core is not None:
    _BACKENDS["compiled"] = _core.rref_inplace

BACKEND = "compiled" if _core is not None else "python"
_rref_inplace = _BACKENDS[BACKEND]


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def set_backend(name: str) -> str:
    """Select the row-reduction kernel; returns the previous backend name."""
    global BACKEND, _rref_inplace
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}")
    old = BACKEND
    BACKEND, _rref_inplace = name, _BACKENDS[name]
    return old


def as_fp(m, p: int) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(m, dtype=np.int64) % p)


def rref(m, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    a = as_fp(m, p)
    if a.ndim != 2:
        raise ValueError("expected a 2-d array")
    if a.size == 0:
        return a[:0], []
    pivots = _rref_inplace(a, p)
    return a[: len(pivots)], list(pivots)


def rank(m, p: int) -> int:
    return len(rref(m, p)[1])


def row_basis(m, p: int) -> np.ndarray:
    return rref(m, p)[0]


def nullspace(m, p: int) -> np.ndarray:
    """Basis (as rows) of {x : m @ x == 0 mod p}."""
    a = as_fp(m, p)
    ncols = a.shape[1]
    r, pivots = rref(a, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
        for i, pc in enumerate(pivots):
            out[k, pc] = (-r[i, f]) % p
    return out


def left_nullspace(m, p: int) -> np.ndarray:
    """Basis (as rows) of {y : y @ m == 0 mod p}."""
    return nullspace(np.asarray(m).T, p)


def reduce_against(vectors, basis_rref: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    """Subtract multiples of an RREF basis so pivot columns become zero."""
    v = as_fp(vectors, p)
    if len(pivots):
        coeffs = v[:, pivots]
        v = (v - coeffs @ basis_rref) % p
    return v


def in_span(vectors, basis, p: int) -> bool:
    basis = as_fp(basis, p)
    vectors = as_fp(vectors, p)
    if vectors.size == 0:
        return True
    if basis.size == 0:
        return not vectors.any()
    b, piv = rref(basis, p)
    return not reduce_against(vectors, b, piv, p).any()
