"""Row reduction over F_p with numpy only; used when the extension is absent."""

import numpy as np


def rref_inplace(a: np.ndarray, p: int) -> list[int]:
    nrows, ncols = a.shape
    row = 0
    pivots = []
    for col in range(ncols):
        if row >= nrows:
            break
        nz = np.flatnonzero(a[row:, col])
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            a[[row, piv], col:] = a[[piv, row], col:]
        s = pow(int(a[row, col]), -1, p)
        if s != 1:
            a[row, col:] = a[row, col:] * s % p
        f = a[:, col].copy()
        f[row] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            a[hit, col:] = (a[hit, col:] - np.outer(f[hit], a[row, col:])) % p
        pivots.append(col)
        row += 1
    return pivots
