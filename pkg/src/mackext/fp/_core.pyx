# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row reduction over F_p for small primes."""

cdef long long _inv(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_inplace(long long[:, ::1] a, long long p):
    """Reduce ``a`` (entries in [0, p)) to reduced row echelon form in place.

    Returns the list of pivot columns; rows past the rank are zero.
    """
    cdef Py_ssize_t nrows = a.shape[0], ncols = a.shape[1]
    cdef Py_ssize_t row = 0, col, r, c, piv
    cdef long long f, s, tmp
    pivots = []
    for col in range(ncols):
        if row >= nrows:
            break
        piv = -1
        for r in range(row, nrows):
            if a[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != row:
            for c in range(col, ncols):
                tmp = a[row, c]
                a[row, c] = a[piv, c]
                a[piv, c] = tmp
        s = _inv(a[row, col], p)
        if s != 1:
            for c in range(col, ncols):
                a[row, c] = (a[row, c] * s) % p
        for r in range(nrows):
            if r == row:
                continue
            f = a[r, col]
            if f == 0:
                continue
            f = p - f
            for c in range(col, ncols):
                if a[row, c] != 0:
                    a[r, c] = (a[r, c] + f * a[row, c]) % p
        pivots.append(col)
        row += 1
    return pivots
