"""Compiled kernels for the tridiagonal eigensolver.

Kept in a separate module so that importing the rest of the package does
not pay the numba import cost; numerics pulls this in lazily on first use.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def sturm_count(diag, off_sq, x):
    """Number of eigenvalues of the tridiagonal matrix strictly below x.

    diag is the main diagonal, off_sq the squared subdiagonal.  Uses the
    standard LDL^T sign-count recurrence; a vanishing pivot is replaced by
    a tiny number of the same sign convention, which leaves the count
    unchanged for all practical shifts.
    """
    n = diag.shape[0]
    count = 0
    q = diag[0] - x
    if q < 0.0:
        count += 1
    for i in range(1, n):
        if q == 0.0:
            q = 1e-300
        q = diag[i] - x - off_sq[i - 1] / q
        if q < 0.0:
            count += 1
    return count


@njit(cache=True)
def bisect_eigenvalues(diag, off_sq, k, lo0, hi0, max_iter):
    """Smallest k eigenvalues by Sturm bisection on [lo0, hi0].

    Returns (values, ok).  ok is False when some bracket failed to shrink
    below the width target within max_iter steps.
    """
    out = np.empty(k, dtype=np.float64)
    lo_base = lo0
    for j in range(k):
        lo = lo_base
        hi = hi0
        ok = False
        for _ in range(max_iter):
            mid = 0.5 * (lo + hi)
            if sturm_count(diag, off_sq, mid) >= j + 1:
                hi = mid
            else:
                lo = mid
            width = hi - lo
            tol = 1e-12 * abs(mid)
            if tol < 1e-12:
                tol = 1e-12
            if width <= tol:
                ok = True
                break
        if not ok:
            return out, False
        out[j] = 0.5 * (lo + hi)
        # eigenvalues come out sorted, so the next search can start at the
        # bottom of the same global interval without losing correctness
    return out, True
