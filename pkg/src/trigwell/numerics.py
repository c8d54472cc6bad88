"""Shared numerical backends: tridiagonal eigensolver, quadrature, stencils.

Everything here is generic and model-free.  The eigensolver is Sturm
bisection on a symmetric tridiagonal matrix, which is rock solid for the
stiff inverse-square discretizations used elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ConvergenceError",
    "Tridiagonal",
    "sturm_count",
    "tridiag_eigen",
    "gauss_legendre",
    "second_derivative",
    "richardson",
]


class ConvergenceError(RuntimeError):
    """An iterative routine failed to reach its tolerance."""


@dataclass(frozen=True)
class Tridiagonal:
    """Symmetric tridiagonal matrix stored as two bands."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self) -> None:
        d = np.asarray(self.diag, dtype=float)
        e = np.asarray(self.offdiag, dtype=float)
        if d.ndim != 1 or e.ndim != 1:
            raise ValueError("bands must be 1-d arrays")
        if e.shape[0] != max(d.shape[0] - 1, 0):
            raise ValueError(
                f"offdiag length {e.shape[0]} does not match diag length {d.shape[0]}"
            )
        if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e))):
            raise ValueError("matrix bands must be finite")
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)

    @property
    def n(self) -> int:
        return self.diag.shape[0]


def _bands(t: Tridiagonal) -> tuple[np.ndarray, np.ndarray]:
    return np.ascontiguousarray(t.diag), np.ascontiguousarray(t.offdiag**2)


def sturm_count(t: Tridiagonal, x: float) -> int:
    """Number of eigenvalues of t strictly below the shift x."""
    from . import _kernels

    d, e2 = _bands(t)
    return int(_kernels.sturm_count(d, e2, float(x)))


def tridiag_eigen(t: Tridiagonal, k: int | None = None) -> np.ndarray:
    """Smallest k eigenvalues of a symmetric tridiagonal matrix, ascending.

    Bisection driven by the Sturm sign count, bracketed by the Gershgorin
    bounds.  Each eigenvalue is located to a relative width of 1e-12
    (absolute 1e-12 near zero).

    Parameters
    ----------
    t : Tridiagonal
    k : int, optional
        How many eigenvalues to return; defaults to all of them.

    Raises
    ------
    ConvergenceError
        If a bisection bracket fails to shrink, which in practice only
        happens with non-finite matrix entries.
    """
    from . import _kernels

    n = t.n
    if n == 0:
        return np.empty(0)
    if k is None:
        k = n
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range for matrix of size {n}")
    d, e2 = _bands(t)
    if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e2))):
        raise ConvergenceError("matrix has non-finite entries")
    radius = np.zeros(n)
    e = np.abs(t.offdiag)
    radius[:-1] += e
    radius[1:] += e
    lo = float(np.min(d - radius))
    hi = float(np.max(d + radius))
    # pad so the outermost eigenvalues sit strictly inside the bracket
    span = max(hi - lo, 1.0)
    lo -= 1e-12 * span
    hi += 1e-12 * span
    vals, ok = _kernels.bisect_eigenvalues(d, e2, int(k), lo, hi, 300)
    if not ok:
        raise ConvergenceError(
            f"bisection failed to converge in [{lo:.6g}, {hi:.6g}]"
        )
    return vals


def gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of n-point Gauss-Legendre quadrature on [-1, 1].

    Newton iteration on Legendre polynomials from the Chebyshev initial
    guess; exact for polynomials of degree 2n - 1.
    """
    if n < 1:
        raise ValueError("need at least one node")
    i = np.arange(1, n + 1)
    x = np.cos(np.pi * (i - 0.25) / (n + 0.5))
    for _ in range(100):
        p0 = np.ones_like(x)
        p1 = x.copy()
        for j in range(2, n + 1):
            p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
        dp = n * (x * p1 - p0) / (x**2 - 1.0)
        dx = p1 / dp
        x -= dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    else:
        raise ConvergenceError("Gauss-Legendre Newton iteration stalled")
    # one clean-up pass for the weights with the converged nodes
    p0 = np.ones_like(x)
    p1 = x.copy()
    for j in range(2, n + 1):
        p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
    dp = n * (x * p1 - p0) / (x**2 - 1.0)
    w = 2.0 / ((1.0 - x**2) * dp**2)
    order = np.argsort(x)
    return x[order], w[order]


_STENCIL6 = np.array([2.0, -27.0, 270.0, -490.0, 270.0, -27.0, 2.0]) / 180.0


def second_derivative(f, x: float, h: float) -> float:
    """Sixth-order central difference approximation to f''(x).

    Seven-point stencil with error O(h^6); f must be smooth on
    [x - 3h, x + 3h].
    """
    if h <= 0:
        raise ValueError("step must be positive")
    offsets = np.arange(-3, 4) * h
    vals = np.array([f(x + o) for o in offsets], dtype=float)
    return float(np.dot(_STENCIL6, vals) / h**2)


def richardson(coarse: np.ndarray, fine: np.ndarray, order: int, ratio: float) -> np.ndarray:
    """Eliminate the leading error term from two mesh refinements.

    coarse was computed with step h, fine with step h / ratio, and the
    method converges at the given order; the combination
    (ratio^order * fine - coarse) / (ratio^order - 1) cancels the h^order
    term.
    """
    if ratio <= 1:
        raise ValueError("ratio must exceed 1")
    if order < 1:
        raise ValueError("order must be a positive integer")
    c = np.asarray(coarse, dtype=float)
    f = np.asarray(fine, dtype=float)
    if c.shape != f.shape:
        raise ValueError("coarse and fine results must have matching shapes")
    factor = float(ratio) ** order
    return (factor * f - c) / (factor - 1.0)
