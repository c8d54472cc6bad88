"""Classical orthogonal polynomials used by the closed-form eigenfunctions.

Only the two families the spectra need: Jacobi P_n^(alpha, beta) and
Gegenbauer C_n^lambda, both via their standard three-term recurrences,
vectorized over the argument.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model_core import ParameterError

__all__ = ["JacobiParams", "jacobi_p", "jacobi_p_derivative", "gegenbauer_c"]


@dataclass(frozen=True)
class JacobiParams:
    """Validated (degree, alpha, beta) triple for the Jacobi family.

    Convenience grouping; the evaluation functions take flat arguments.
    """

    n: int
    alpha: float
    beta: float

    def __post_init__(self) -> None:
        _check_degree(self.n)
        for name, v in (("alpha", self.alpha), ("beta", self.beta)):
            if not (math.isfinite(v) and v > -1.0):
                raise ParameterError(f"{name} must be finite and > -1, got {v}")


def _check_degree(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise ParameterError(f"degree must be an integer, got {n!r}")
    if n < 0:
        raise ParameterError(f"degree must be >= 0, got {n}")
    return int(n)


def jacobi_p(n: int, alpha: float, beta: float, x: np.ndarray | float) -> np.ndarray | float:
    """Jacobi polynomial P_n^(alpha, beta)(x) for alpha, beta > -1.

    Ascending three-term recurrence; returns a scalar for scalar x.
    """
    n = _check_degree(n)
    if not (math.isfinite(alpha) and alpha > -1.0):
        raise ParameterError(f"alpha must be finite and > -1, got {alpha}")
    if not (math.isfinite(beta) and beta > -1.0):
        raise ParameterError(f"beta must be finite and > -1, got {beta}")
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=float))
    p_prev = np.ones_like(x)
    if n == 0:
        return float(p_prev[0]) if scalar else p_prev
    p_cur = 0.5 * (alpha - beta) + 0.5 * (alpha + beta + 2.0) * x
    for m in range(2, n + 1):
        a1 = 2.0 * m * (m + alpha + beta) * (2.0 * m + alpha + beta - 2.0)
        a2 = (2.0 * m + alpha + beta - 1.0) * (alpha**2 - beta**2)
        a3 = (
            (2.0 * m + alpha + beta - 2.0)
            * (2.0 * m + alpha + beta - 1.0)
            * (2.0 * m + alpha + beta)
        )
        a4 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * (2.0 * m + alpha + beta)
        p_prev, p_cur = p_cur, ((a2 + a3 * x) * p_cur - a4 * p_prev) / a1
    return float(p_cur[0]) if scalar else p_cur


def jacobi_p_derivative(
    n: int, alpha: float, beta: float, x: np.ndarray | float
) -> np.ndarray | float:
    """d/dx of P_n^(alpha, beta)(x).

    Uses the exact shift d P_n / dx = ((n + alpha + beta + 1) / 2)
    P_{n-1}^(alpha+1, beta+1).
    """
    n = _check_degree(n)
    if n == 0:
        scalar = np.ndim(x) == 0
        z = np.zeros_like(np.atleast_1d(np.asarray(x, dtype=float)))
        return 0.0 if scalar else z
    factor = 0.5 * (n + alpha + beta + 1.0)
    inner = jacobi_p(n - 1, alpha + 1.0, beta + 1.0, x)
    return factor * inner


def gegenbauer_c(n: int, lam: float, x: np.ndarray | float) -> np.ndarray | float:
    """Gegenbauer polynomial C_n^lambda(x) for lambda > -1/2, lambda != 0.

    Recurrence n C_n = 2 (n + lambda - 1) x C_{n-1} - (n + 2 lambda - 2)
    C_{n-2}; the lambda = 0 family degenerates and is rejected, and
    lambda <= -1/2 breaks the orthogonality weight.
    """
    n = _check_degree(n)
    if not math.isfinite(lam) or lam == 0.0 or lam <= -0.5:
        raise ParameterError(
            f"lambda must be finite, > -1/2 and nonzero, got {lam}"
        )
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=float))
    c_prev = np.ones_like(x)
    if n == 0:
        return float(c_prev[0]) if scalar else c_prev
    c_cur = 2.0 * lam * x
    for m in range(2, n + 1):
        c_prev, c_cur = c_cur, (
            2.0 * (m + lam - 1.0) * x * c_cur - (m + 2.0 * lam - 2.0) * c_prev
        ) / m
    return float(c_cur[0]) if scalar else c_cur
