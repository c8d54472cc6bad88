"""Finite trigonometric identities behind the solvable angular models.

Each identity equates a lattice sum (or product) over N rotated copies of
an elementary trig function with a single closed-form expression in N phi.
The closed forms depend on the residue of N mod 4, mirroring the class
structure in model_core.  identity_report provides seeded random
verification sweeps that keep a configurable distance from the poles.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .model_core import SingularityError, classify, lattice_distance
from .numerics import second_derivative

__all__ = [
    "SamplingError",
    "IdentityKind",
    "singular_lattices",
    "identity_eval",
    "sine_product",
    "log_derivative_residual",
    "IdentityReport",
    "identity_report",
]


class SamplingError(RuntimeError):
    """Rejection sampling could not produce enough admissible points."""


class IdentityKind(enum.Enum):
    """Which lattice identity to evaluate."""

    SIN_SUM = "sin_sum"
    COS_SUM = "cos_sum"
    COMBINED_PAIR = "combined_pair"
    FOUR_TERM = "four_term"
    SINE_PRODUCT = "sine_product"


def singular_lattices(kind: IdentityKind, n: int) -> list[tuple[float, float]]:
    """(offset, step) lattices where the identity's terms blow up.

    SINE_PRODUCT has no poles and returns an empty list.  COMBINED_PAIR
    and FOUR_TERM are fixed identities, n is ignored for them.
    """
    classify(n)
    if kind is IdentityKind.SINE_PRODUCT:
        return []
    if kind in (IdentityKind.COMBINED_PAIR, IdentityKind.FOUR_TERM):
        return [(0.0, math.pi / 2)]
    if kind is IdentityKind.SIN_SUM:
        step = math.pi / n if n % 2 == 1 else 2 * math.pi / n
        return [(0.0, step)]
    # COS_SUM
    if n % 2 == 1:
        return [(math.pi / (2 * n), math.pi / n)]
    if n % 4 == 2:
        return [(math.pi / n, 2 * math.pi / n)]
    return [(0.0, 2 * math.pi / n)]


def _guard(kind: IdentityKind, n: int, phi: np.ndarray, min_dist: float = 1e-10) -> None:
    for offset, step in singular_lattices(kind, n):
        d = np.asarray(lattice_distance(phi, offset, step))
        if np.any(d < min_dist):
            bad = float(np.asarray(phi).reshape(-1)[int(np.argmin(d))])
            nearest = offset + round((bad - offset) / step) * step
            raise SingularityError(
                f"point {bad!r} is within {min_dist} of singularity {nearest!r}",
                nearest=nearest,
            )


def sine_product(n: int, phi: np.ndarray | float) -> tuple[np.ndarray, np.ndarray]:
    """(direct, closed) values of prod_k sin(phi - 2 pi k / n).

    The closed form is 2^(1-n) times sin(n phi) for odd n and
    (1 - cos(n phi)) for even n, with a parity-dependent sign.
    """
    classify(n)
    scalar = np.ndim(phi) == 0
    phi = np.atleast_1d(np.asarray(phi, dtype=float))
    k = np.arange(n)
    direct = np.prod(np.sin(phi[..., None] - 2 * np.pi * k / n), axis=-1)
    if n % 2 == 1:
        sign = float((-1.0) ** ((1 - n) // 2))
        closed = sign * 2.0 ** (1 - n) * np.sin(n * phi)
    else:
        sign = float((-1.0) ** (n // 2))
        closed = sign * 2.0 ** (1 - n) * (1.0 - np.cos(n * phi))
    if scalar:
        return float(direct[0]), float(closed[0])
    return direct, closed


def identity_eval(
    kind: IdentityKind, n: int, phi: np.ndarray | float
) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate one identity, returning (lattice side, closed-form side).

    phi may be a scalar or an array.  Points closer than 1e-10 to a pole
    of the requested kind raise SingularityError; SINE_PRODUCT accepts
    every real phi.
    """
    classify(n)
    scalar = np.ndim(phi) == 0
    phi_arr = np.atleast_1d(np.asarray(phi, dtype=float))
    if kind is not IdentityKind.SINE_PRODUCT:
        _guard(kind, n, phi_arr)

    if kind is IdentityKind.SINE_PRODUCT:
        lhs, rhs = sine_product(n, phi_arr)
    elif kind is IdentityKind.COMBINED_PAIR:
        lhs = 1.0 / np.sin(phi_arr) ** 2 + 1.0 / np.cos(phi_arr) ** 2
        rhs = 4.0 / np.sin(2 * phi_arr) ** 2
    elif kind is IdentityKind.FOUR_TERM:
        j = np.arange(4)
        lhs = np.sum(1.0 / np.sin(phi_arr[..., None] + j * np.pi / 2) ** 2, axis=-1)
        rhs = 8.0 / np.sin(2 * phi_arr) ** 2
    elif kind is IdentityKind.SIN_SUM:
        k = np.arange(n)
        lhs = np.sum(1.0 / np.sin(phi_arr[..., None] - 2 * np.pi * k / n) ** 2, axis=-1)
        if n % 2 == 1:
            rhs = n**2 / np.sin(n * phi_arr) ** 2
        else:
            rhs = n**2 / (2 * np.sin(n * phi_arr / 2) ** 2)
    elif kind is IdentityKind.COS_SUM:
        k = np.arange(n)
        lhs = np.sum(1.0 / np.cos(phi_arr[..., None] - 2 * np.pi * k / n) ** 2, axis=-1)
        if n % 2 == 1:
            rhs = n**2 / np.cos(n * phi_arr) ** 2
        elif n % 4 == 2:
            rhs = n**2 / (2 * np.cos(n * phi_arr / 2) ** 2)
        else:
            rhs = n**2 / (2 * np.sin(n * phi_arr / 2) ** 2)
    else:  # pragma: no cover
        raise ValueError(f"unknown identity kind {kind!r}")

    if scalar:
        return float(lhs[0]), float(rhs[0])
    return lhs, rhs


def log_derivative_residual(n: int, phi: float, h: float = 1e-4) -> float:
    """Residual of the derivation linking the product and sum identities.

    Minus the second log-derivative of |prod_k sin(phi - 2 pi k / n)|
    equals the SIN_SUM lattice sum; this evaluates both sides with a
    sixth-order stencil and returns the relative mismatch.  The stencil
    needs the whole window [phi - 3h, phi + 3h] to stay clear of the
    product's zeros.
    """
    classify(n)
    step = math.pi / n if n % 2 == 1 else 2 * math.pi / n
    d = lattice_distance(phi, 0.0, step)
    if d < 3 * h + 1e-10:
        raise SingularityError(
            f"stencil window around {phi!r} touches a zero of the product"
        )

    def log_abs_product(x: float) -> float:
        direct, _ = sine_product(n, x)
        return math.log(abs(direct))

    stencil_side = -second_derivative(log_abs_product, phi, h)
    lattice_sum, _ = identity_eval(IdentityKind.SIN_SUM, n, phi)
    return abs(stencil_side - lattice_sum) / max(abs(lattice_sum), 1.0)


@dataclass(frozen=True)
class IdentityReport:
    """Summary of a random verification sweep for one kind and order.

    min_singularity_distance is the smallest pole distance among the
    accepted sample points (inf for the pole-free product identity).
    """

    kind: IdentityKind
    n_order: int
    samples: int
    min_singularity_distance: float
    max_relative_residual: float
    worst_point: float


def _sample_points(
    rng: np.random.Generator,
    lattices: list[tuple[float, float]],
    samples: int,
    min_dist: float,
) -> np.ndarray:
    if not lattices or min_dist == 0.0:
        return rng.uniform(0.0, 2 * math.pi, samples)
    step_min = min(step for _, step in lattices)
    if 2 * min_dist >= 0.999 * step_min:
        raise SamplingError(
            f"exclusion radius {min_dist} leaves no admissible points "
            f"(lattice step {step_min:.6g})"
        )
    accepted: list[np.ndarray] = []
    total = 0
    for _ in range(1000):
        draw = rng.uniform(0.0, 2 * math.pi, samples)
        keep = np.ones(samples, dtype=bool)
        for offset, step in lattices:
            keep &= np.asarray(lattice_distance(draw, offset, step)) >= min_dist
        got = draw[keep]
        if got.size:
            accepted.append(got)
            total += got.size
        if total >= samples:
            break
    else:
        raise SamplingError(
            f"could not collect {samples} admissible points in 1000 rounds"
        )
    return np.concatenate(accepted)[:samples]


def identity_report(
    kind: IdentityKind,
    n_max: int = 16,
    samples_per_n: int = 256,
    min_dist: float = 1e-3,
    seed: int = 0,
) -> list[IdentityReport]:
    """Random verification sweep: one report per order 1 .. n_max.

    Sampling is uniform on [0, 2 pi) with rejection of points closer than
    min_dist to any pole of the kind (min_dist 0 disables the exclusion,
    which only makes sense for the pole-free product identity); the stream
    for order n is seeded with seed + n so individual reports are
    reproducible in isolation.  Residuals are |lhs - rhs| / max(|rhs|, 1).
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if samples_per_n < 1:
        raise ValueError("samples_per_n must be >= 1")
    if min_dist < 0:
        raise ValueError("min_dist must be nonnegative")
    out: list[IdentityReport] = []
    for n in range(1, n_max + 1):
        rng = np.random.default_rng(seed + n)
        lattices = singular_lattices(kind, n)
        pts = _sample_points(rng, lattices, samples_per_n, min_dist)
        lhs, rhs = identity_eval(kind, n, pts)
        res = np.abs(lhs - rhs) / np.maximum(np.abs(rhs), 1.0)
        worst = int(np.argmax(res))
        if lattices:
            dmin = float(
                min(
                    np.min(np.asarray(lattice_distance(pts, off, st)))
                    for off, st in lattices
                )
            )
        else:
            dmin = math.inf
        out.append(
            IdentityReport(
                kind=kind,
                n_order=n,
                samples=samples_per_n,
                min_singularity_distance=dmin,
                max_relative_residual=float(res[worst]),
                worst_point=float(pts[worst]),
            )
        )
    return out
