"""Core model definitions shared by every other module.

The family of models is indexed by an integer order N and two coupling
exponents g1, g2 >= 1.  The angular potential on the plane is a sum of
inverse-square wells centered on two interleaved direction lattices:

    V(phi) = sum_k G2 / cos^2(phi - 2 pi k / N)
           + sum_k G1 / sin^2(phi - 2 pi k / N),      k = 0 .. N-1,

with coupling strengths G_i = g_i (g_i - 1), so g_i = 1 switches a family
off.  Residues of N mod 4 select structurally different reductions of the
lattice sums, which is captured by NClass and DomainCell here and used by
the spectral modules.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

__all__ = [
    "ParameterError",
    "SingularityError",
    "FormMismatchError",
    "NClass",
    "classify",
    "Couplings",
    "ModelParams",
    "DomainCell",
    "domain_cell",
    "singularities",
    "lattice_distance",
    "PotentialSample",
    "DiscrepancyRow",
    "DiscrepancyReport",
]


class ParameterError(ValueError):
    """Model parameters outside the validated domain."""


class SingularityError(ValueError):
    """An evaluation point is too close to a potential singularity."""

    def __init__(self, message: str, nearest: float | None = None):
        super().__init__(message)
        self.nearest = nearest


class FormMismatchError(ValueError):
    """A special-case potential form was requested with incompatible parameters."""


class NClass(enum.Enum):
    """Residue class of the order N that controls the reduction structure."""

    ODD = "odd"
    TWO_MOD_4 = "two_mod_4"
    ZERO_MOD_4 = "zero_mod_4"


def classify(n: int) -> NClass:
    """Classify an integer order by its residue mod 4."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise ParameterError(f"order must be an integer, got {n!r}")
    if n < 1:
        raise ParameterError(f"order must be >= 1, got {n}")
    if n % 2 == 1:
        return NClass.ODD
    if n % 4 == 2:
        return NClass.TWO_MOD_4
    return NClass.ZERO_MOD_4


@dataclass(frozen=True)
class Couplings:
    """Coupling exponents of the two well families.

    g = 1 makes the corresponding strength G = g (g - 1) vanish, removing
    that family from the potential while staying inside the valid domain.
    """

    g1: float
    g2: float

    def __post_init__(self) -> None:
        for name, g in (("g1", self.g1), ("g2", self.g2)):
            if not isinstance(g, (int, float, np.floating, np.integer)) or isinstance(g, bool):
                raise ParameterError(f"{name} must be a real number, got {g!r}")
            if not math.isfinite(g) or g < 1.0:
                raise ParameterError(f"{name} must be finite and >= 1, got {g}")
        object.__setattr__(self, "g1", float(self.g1))
        object.__setattr__(self, "g2", float(self.g2))

    @property
    def G1(self) -> float:
        """Strength g1 (g1 - 1) of the sine-lattice wells."""
        return self.g1 * (self.g1 - 1.0)

    @property
    def G2(self) -> float:
        """Strength g2 (g2 - 1) of the cosine-lattice wells."""
        return self.g2 * (self.g2 - 1.0)


@dataclass(frozen=True)
class ModelParams:
    """Full parameter set: order, couplings, oscillator frequency."""

    n_order: int
    couplings: Couplings
    omega: float = 1.0

    def __post_init__(self) -> None:
        classify(self.n_order)
        if not isinstance(self.couplings, Couplings):
            raise ParameterError("couplings must be a Couplings instance")
        w = self.omega
        if isinstance(w, bool) or not isinstance(w, (int, float, np.floating, np.integer)):
            raise ParameterError(f"omega must be a real number, got {w!r}")
        if not math.isfinite(w) or w <= 0.0:
            raise ParameterError(f"omega must be finite and positive, got {w}")
        object.__setattr__(self, "n_order", int(self.n_order))
        object.__setattr__(self, "omega", float(w))

    @property
    def n_class(self) -> NClass:
        return classify(self.n_order)

    @property
    def g1(self) -> float:
        return self.couplings.g1

    @property
    def g2(self) -> float:
        return self.couplings.g2

    @property
    def G1(self) -> float:
        return self.couplings.G1

    @property
    def G2(self) -> float:
        return self.couplings.G2


@dataclass(frozen=True)
class DomainCell:
    """Fundamental angular cell (phi_lo, phi_hi) with its rescaling data.

    theta = scale * phi maps the cell onto (0, theta_hi); all closed-form
    eigenfunctions live on that rescaled interval.
    """

    phi_lo: float
    phi_hi: float
    scale: float
    theta_hi: float
    n_class: NClass

    @property
    def length(self) -> float:
        return self.phi_hi - self.phi_lo


def domain_cell(params: ModelParams) -> DomainCell:
    """Fundamental cell between adjacent singular rays, by residue class.

    Odd N: cell (0, pi / (2N)), bounded by a sine ray at 0 and a cosine
    ray at pi / (2N); the rescaling theta = N phi uses the full right
    angle.  N = 2 mod 4: cell (0, pi / N) with sigma = N / 2.  N = 0 mod 4
    the two lattices coincide, the cell (0, 2 pi / N) spans sigma phi in
    (0, pi) with a sine-type edge at both ends.
    """
    n = params.n_order
    cls = params.n_class
    if cls is NClass.ODD:
        return DomainCell(0.0, math.pi / (2 * n), float(n), math.pi / 2, cls)
    if cls is NClass.TWO_MOD_4:
        return DomainCell(0.0, math.pi / n, n / 2.0, math.pi / 2, cls)
    return DomainCell(0.0, 2 * math.pi / n, n / 2.0, math.pi, cls)


def _lattices(n: int) -> list[tuple[float, float]]:
    """(offset, step) pairs describing where the potential blows up.

    First entry is the sine family, second the cosine family.  For
    N = 0 mod 4 the cosine rays land exactly on the sine rays.
    """
    if n % 2 == 1:
        step = math.pi / n
        return [(0.0, step), (math.pi / (2 * n), step)]
    step = 2 * math.pi / n
    if n % 4 == 2:
        return [(0.0, step), (math.pi / n, step)]
    return [(0.0, step), (0.0, step)]


def singularities(params: ModelParams) -> np.ndarray:
    """All singular angles of the potential in [0, 2 pi), sorted, deduplicated.

    Every direction where some sine or cosine well denominator vanishes;
    coincident rays from the two families are merged (tolerance 1e-12).
    A family whose coupling strength is zero (g = 1) contributes nothing.
    """
    pts: list[float] = []
    sine, cosine = _lattices(params.n_order)
    active = []
    if params.G1 > 0:
        active.append(sine)
    if params.G2 > 0:
        active.append(cosine)
    for offset, step in active:
        count = int(round(2 * math.pi / step))
        for j in range(count):
            pts.append((offset + j * step) % (2 * math.pi))
    pts.sort()
    out: list[float] = []
    for p in pts:
        if not out or p - out[-1] > 1e-12:
            out.append(p)
    # wrap-around duplicate: a point just below 2 pi matching 0
    if len(out) > 1 and (2 * math.pi - out[-1]) + out[0] <= 1e-12:
        out.pop()
    return np.array(out)


def lattice_distance(phi: np.ndarray | float, offset: float, step: float) -> np.ndarray | float:
    """Distance from phi to the nearest point of {offset + j * step}."""
    phi = np.asarray(phi, dtype=float)
    d = np.abs(((phi - offset + step / 2) % step) - step / 2)
    return d if d.ndim else float(d)


@dataclass(frozen=True)
class PotentialSample:
    """One evaluated potential value with the point it came from."""

    point: tuple[float, ...]
    value: float


@dataclass(frozen=True)
class DiscrepancyRow:
    """One compared quantity inside a DiscrepancyReport."""

    label: str
    reference: float
    candidate: float
    rel_deviation: float


@dataclass(frozen=True)
class DiscrepancyReport:
    """Outcome of comparing a closed form against an independent evaluation.

    winner is set when the comparison adjudicates between competing
    candidate formulas, otherwise None.  skipped_levels records reference
    eigenvalues that the closed-form ladder intentionally does not produce.
    """

    subject: str
    params: dict[str, Any]
    rows: tuple[DiscrepancyRow, ...]
    max_rel_deviation: float
    fitted_factor: float | None = None
    skipped_levels: tuple[float, ...] = ()
    winner: str | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)
