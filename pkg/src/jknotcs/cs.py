"""Chern-Simons invariants of J(2n, -2m) cone-manifolds, orbifolds and coverings."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import DomainError
from .rmpoly import KnotParams
from .schlafli import schlafli_integrals
from .tracker import DEFAULT_STEPS, DEFAULT_TOL, geometric_component

KNOT_INTERVALS = 20_000
ORBIFOLD_INTERVALS = 200
# alpha0 is only known to about its bracket width; a cone angle this close to
# it is treated as Euclidean rather than hyperbolic
HYPERBOLIC_MARGIN = 1e-9


def mod_reduce(value: float, modulus: float) -> float:
    """Representative of ``value`` in ``[0, modulus)``."""
    if modulus <= 0:
        raise DomainError("modulus must be positive")
    r = value - modulus * math.floor(value / modulus)
    # floor can leave r == modulus after rounding
    if r >= modulus:
        r -= modulus
    return max(r, 0.0)


@dataclass(frozen=True)
class ModValue:
    value: float
    modulus: float

    def __post_init__(self):
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"value {self.value} not reduced modulo {self.modulus}")

    @classmethod
    def reduce(cls, value: float, modulus) -> ModValue:
        modulus = float(modulus)
        return cls(mod_reduce(value, modulus), modulus)

    def distance(self, other: float) -> float:
        """Distance to ``other`` on the circle of circumference ``modulus``."""
        d = mod_reduce(self.value - other, self.modulus)
        return min(d, self.modulus - d)


@dataclass(frozen=True)
class OrbifoldSpec:
    """The orbifold with cone angle ``2 pi / k`` along the knot."""

    params: KnotParams
    k: int

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 3:
            raise DomainError(f"k must be an integer >= 3, got {self.k!r}")

    @property
    def cone_angle(self) -> float:
        return 2 * math.pi / self.k

    @property
    def modulus(self) -> Fraction:
        return Fraction(1, self.k) if self.k % 2 == 0 else Fraction(1, 2 * self.k)

    @property
    def cover_modulus(self) -> Fraction:
        return Fraction(1) if self.k % 2 == 0 else Fraction(1, 2)


def lens_cs_exact(params: KnotParams) -> Fraction:
    """``(m - n) / (4nm + 1)`` reduced into ``[0, 1)``."""
    n, m = params.n, params.m
    return Fraction(m - n, 4 * n * m + 1) % 1


def lens_cs(params: KnotParams) -> ModValue:
    """Chern-Simons invariant of the lens space reached at ``alpha = pi``."""
    return ModValue(float(lens_cs_exact(params)), 1.0)


def _assemble(params, lower, modulus, hyp_intervals, sph_intervals, steps, tol, label=None):
    comp = geometric_component(params, steps, tol)
    a0 = comp.alpha0.alpha0
    if lower >= a0 - HYPERBOLIC_MARGIN:
        what = label or f"{lower:.15g}"
        raise DomainError(f"cone angle {what} is not below alpha0 = {a0:.15g}; the cone-manifold is not hyperbolic")
    i_hyp, i_sph = schlafli_integrals(comp, lower, hyp_intervals, sph_intervals)
    half_lens = (lens_cs_exact(params) / 2) % modulus
    return ModValue.reduce(float(half_lens) + (i_hyp + i_sph) / (4 * math.pi**2), modulus)


def cs_orbifold(
    spec: OrbifoldSpec,
    hyp_intervals: int = ORBIFOLD_INTERVALS,
    sph_intervals: int = ORBIFOLD_INTERVALS,
    steps: int = DEFAULT_STEPS,
    tol: float = DEFAULT_TOL,
) -> ModValue:
    """cs of the orbifold ``X(2 pi / k)``, modulo ``1/k`` (k even) or ``1/2k`` (k odd)."""
    label = f"2pi/{spec.k} = {spec.cone_angle:.15g}"
    return _assemble(spec.params, spec.cone_angle, spec.modulus, hyp_intervals, sph_intervals, steps, tol, label)


def cs_knot(
    params: KnotParams,
    hyp_intervals: int = KNOT_INTERVALS,
    sph_intervals: int = KNOT_INTERVALS,
    steps: int = DEFAULT_STEPS,
    tol: float = DEFAULT_TOL,
) -> ModValue:
    """cs of the complete hyperbolic knot complement, modulo 1/2."""
    return _assemble(params, 0.0, Fraction(1, 2), hyp_intervals, sph_intervals, steps, tol)


def cover_from_orbifold(spec: OrbifoldSpec, orbifold: ModValue) -> ModValue:
    return ModValue.reduce(spec.k * orbifold.value, spec.cover_modulus)


def cs_cover(
    spec: OrbifoldSpec,
    hyp_intervals: int = ORBIFOLD_INTERVALS,
    sph_intervals: int = ORBIFOLD_INTERVALS,
    steps: int = DEFAULT_STEPS,
    tol: float = DEFAULT_TOL,
) -> ModValue:
    """cs of the k-fold cyclic covering: ``k * cs(orbifold)`` modulo 1 (k even) or 1/2 (k odd)."""
    return cover_from_orbifold(spec, cs_orbifold(spec, hyp_intervals, sph_intervals, steps, tol))
