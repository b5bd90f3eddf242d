"""Longitude eigenvalue, Schläfli integrands and composite Simpson quadrature.

On the hyperbolic side the integrand is ``Im(2 log L(x))`` at the geometric
root; on the spherical side it is ``Im(log L(x1)) + Im(log L(x2))`` over the
two real branches.  Pointwise values use the principal logarithm.  For
integration the integrand is made continuous on ``[lower, pi]`` by adding
multiples of ``2 pi`` (see :func:`schlafli_integrals`): a uniform shift only
moves the final invariant by a multiple of its modulus, a jump does not.
"""

from __future__ import annotations

import math

import numpy as np

from .algebra import longitude_terms
from .exceptions import DomainError, NumericalError
from .rmpoly import KnotParams, meridian
from .tracker import ALPHA_FLOOR, GeometricComponent, geometric_component

TWO_PI = 2 * math.pi


def longitude_L(n: int, x, M):
    """Eigenvalue-entry ``L`` of the longitude at trace coordinate ``x``.

    ``L = -(M^2 A - B) / (A - M^2 B)`` with ``A = S_n - S_{n-1}`` and
    ``B = S_{n-1} - S_{n-2}`` evaluated at ``v = x + M^2 + M^-2``.
    """
    v = x + M**2 + M**-2
    a, b = longitude_terms(n, v)
    den = a - M**2 * b
    if np.any(np.abs(den) <= 1e-14 * (np.abs(a) + np.abs(M**2 * b))):
        raise DomainError("longitude denominator vanishes (degenerate configuration)")
    return -(M**2 * a - b) / den


def _component(params, component):
    return component if component is not None else geometric_component(params)


def _hyp_principal(params, alphas, xs):
    return 2 * np.angle(longitude_L(params.n, xs, meridian(alphas)))


def _sph_principal(params, alphas, x1, x2):
    M = meridian(alphas)
    return np.angle(longitude_L(params.n, x1, M)) + np.angle(longitude_L(params.n, x2, M))


def integrand_hyp(params: KnotParams, alpha, component: GeometricComponent | None = None):
    """``Im(2 log L)`` at the geometric root, principal branch; ``0 < alpha < alpha0``."""
    comp = _component(params, component)
    a = np.atleast_1d(np.asarray(alpha, dtype=float))
    a0 = comp.alpha0.alpha0
    if np.any(a <= 0) or np.any(a >= a0):
        raise DomainError(f"alpha must lie in the hyperbolic range (0, {a0})")
    floor = comp.hyperbolic.alpha_range[0]
    xs = np.array([comp.hyperbolic_root(t) for t in a]) if np.any(a < floor) else comp.hyperbolic_roots(a)
    out = _hyp_principal(params, a, xs)
    return out if np.ndim(alpha) else float(out[0])


def integrand_sph(params: KnotParams, alpha, component: GeometricComponent | None = None):
    """``Im log L(x1) + Im log L(x2)`` on the real branches; ``alpha0 < alpha <= pi``."""
    comp = _component(params, component)
    a = np.atleast_1d(np.asarray(alpha, dtype=float))
    a0 = comp.alpha0.alpha0
    if np.any(a <= a0) or np.any(a > math.pi):
        raise DomainError(f"alpha must lie in the spherical range ({a0}, pi]")
    x1, x2 = comp.spherical_roots(a)
    out = _sph_principal(params, a, x1, x2)
    return out if np.ndim(alpha) else float(out[0])


def simpson_sum(values, a: float, b: float) -> float:
    """Composite Simpson rule on equally spaced samples (odd count >= 3)."""
    y = np.asarray(values, dtype=float)
    intervals = len(y) - 1
    if intervals < 2 or intervals % 2:
        raise DomainError("Simpson's rule needs an even number (>= 2) of intervals")
    if not np.all(np.isfinite(y)):
        raise NumericalError("integrand is not finite at every node")
    h = (b - a) / intervals
    return float(h / 3 * (y[0] + y[-1] + 4 * y[1:-1:2].sum() + 2 * y[2:-1:2].sum()))


def simpson(f, a: float, b: float, intervals: int) -> float:
    """Composite Simpson approximation of the integral of ``f`` over ``[a, b]``.

    >>> round(simpson(lambda t: t**2, 0.0, 1.0, 10), 15)
    0.333333333333333
    """
    if intervals < 2 or intervals % 2:
        raise DomainError("Simpson's rule needs an even number (>= 2) of intervals")
    nodes = np.linspace(a, b, intervals + 1)
    return simpson_sum([f(t) for t in nodes], a, b)


def _shift_to_reference(values, ref):
    return values + TWO_PI * np.round((ref - values) / TWO_PI)


def _reference(path, alpha0, principal, anchor):
    """Continuous (unwrapped) integrand along a cached path, shifted to ``anchor`` at its start."""
    cont = np.unwrap(principal)
    cont = cont + TWO_PI * np.round((anchor - cont[0]) / TWO_PI)
    t = np.sqrt(np.abs(path.alphas - alpha0))
    order = np.argsort(t)
    return lambda a: np.interp(np.sqrt(np.abs(a - alpha0)), t[order], cont[order])


def continuous_integrands(comp: GeometricComponent, hyp_nodes, sph_nodes):
    """Integrand values at the given nodes, made continuous across ``[lower, pi]``.

    The spherical integrand is anchored at ``0`` at ``alpha = pi``; the
    hyperbolic one joins it at ``alpha0``.  Hyperbolic nodes below the cached
    floor are evaluated at the floor (the integrand's limit as ``alpha -> 0``).
    """
    params = comp.params
    a0 = comp.alpha0.alpha0
    p1, p2 = comp.spherical

    # spherical reference along the cached samples, from pi down to alpha0
    x2_on_p1 = p2.roots_at(p1.alphas)
    sph_ref_vals = _sph_principal(params, p1.alphas, p1.xs, x2_on_p1)
    sph_ref = _reference(p1, a0, sph_ref_vals, 0.0)
    beta_at_fold = float(sph_ref(a0))

    hp = comp.hyperbolic
    hyp_ref_vals = _hyp_principal(params, hp.alphas, hp.xs)
    hyp_ref = _reference(hp, a0, hyp_ref_vals, beta_at_fold)

    sph_nodes = np.asarray(sph_nodes, dtype=float)
    x1, x2 = comp.spherical_roots(sph_nodes)
    sph_vals = _shift_to_reference(_sph_principal(params, sph_nodes, x1, x2), sph_ref(sph_nodes))

    hyp_nodes = np.maximum(np.asarray(hyp_nodes, dtype=float), max(ALPHA_FLOOR, hp.alpha_range[0]))
    xh = comp.hyperbolic_roots(hyp_nodes)
    hyp_vals = _shift_to_reference(_hyp_principal(params, hyp_nodes, xh), hyp_ref(hyp_nodes))
    return hyp_vals, sph_vals


def schlafli_integrals(comp: GeometricComponent, lower: float, hyp_intervals: int, sph_intervals: int):
    """Simpson integrals of the continuous integrand over ``[lower, alpha0]`` and ``[alpha0, pi]``."""
    a0 = comp.alpha0.alpha0
    if not 0 <= lower < a0:
        raise DomainError(f"lower limit {lower} is not below alpha0 = {a0}")
    hyp_nodes = np.linspace(lower, a0, hyp_intervals + 1)
    sph_nodes = np.linspace(a0, math.pi, sph_intervals + 1)
    hyp_vals, sph_vals = continuous_integrands(comp, hyp_nodes, sph_nodes)
    return simpson_sum(hyp_vals, lower, a0), simpson_sum(sph_vals, a0, math.pi)
