"""scikit-learn style front end.

``fit`` locates the Euclidean angle and caches the geometric component;
``transform`` maps cone angles to the (continuous) Schläfli integrand and
``predict`` maps orbifold orders ``k`` to Chern-Simons invariants.
"""

from __future__ import annotations

import math

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_angles, check_intervals, check_knot_params, check_orders
from .cs import (
    KNOT_INTERVALS,
    ORBIFOLD_INTERVALS,
    OrbifoldSpec,
    cover_from_orbifold,
    cs_knot,
    cs_orbifold,
    lens_cs,
)
from .schlafli import continuous_integrands
from .tracker import DEFAULT_STEPS, DEFAULT_TOL, geometric_component


class JKnotChernSimons(TransformerMixin, BaseEstimator):
    """Chern-Simons invariants along the cone-manifold family of J(2n, -2m).

    Parameters
    ----------
    n, m : int
        Knot indices (``2n`` vertical and ``2m`` horizontal crossings).
    hyp_intervals, sph_intervals : int
        Simpson intervals on ``[2pi/k, alpha0]`` and ``[alpha0, pi]``.
    steps : int
        Continuation steps used for the cached branches.
    tol : float
        Bracket width at which the bisection for ``alpha0`` stops.

    Attributes
    ----------
    params_ : KnotParams
    component_ : GeometricComponent
    alpha0_ : float
    lens_cs_ : float
    """

    def __init__(
        self,
        n=2,
        m=1,
        hyp_intervals=ORBIFOLD_INTERVALS,
        sph_intervals=ORBIFOLD_INTERVALS,
        steps=DEFAULT_STEPS,
        tol=DEFAULT_TOL,
    ):
        self.n = n
        self.m = m
        self.hyp_intervals = hyp_intervals
        self.sph_intervals = sph_intervals
        self.steps = steps
        self.tol = tol

    def fit(self, X=None, y=None):
        self.params_ = check_knot_params(self.n, self.m)
        check_intervals(self.hyp_intervals, "hyp_intervals")
        check_intervals(self.sph_intervals, "sph_intervals")
        self.component_ = geometric_component(self.params_, int(self.steps), float(self.tol))
        self.alpha0_ = self.component_.alpha0.alpha0
        self.lens_cs_ = lens_cs(self.params_).value
        return self

    def transform(self, X):
        """Continuous integrand at each cone angle, as a column vector."""
        check_is_fitted(self, "component_")
        alphas = check_angles(X)
        hyp = alphas < self.alpha0_
        out = np.empty(len(alphas))
        hyp_vals, sph_vals = continuous_integrands(self.component_, alphas[hyp], alphas[~hyp])
        out[hyp] = hyp_vals
        out[~hyp] = sph_vals
        return out.reshape(-1, 1)

    def _spec(self, k):
        return OrbifoldSpec(self.params_, int(k))

    def predict(self, X):
        """cs of the orbifolds ``X(2pi/k)`` for each order ``k`` in ``X``."""
        check_is_fitted(self, "component_")
        return np.array([self._orbifold(k).value for k in check_orders(X)])

    def predict_cover(self, X):
        """cs of the k-fold cyclic coverings for each ``k`` in ``X``."""
        check_is_fitted(self, "component_")
        return np.array([cover_from_orbifold(self._spec(k), self._orbifold(k)).value for k in check_orders(X)])

    def _orbifold(self, k):
        return cs_orbifold(self._spec(k), self.hyp_intervals, self.sph_intervals, int(self.steps), float(self.tol))

    def knot_cs(self, intervals=KNOT_INTERVALS) -> float:
        """cs of the complete structure (cone angle 0), modulo 1/2."""
        check_is_fitted(self, "component_")
        return cs_knot(self.params_, intervals, intervals, int(self.steps), float(self.tol)).value

    def hyperbolic_orders(self, k_max=10):
        """Orders ``3 <= k <= k_max`` whose orbifold is hyperbolic (``2pi/k < alpha0``)."""
        check_is_fitted(self, "component_")
        return [k for k in range(3, k_max + 1) if 2 * math.pi / k < self.alpha0_]
