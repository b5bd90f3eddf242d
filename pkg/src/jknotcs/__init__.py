"""Chern-Simons invariants of J(2n, -2m) two-bridge knot cone-manifolds.

The geometric component of the Riley-Mednykh zero set is tracked from the
lens-space end (``alpha = pi``) through the Euclidean angle ``alpha0`` down to
the complete structure; the Schläfli integrand built from the longitude
eigenvalue is then integrated with Simpson's rule.
"""

__version__ = "0.1.0"

from .algebra import SL2Matrix, build_holonomy, cheb, mat_pow
from .cs import ModValue, OrbifoldSpec, cs_cover, cs_knot, cs_orbifold, lens_cs, lens_cs_exact
from .estimator import JKnotChernSimons
from .exceptions import DomainError, JKnotError, NumericalError
from .rmpoly import KnotParams, TracePoint, rep_residual, rm_coeffs, rm_dx, rm_eval
from .schlafli import integrand_hyp, integrand_sph, longitude_L, simpson
from .tracker import (
    Alpha0Result,
    BranchPath,
    GeometricComponent,
    all_roots,
    find_alpha0,
    geometric_component,
    geometric_root,
    spherical_seeds,
    track_branch,
)

__all__ = [
    "Alpha0Result",
    "BranchPath",
    "DomainError",
    "GeometricComponent",
    "JKnotChernSimons",
    "JKnotError",
    "KnotParams",
    "ModValue",
    "NumericalError",
    "OrbifoldSpec",
    "SL2Matrix",
    "TracePoint",
    "all_roots",
    "build_holonomy",
    "cheb",
    "cs_cover",
    "cs_knot",
    "cs_orbifold",
    "find_alpha0",
    "geometric_component",
    "geometric_root",
    "integrand_hyp",
    "integrand_sph",
    "lens_cs",
    "lens_cs_exact",
    "longitude_L",
    "mat_pow",
    "rep_residual",
    "rm_coeffs",
    "rm_dx",
    "rm_eval",
    "simpson",
    "spherical_seeds",
    "track_branch",
]
