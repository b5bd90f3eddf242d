"""Input checks shared by the estimator and the command line."""

from __future__ import annotations

import math

import numpy as np
from sklearn.utils.validation import check_array

from .exceptions import DomainError
from .rmpoly import KnotParams


def check_knot_params(n, m) -> KnotParams:
    return KnotParams(n, m)


def check_intervals(value, name="intervals") -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < 2 or value % 2:
        raise DomainError(f"{name} must be even and >= 2, got {value}")
    return int(value)


def check_angles(X) -> np.ndarray:
    """Cone angles as a 1-d float array, each in ``(0, pi]``."""
    arr = check_array(X, ensure_2d=False, dtype=np.float64).reshape(-1)
    if np.any(arr <= 0) or np.any(arr > math.pi):
        raise DomainError("cone angles must lie in (0, pi]")
    return arr


def check_orders(X) -> np.ndarray:
    """Orbifold orders ``k`` as a 1-d integer array, each ``>= 3``."""
    arr = check_array(X, ensure_2d=False, dtype=np.float64).reshape(-1)
    if np.any(arr != np.round(arr)) or np.any(arr < 3):
        raise DomainError("orbifold orders must be integers >= 3")
    return arr.astype(int)
