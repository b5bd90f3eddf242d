"""The Riley-Mednykh polynomial of the two-bridge knot J(2n, -2m).

For a meridian eigenvalue ``M`` and trace coordinate ``x`` set
``v = x + M^2 + M^-2`` and ``z = 2 + (v - 2) x S_{n-1}(v)^2``. Then

    phi(x, M) = S_m(z) + [-1 + x S_{n-1}(v) (S_n(v) + (1 - v) S_{n-1}(v))] S_{m-1}(z)

vanishes exactly when the meridian assignment extends to a representation
of the knot group.  For real cone angles ``M^2 + M^-2`` is real, so ``phi``
is then a real polynomial of degree ``2mn`` in ``x``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .algebra import SL2Matrix, build_holonomy, cheb, cheb_with_derivative, mat_pow
from .exceptions import DomainError, NumericalError


@dataclass(frozen=True)
class KnotParams:
    """Index pair of the knot J(2n, -2m): ``2n`` vertical, ``2m`` horizontal crossings."""

    n: int
    m: int

    def __post_init__(self):
        for name in ("n", "m"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise DomainError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise DomainError(f"{name} must be >= 1, got {value}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "m", int(self.m))

    @property
    def degree(self) -> int:
        return 2 * self.m * self.n

    @property
    def amphicheiral(self) -> bool:
        return self.n == self.m


@dataclass(frozen=True)
class TracePoint:
    """Trace coordinates at cone angle ``alpha`` for a given ``x``."""

    alpha: float
    M: complex
    x: complex
    v: complex
    z: complex

    @classmethod
    def at(cls, params: KnotParams, alpha: float, x: complex) -> TracePoint:
        M = cmath.exp(0.5j * alpha)
        v = x + M**2 + M**-2
        z = 2 + (v - 2) * x * cheb(params.n - 1, v) ** 2
        return cls(float(alpha), M, complex(x), complex(v), complex(z))


def meridian(alpha):
    """Meridian eigenvalue ``M = exp(i alpha / 2)``."""
    return np.exp(0.5j * np.asarray(alpha, dtype=float))


def _check_M(M):
    if np.any(np.asarray(M) == 0):
        raise DomainError("meridian eigenvalue M must be nonzero")


def rm_eval(params: KnotParams, x, M):
    """Evaluate ``phi(x, M)``; broadcasts over array ``x`` and ``M``."""
    _check_M(M)
    n, m = params.n, params.m
    v = x + M**2 + M**-2
    sn = cheb(n, v)
    sn1 = cheb(n - 1, v)
    z = 2 + (v - 2) * x * sn1**2
    p = -1 + x * sn1 * (sn + (1 - v) * sn1)
    return cheb(m, z) + p * cheb(m - 1, z)


def rm_dx(params: KnotParams, x, M):
    """Analytic ``d phi / dx`` by the chain rule (``dv/dx = 1``)."""
    _check_M(M)
    n, m = params.n, params.m
    v = x + M**2 + M**-2
    sn, dsn = cheb_with_derivative(n, v)
    sn1, dsn1 = cheb_with_derivative(n - 1, v)
    z = 2 + (v - 2) * x * sn1**2
    dz = x * sn1**2 + (v - 2) * sn1**2 + 2 * (v - 2) * x * sn1 * dsn1
    q = sn1 * (sn + (1 - v) * sn1)
    dq = dsn1 * (sn + (1 - v) * sn1) + sn1 * (dsn - sn1 + (1 - v) * dsn1)
    p = -1 + x * q
    dp = q + x * dq
    sm, dsm = cheb_with_derivative(m, z)
    sm1, dsm1 = cheb_with_derivative(m - 1, z)
    return dsm * dz + dp * sm1 + p * dsm1 * dz


def _cheb_poly(k: int, v: np.ndarray) -> np.ndarray:
    """``S_k(v)`` as a coefficient array in ``x`` when ``v`` is itself one."""
    if k == -1:
        return np.zeros(1, dtype=complex)
    if k < -1:
        return -_cheb_poly(-k - 2, v)
    prev, cur = np.zeros(1, dtype=complex), np.ones(1, dtype=complex)
    for _ in range(k):
        prev, cur = cur, P.polysub(P.polymul(v, cur), prev)
    return cur


def _coeffs_arithmetic(params: KnotParams, M: complex) -> np.ndarray:
    n, m = params.n, params.m
    c = M**2 + M**-2
    v = np.array([c, 1], dtype=complex)
    x = np.array([0, 1], dtype=complex)
    sn, sn1 = _cheb_poly(n, v), _cheb_poly(n - 1, v)
    z = P.polyadd([2], P.polymul(P.polymul(v - [2, 0], x), P.polymul(sn1, sn1)))
    inner = P.polyadd(sn, P.polymul([1 - c, -1], sn1))
    bracket = P.polyadd([-1], P.polymul(P.polymul(x, sn1), inner))
    return P.polyadd(_cheb_poly(m, z), P.polymul(bracket, _cheb_poly(m - 1, z)))


def _coeffs_interp(params: KnotParams, M: complex, radius: float) -> np.ndarray:
    size = params.degree + 1
    nodes = radius * np.exp(2j * np.pi * np.arange(size) / size)
    values = rm_eval(params, nodes, M)
    if not np.all(np.isfinite(values)):
        raise NumericalError("non-finite polynomial values at interpolation nodes")
    coeffs = np.fft.fft(values) / size / radius ** np.arange(size)
    # off-node consistency guards against a numerically singular reconstruction
    probe = 0.5 * radius * np.exp(1j * (0.3 + 2 * np.pi * np.arange(3) / 3))
    direct = rm_eval(params, probe, M)
    if np.max(np.abs(direct - P.polyval(probe, coeffs))) > 1e-6 * np.max(np.abs(values)):
        raise NumericalError("coefficient interpolation is numerically singular")
    return coeffs


def rm_coeffs(params: KnotParams, M, method: str = "arithmetic", radius: float = 2.0) -> np.ndarray:
    """Coefficients of ``phi`` in ``x`` (lowest degree first, length ``2mn + 1``).

    ``method="arithmetic"`` expands the Chebyshev recurrences as polynomials
    in ``x``; ``method="interp"`` samples ``phi`` at ``2mn + 1`` points of the
    circle ``|x| = radius`` and inverts the discrete Fourier relation.  The
    expansion is the more accurate of the two from degree ~8 on.

    >>> np.round(rm_coeffs(KnotParams(1, 1), 1j).real, 12)
    array([ 1., -3.,  1.])
    """
    _check_M(M)
    M = complex(M)
    if method == "arithmetic":
        coeffs = _coeffs_arithmetic(params, M)
    elif method == "interp":
        coeffs = _coeffs_interp(params, M, radius)
    else:
        raise DomainError(f"unknown method {method!r}")
    if len(coeffs) != params.degree + 1:
        raise NumericalError(f"expected {params.degree + 1} coefficients, got {len(coeffs)}")
    return coeffs


def rep_residual(params: KnotParams, x: complex, M: complex) -> float:
    """Max-entry norm of ``S W^m T^-1 W^-m - I`` for the meridian images at ``x``."""
    hol = build_holonomy(params, x, M)
    m = params.m
    word = hol.S @ mat_pow(hol.W, m) @ hol.T.inv() @ mat_pow(hol.W, -m)
    return word.max_abs_diff(SL2Matrix.identity())
