"""Chebyshev-type polynomials and SL(2, C) matrix algebra.

``S_k`` denotes the sequence ``S_0 = 1``, ``S_1 = v``,
``S_k = v S_{k-1} - S_{k-2}``, extended to every integer ``k``.
All functions accept scalars or numpy arrays for ``v`` and broadcast.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exceptions import DomainError

UNIMODULAR_TOL = 1e-10


def cheb(k: int, v):
    """Evaluate ``S_k(v)`` by the forward three-term recurrence.

    Negative indices use ``S_{-1} = 0`` and ``S_k = -S_{-k-2}``.

    >>> cheb(3, 2.0)
    4.0
    >>> cheb(-3, 2.0)
    -2.0
    """
    k = int(k)
    if k == -1:
        return 0 * v
    if k < -1:
        return -cheb(-k - 2, v)
    prev, cur = 1 + 0 * v, v
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, v * cur - prev
    return cur


def cheb_with_derivative(k: int, v):
    """Return ``(S_k(v), S_k'(v))``.

    The derivative follows the differentiated recurrence
    ``S_k' = S_{k-1} + v S_{k-1}' - S_{k-2}'`` with ``S_0' = 0``, ``S_1' = 1``.
    """
    k = int(k)
    zero = 0 * v
    if k == -1:
        return zero, zero
    if k < -1:
        s, ds = cheb_with_derivative(-k - 2, v)
        return -s, -ds
    s_prev, s_cur = 1 + zero, v
    d_prev, d_cur = zero, 1 + zero
    if k == 0:
        return s_prev, d_prev
    for _ in range(k - 1):
        s_prev, s_cur, d_prev, d_cur = (
            s_cur,
            v * s_cur - s_prev,
            d_cur,
            s_cur + v * d_cur - d_prev,
        )
    return s_cur, d_cur


@dataclass(frozen=True)
class SL2Matrix:
    """A 2x2 complex matrix ``[[a, b], [c, d]]``, expected to have unit determinant."""

    a: complex
    b: complex
    c: complex
    d: complex

    @classmethod
    def identity(cls) -> SL2Matrix:
        return cls(1.0 + 0j, 0j, 0j, 1.0 + 0j)

    @classmethod
    def from_array(cls, arr) -> SL2Matrix:
        arr = np.asarray(arr, dtype=complex)
        if arr.shape != (2, 2):
            raise ValueError(f"expected a 2x2 array, got shape {arr.shape}")
        return cls(arr[0, 0], arr[0, 1], arr[1, 0], arr[1, 1])

    def to_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> complex:
        return self.a + self.d

    def inv(self) -> SL2Matrix:
        # adjugate; exact inverse when det == 1
        return SL2Matrix(self.d, -self.b, -self.c, self.a)

    def __matmul__(self, other: SL2Matrix) -> SL2Matrix:
        return SL2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def max_abs_diff(self, other: SL2Matrix) -> float:
        return float(np.max(np.abs(self.to_array() - other.to_array())))


def mat_pow(V: SL2Matrix, k: int) -> SL2Matrix:
    """Return ``V**k`` from the Chebyshev closed form.

    ``V^k = [[S_k - d S_{k-1}, b S_{k-1}], [c S_{k-1}, S_k - a S_{k-1}]]``
    with ``v = tr V``. Valid for negative ``k`` as well.
    """
    if abs(V.det - 1) > UNIMODULAR_TOL:
        raise DomainError(f"matrix is not unimodular: det = {V.det!r}")
    v = V.trace
    sk = cheb(k, v)
    sk1 = cheb(k - 1, v)
    return SL2Matrix(sk - V.d * sk1, V.b * sk1, V.c * sk1, sk - V.a * sk1)


class Holonomy(NamedTuple):
    S: SL2Matrix
    T: SL2Matrix
    W: SL2Matrix
    W_star: SL2Matrix
    z: complex


def w_entries(n: int, v, M):
    """Closed-form entries ``(W11, W12, W22)`` of ``W = (T^-1 S)^n (T S^-1)^n``.

    The lower-left entry is ``(2 - v) W12``.
    """
    sn = cheb(n, v)
    sn1 = cheb(n - 1, v)
    Mi = 1 / M
    w11 = sn**2 + (2 - 2 * v) * sn * sn1 + (1 + 2 * Mi**2 - 2 * v - Mi**2 * v + v**2) * sn1**2
    w12 = (Mi - M) * sn * sn1 + (M * v - M - Mi) * sn1**2
    w22 = sn**2 - 2 * sn * sn1 + (1 + 2 * M**2 - M**2 * v) * sn1**2
    return w11, w12, w22


def build_holonomy(params, x: complex, M: complex) -> Holonomy:
    """Images of the two meridians, of ``w`` and of the reversed word ``w*``.

    ``v = x + M^2 + M^-2``; ``W_star`` is ``W`` with ``M`` replaced by ``1/M``
    and the diagonal swapped. ``z`` is ``tr W``.
    """
    if M == 0:
        raise DomainError("meridian eigenvalue M must be nonzero")
    n = params.n
    M = complex(M)
    v = complex(x) + M**2 + M**-2
    S = SL2Matrix(M, 1.0 + 0j, 0j, 1 / M)
    T = SL2Matrix(M, 0j, 2 - v, 1 / M)
    w11, w12, w22 = w_entries(n, v, M)
    t11, t12, t22 = w_entries(n, v, 1 / M)
    W = SL2Matrix(w11, w12, (2 - v) * w12, w22)
    W_star = SL2Matrix(t22, t12, (2 - v) * t12, t11)
    return Holonomy(S, T, W, W_star, w11 + w22)


def longitude_terms(n: int, v):
    """``(S_n - S_{n-1}, S_{n-1} - S_{n-2})`` at ``v``.

    Both the longitude eigenvalue and the branch-selection sign are written
    in terms of these two differences.
    """
    sn, sn1, sn2 = cheb(n, v), cheb(n - 1, v), cheb(n - 2, v)
    return sn - sn1, sn1 - sn2
