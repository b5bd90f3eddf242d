"""Following the geometric component of the zero set of phi in the cone angle.

At ``alpha = pi`` the geometric component passes through two real roots
(``spherical_seeds``).  Decreasing the angle, these two real roots approach
each other and collide at the Euclidean angle ``alpha0``; below it they form a
complex-conjugate pair, one member of which carries the hyperbolic structure.

Since ``phi`` has real coefficients for every real angle, a real Newton
iteration can never leave the real axis.  This gives a sharp regime test: at
a trial angle the two real branches still exist exactly when the local
extremum of ``phi`` lying between them has the sign it has at ``alpha = pi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

from .algebra import longitude_terms
from .exceptions import DomainError, NumericalError
from .rmpoly import KnotParams, meridian, rm_coeffs, rm_dx, rm_eval

DEFAULT_STEPS = 2000
DEFAULT_TOL = 1e-12
JUMP_BOUND = 0.2
MAX_HALVINGS = 20
ROOT_TOL = 1e-9
ALPHA_FLOOR = 1e-6
ALPHA0_MIN = 2 * math.pi / 3

# distance below 2*pi/3 scanned before declaring that no collision exists
_SCAN_MARGIN = 0.05
_SCAN_STEPS = 400


class Regime(str, Enum):
    SPHERICAL = "spherical"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True, eq=False)
class BranchPath:
    """A sampled curve ``alpha -> x(alpha)`` on one branch of the zero set.

    ``alpha0`` is set when the path ends (spherical) or starts (hyperbolic)
    at the collision point; interpolation then uses ``sqrt|alpha - alpha0|``,
    in which the branch is smooth.
    """

    params: KnotParams
    alphas: np.ndarray
    xs: np.ndarray
    regime: Regime
    alpha0: float | None = None
    jump: float = JUMP_BOUND
    _order: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        alphas = np.asarray(self.alphas, dtype=float)
        xs = np.asarray(self.xs, dtype=complex)
        if alphas.shape != xs.shape or alphas.ndim != 1:
            raise ValueError("alphas and xs must be 1-d arrays of equal length")
        alphas.setflags(write=False)
        xs.setflags(write=False)
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "_order", np.argsort(alphas))

    def __len__(self):
        return len(self.alphas)

    @property
    def samples(self):
        return list(zip(self.alphas.tolist(), self.xs.tolist()))

    @property
    def alpha_range(self) -> tuple[float, float]:
        return float(self.alphas.min()), float(self.alphas.max())

    def check(self):
        """Raise :class:`NumericalError` if a sampling invariant is violated."""
        d = np.diff(self.alphas)
        if len(d) and not (np.all(d > 0) or np.all(d < 0)):
            raise NumericalError("samples are not strictly monotone in alpha")
        if len(d) and np.max(np.abs(np.diff(self.xs))) >= self.jump:
            raise NumericalError("consecutive samples exceed the jump bound")
        if self.regime is Regime.SPHERICAL and np.max(np.abs(self.xs.imag)) >= 1e-8:
            raise NumericalError("spherical branch left the real axis")
        res = np.abs(rm_eval(self.params, self.xs, meridian(self.alphas)))
        if np.max(res) >= ROOT_TOL:
            raise NumericalError(f"sample off the zero set (|phi| = {np.max(res):.3g})")

    def _coord(self, alpha):
        if self.alpha0 is None:
            return np.asarray(alpha, dtype=float)
        return np.sqrt(np.abs(np.asarray(alpha, dtype=float) - self.alpha0))

    def predict(self, alpha):
        """Interpolated (unrefined) position of the branch at ``alpha``."""
        lo, hi = self.alpha_range
        alpha = np.asarray(alpha, dtype=float)
        if np.any(alpha < lo - 1e-12) or np.any(alpha > hi + 1e-12):
            raise DomainError(f"alpha outside the sampled range [{lo}, {hi}]")
        t = self._coord(self.alphas)
        order = np.argsort(t)
        tq = self._coord(alpha)
        re = np.interp(tq, t[order], self.xs.real[order])
        im = np.interp(tq, t[order], self.xs.imag[order])
        return re + 1j * im

    def roots_at(self, alphas) -> np.ndarray:
        """Branch values at many angles: interpolation refined by Newton."""
        alphas = np.atleast_1d(np.asarray(alphas, dtype=float))
        pred = self.predict(alphas)
        x = pred.copy()
        real = self.regime is Regime.SPHERICAL
        near_fold = np.zeros(len(alphas), dtype=bool)
        if self.alpha0 is not None:
            near_fold = np.abs(alphas - self.alpha0) < 1e-12
        active = ~near_fold
        if np.any(active):
            x[active], ok = _newton_many(self.params, pred[active], meridian(alphas[active]), real)
            drift = np.abs(x[active] - pred[active])
            bad = ~ok | (drift > self.jump)
            if np.any(bad):
                idx = np.flatnonzero(active)[bad]
                for i in idx:
                    x[i] = self._refine_by_continuation(alphas[i])
        if near_fold.any():
            x[near_fold] = self.xs[np.argmin(np.abs(self.alphas - self.alpha0))]
        return x

    def root_at(self, alpha: float) -> complex:
        return complex(self.roots_at([alpha])[0])

    def _refine_by_continuation(self, alpha: float) -> complex:
        i = int(np.argmin(np.abs(self.alphas - alpha)))
        grid = np.array([self.alphas[i], alpha])
        real = self.regime is Regime.SPHERICAL
        _, xs = _continue(self.params, self.xs[i], grid, real=real, jump=self.jump)
        return xs[-1]

    def rows(self):
        """``(alpha, re_x, im_x)`` tuples in sample order."""
        return [(float(a), float(x.real), float(x.imag)) for a, x in zip(self.alphas, self.xs)]


@dataclass(frozen=True)
class Alpha0Result:
    """Location of the Euclidean angle.

    ``collision_gap`` is ``|x1 - x2|`` on the spherical end of the final
    bracket; ``x0`` the (real) double root there.
    """

    alpha0: float
    collision_gap: float
    x0: float = float("nan")


# ---------------------------------------------------------------- Newton


def _newton(params, x, M, real, max_iter=12, tol=1e-14):
    step = np.inf
    for _ in range(max_iter):
        fp = rm_dx(params, x, M)
        if fp == 0:
            return x, False
        step = rm_eval(params, x, M) / fp
        if real:
            step = step.real
        x = x - step
        if abs(step) <= tol * (1 + abs(x)):
            return x, True
    # rounding noise near a double root can stall the step test
    settled = abs(step) <= 1e-10 * (1 + abs(x)) and abs(rm_eval(params, x, M)) < ROOT_TOL
    return x, settled


def _newton_many(params, x, M, real, max_iter=20, tol=1e-14):
    x = np.array(x, dtype=complex)
    if real:
        x = x.real.astype(complex)
    done = np.zeros(x.shape, dtype=bool)
    for _ in range(max_iter):
        live = ~done
        if not live.any():
            break
        xl, Ml = x[live], M[live]
        step = rm_eval(params, xl, Ml) / rm_dx(params, xl, Ml)
        if real:
            step = step.real
        x[live] = xl - step
        finished = np.abs(step) <= tol * (1 + np.abs(x[live]))
        done[np.flatnonzero(live)[finished]] = True
    step = rm_eval(params, x, M) / rm_dx(params, x, M)
    settled = np.abs(step) <= 1e-10 * (1 + np.abs(x))
    ok = (done | settled) & np.isfinite(x)
    ok &= np.abs(rm_eval(params, x, M)) < ROOT_TOL
    return x, ok


def _continue(params, x_start, alphas, *, real, jump=JUMP_BOUND, max_halvings=MAX_HALVINGS):
    """Newton continuation through the monotone grid ``alphas``.

    The predictor extrapolates linearly from the last two accepted samples.
    Steps are halved (at most ``max_halvings`` times in a row) when Newton
    fails or the jump bound is exceeded; accepted intermediate points are
    kept as samples.
    """
    out_a = [float(alphas[0])]
    out_x = [complex(x_start)]
    for target in alphas[1:]:
        target = float(target)
        attempt = target
        halvings = 0
        while True:
            a1, x1 = out_a[-1], out_x[-1]
            pred = x1
            if len(out_a) >= 2:
                a0, xp = out_a[-2], out_x[-2]
                pred = x1 + (x1 - xp) * (attempt - a1) / (a1 - a0)
            if real:
                pred = complex(pred.real)
            x, ok = _newton(params, pred, complex(meridian(attempt)), real)
            ok = ok and abs(x - x1) < jump and abs(rm_eval(params, x, meridian(attempt))) < ROOT_TOL
            if ok:
                out_a.append(attempt)
                out_x.append(complex(x))
                if attempt == target:
                    break
                halvings = 0
                attempt = target
                continue
            halvings += 1
            if halvings > max_halvings:
                raise NumericalError(
                    f"continuation failed near alpha = {a1:.15g} "
                    "(branch point crossed or Newton diverged at minimal step)"
                )
            attempt = 0.5 * (a1 + attempt)
    return np.array(out_a), np.array(out_x)


# ---------------------------------------------------------------- seeds / oracle


def spherical_seeds(params: KnotParams) -> tuple[float, float]:
    """Real roots at ``alpha = pi`` through which the geometric component passes."""
    n, m = params.n, params.m
    p = 4 * n * m + 1
    x1 = 2 - 2 * math.cos(math.pi * (2 * m + 1) / p)
    x2 = 2 - 2 * math.cos(math.pi * (2 * m - 1) / p)
    return x1, x2


def _start_radius(params, M) -> float:
    coeffs = rm_coeffs(params, M)
    lead, const = coeffs[-1], coeffs[0]
    if lead == 0 or const == 0:
        return 1.0
    return abs(const / lead) ** (1.0 / params.degree)


def all_roots_many(params: KnotParams, Ms, max_iter: int = 500) -> np.ndarray:
    """All ``2mn`` roots of ``phi(., M)`` for each ``M`` in ``Ms``; shape ``(len(Ms), 2mn)``.

    Aberth-Ehrlich simultaneous iteration, run on direct evaluations of
    ``phi`` and ``phi'`` and vectorised over the meridian values.  Each row
    stops when the Aberth steps fall below ``1e-14`` relative, or when the
    residual ``max |phi(z)|`` is already tiny and has stopped improving for
    20 iterations (a multiple root converges only linearly and its iterates
    jitter at the rounding level without meeting the step test).  Rows are
    sorted by real, then imaginary part.
    """
    Ms = np.atleast_1d(np.asarray(Ms, dtype=complex))
    d = params.degree
    K = len(Ms)
    radius = np.array([_start_radius(params, M) for M in Ms])
    angles = 2 * np.pi * np.arange(d) / d + 0.5 / d + 0.25
    z = radius[:, None] * np.exp(1j * angles)[None, :]
    Mz = np.broadcast_to(Ms[:, None], z.shape)
    active = np.ones(K, dtype=bool)
    best = np.full(K, np.inf)
    stall = np.zeros(K, dtype=int)
    for _ in range(max_iter):
        za, Ma = z[active], Mz[active]
        ratio = rm_eval(params, za, Ma) / rm_dx(params, za, Ma)
        diff = za[:, :, None] - za[:, None, :]
        idx = np.arange(d)
        diff[:, idx, idx] = np.inf
        w = ratio / (1 - ratio * np.sum(1.0 / diff, axis=2))
        za = za - w
        z[active] = za
        stepped = np.all(np.abs(w) <= 1e-14 * (1 + np.abs(za)), axis=1)
        residual = np.max(np.abs(rm_eval(params, za, Ma)), axis=1)
        ids = np.flatnonzero(active)
        improved = residual < 0.9 * best[ids]
        best[ids] = np.where(improved, residual, best[ids])
        stall[ids] = np.where(improved, 0, stall[ids] + 1)
        done = stepped | ((stall[ids] >= 20) & (best[ids] <= 1e-3 * ROOT_TOL))
        active[ids[done]] = False
        if not active.any():
            break
    else:
        raise NumericalError(f"Aberth iteration did not converge in {max_iter} iterations")
    residual = np.abs(rm_eval(params, z, Mz))
    if np.max(residual) >= ROOT_TOL:
        raise NumericalError(f"Aberth roots inaccurate (|phi| = {np.max(residual):.3g})")
    out = np.empty_like(z)
    for i, row in enumerate(z):
        out[i] = row[np.lexsort((np.round(row.imag, 10), np.round(row.real, 10)))]
    return out


def all_roots(params: KnotParams, M: complex, max_iter: int = 500) -> np.ndarray:
    """All ``2mn`` roots of ``phi(., M)`` (see :func:`all_roots_many`)."""
    return all_roots_many(params, [complex(M)], max_iter)[0]


# ---------------------------------------------------------------- continuation API


def track_branch(
    params: KnotParams,
    seed: complex,
    alpha_from: float,
    alpha_to: float,
    steps: int = DEFAULT_STEPS,
    jump: float = JUMP_BOUND,
) -> BranchPath:
    """Continue the root ``seed`` of ``phi`` at ``alpha_from`` to ``alpha_to``.

    A real seed is continued with real Newton steps (the spherical regime);
    if the real root disappears the continuation fails rather than silently
    moving into the complex plane.
    """
    seed = complex(seed)
    if abs(rm_eval(params, seed, meridian(alpha_from))) >= ROOT_TOL:
        raise DomainError("seed is not a root of phi at alpha_from")
    real = abs(seed.imag) < 1e-12
    regime = Regime.SPHERICAL if real else Regime.HYPERBOLIC
    if steps == 0 or alpha_from == alpha_to:
        return BranchPath(params, np.array([alpha_from]), np.array([seed]), regime, jump=jump)
    if steps < 0:
        raise DomainError("steps must be non-negative")
    grid = np.linspace(alpha_from, alpha_to, steps + 1)
    alphas, xs = _continue(params, seed, grid, real=real, jump=jump)
    return BranchPath(params, alphas, xs, regime, jump=jump)


def _d2(params, x, M):
    h = 1e-5 * (1 + abs(x))
    return (rm_dx(params, x + h, M) - rm_dx(params, x - h, M)) / (2 * h)


def _critical_point(params, alpha, x_guess, max_iter=50):
    """Real zero of ``phi'`` near ``x_guess`` at angle ``alpha``."""
    M = complex(meridian(alpha))
    x = float(x_guess)
    for _ in range(max_iter):
        f2 = _d2(params, x, M).real
        if f2 == 0:
            break
        step = rm_dx(params, x, M).real / f2
        x -= step
        if abs(step) <= 1e-14 * (1 + abs(x)):
            return x
    raise NumericalError(f"could not locate the critical point of phi at alpha = {alpha:.15g}")


def _fold_value(params, alpha, xc):
    """``phi`` at its critical point ``xc`` (real for real angles)."""
    return rm_eval(params, xc, complex(meridian(alpha))).real


def find_alpha0(params: KnotParams, tol: float = DEFAULT_TOL, steps: int = _SCAN_STEPS) -> Alpha0Result:
    """Bisect on the angle at which the two spherical branches collide."""
    if tol < 1e-13:
        raise DomainError("tol must be >= 1e-13")
    x1, x2 = spherical_seeds(params)
    M_pi = complex(meridian(math.pi))
    lo_x, hi_x = min(x1, x2), max(x1, x2)
    xc = brentq(lambda t: rm_dx(params, t, M_pi).real, lo_x, hi_x, xtol=1e-15)
    sign_sph = math.copysign(1.0, _fold_value(params, math.pi, xc))

    floor = ALPHA0_MIN - _SCAN_MARGIN
    grid = np.linspace(math.pi, floor, steps + 1)
    hi, xc_hi = math.pi, xc
    lo = None
    for a in grid[1:]:
        xc_new = _critical_point(params, a, xc_hi)
        if abs(xc_new - xc_hi) > JUMP_BOUND:
            raise NumericalError("critical point jumped during the collision scan")
        if math.copysign(1.0, _fold_value(params, a, xc_new)) != sign_sph:
            lo = float(a)
            break
        hi, xc_hi = float(a), xc_new
    if lo is None:
        raise DomainError(f"no regime change found in [2pi/3, pi) for {params}")

    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        xc_mid = _critical_point(params, mid, xc_hi)
        if math.copysign(1.0, _fold_value(params, mid, xc_mid)) == sign_sph:
            hi, xc_hi = mid, xc_mid
        else:
            lo = mid
    alpha0 = 0.5 * (lo + hi)
    if alpha0 < ALPHA0_MIN:
        if ALPHA0_MIN - alpha0 > max(tol, 1e-12):
            raise DomainError(f"no regime change found in [2pi/3, pi) for {params}")
        alpha0 = ALPHA0_MIN

    M = complex(meridian(hi))
    f = _fold_value(params, hi, xc_hi)
    f2 = _d2(params, xc_hi, M).real
    gap = 2 * math.sqrt(max(0.0, -2 * f / f2)) if f2 else float("nan")
    return Alpha0Result(alpha0, gap, xc_hi)


# ---------------------------------------------------------------- geometric component


def geometric_sign(n: int, x, M):
    """``Im((S_n - S_{n-1}) * conj(S_{n-1} - S_{n-2}))`` at ``v = x + M^2 + M^-2``."""
    v = x + M**2 + M**-2
    a, b = longitude_terms(n, v)
    return np.imag(a * np.conj(b))


def _fold_pair(params, alpha, x0):
    """Quadratic model of the two roots near the collision point."""
    xc = _critical_point(params, alpha, x0)
    M = complex(meridian(alpha))
    f = _fold_value(params, alpha, xc)
    f2 = _d2(params, xc, M).real
    d = np.sqrt(complex(-2 * f / f2))
    return xc + d, xc - d


def _sqrt_grid(alpha0, far, steps, include_fold):
    """Angles from ``far`` towards ``alpha0`` uniform in ``sqrt|alpha - alpha0|``."""
    span = math.sqrt(abs(far - alpha0))
    direction = math.copysign(1.0, far - alpha0)
    s = np.linspace(span, 0.0, steps + 1)
    if not include_fold:
        s = s[:-1]
    return alpha0 + direction * s**2


@dataclass(frozen=True, eq=False)
class GeometricComponent:
    """Cached continuation of the geometric component for one knot.

    ``spherical`` holds the two real branches on ``[alpha0, pi]`` (ordered
    from ``pi`` to ``alpha0``); ``hyperbolic`` the canonical member of the
    conjugate pair on ``[floor, alpha0]`` (ordered from ``alpha0`` down).
    """

    params: KnotParams
    alpha0: Alpha0Result
    spherical: tuple[BranchPath, BranchPath]
    hyperbolic: BranchPath

    def hyperbolic_roots(self, alphas) -> np.ndarray:
        return self.hyperbolic.roots_at(alphas)

    def hyperbolic_root(self, alpha: float) -> complex:
        a0 = self.alpha0.alpha0
        if not 0 < alpha < a0:
            raise DomainError(f"alpha = {alpha} is not in the hyperbolic range (0, {a0})")
        if alpha < self.hyperbolic.alpha_range[0]:
            # below the cached floor: continue from the last sample
            path = track_branch(self.params, self.hyperbolic.xs[-1], self.hyperbolic.alphas[-1], alpha, steps=16)
            return complex(path.xs[-1])
        return self.hyperbolic.root_at(alpha)

    def spherical_roots(self, alphas) -> tuple[np.ndarray, np.ndarray]:
        p1, p2 = self.spherical
        return p1.roots_at(alphas), p2.roots_at(alphas)


def build_component(
    params: KnotParams,
    steps: int = DEFAULT_STEPS,
    tol: float = DEFAULT_TOL,
    jump: float = JUMP_BOUND,
    floor: float = ALPHA_FLOOR,
) -> GeometricComponent:
    a0 = find_alpha0(params, tol)
    alpha0, x0 = a0.alpha0, a0.x0

    paths = []
    grid = _sqrt_grid(alpha0, math.pi, steps, include_fold=False)
    for seed in spherical_seeds(params):
        alphas, xs = _continue(params, seed, grid, real=True, jump=jump)
        alphas = np.append(alphas, alpha0)
        xs = np.append(xs.real, x0).astype(complex)
        paths.append(BranchPath(params, alphas, xs, Regime.SPHERICAL, alpha0=alpha0, jump=jump))

    grid = _sqrt_grid(alpha0, floor, steps, include_fold=False)[::-1]
    first = grid[0]
    M = complex(meridian(first))
    candidates = []
    for guess in _fold_pair(params, first, x0):
        x, ok = _newton(params, complex(guess.real, abs(guess.imag)), M, real=False)
        if ok:
            candidates.extend([x, x.conjugate()])
    candidates = [x for x in candidates if abs(x.imag) > 0 and geometric_sign(params.n, x, M) > 0]
    if not candidates:
        raise NumericalError("could not hand off to the hyperbolic branch below alpha0")
    start = min(candidates, key=lambda x: abs(x - x0))
    alphas, xs = _continue(params, start, grid, real=False, jump=jump)
    hyper = BranchPath(
        params,
        np.insert(alphas, 0, alpha0),
        np.insert(xs, 0, complex(x0)),
        Regime.HYPERBOLIC,
        alpha0=alpha0,
        jump=jump,
    )
    return GeometricComponent(params, a0, (paths[0], paths[1]), hyper)


@lru_cache(maxsize=64)
def geometric_component(params: KnotParams, steps: int = DEFAULT_STEPS, tol: float = DEFAULT_TOL) -> GeometricComponent:
    """Memoised :func:`build_component`; the result is immutable."""
    return build_component(params, steps=steps, tol=tol)


def geometric_root(params: KnotParams, alpha: float, steps: int = DEFAULT_STEPS, tol: float = DEFAULT_TOL) -> complex:
    """The hyperbolic root selected by ``geometric_sign >= 0`` at angle ``alpha``."""
    comp = geometric_component(params, steps, tol)
    return comp.hyperbolic_root(alpha)
