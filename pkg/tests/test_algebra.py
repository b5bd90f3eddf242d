import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jknotcs import DomainError, KnotParams, SL2Matrix, build_holonomy, cheb, mat_pow
from jknotcs.algebra import cheb_with_derivative, longitude_terms, w_entries

complex_v = st.builds(
    lambda r, t: r * cmath.exp(1j * t),
    st.floats(0.0, 2.5),
    st.floats(0.0, 2 * math.pi),
)


def random_sl2(rng, scale=1.0):
    a, b, c = scale * (rng.normal(size=3) + 1j * rng.normal(size=3))
    if abs(a) < 1e-3:
        a += 1
    return SL2Matrix(a, b, c, (1 + b * c) / a)


def power_by_multiplication(V, k):
    out = SL2Matrix.identity()
    step = V if k >= 0 else V.inv()
    for _ in range(abs(k)):
        out = out @ step
    return out


# ---------------------------------------------------------------- cheb


def test_cheb_base_cases():
    for v in (0.3, -1.7 + 2j, 5.0):
        assert cheb(0, v) == 1
        assert cheb(-1, v) == 0
        assert cheb(1, v) == v


def test_cheb_trigonometric_closed_form():
    theta = 0.7
    assert abs(cheb(5, 2 * math.cos(theta)) - math.sin(6 * theta) / math.sin(theta)) < 1e-12


@pytest.mark.parametrize("n", range(2, 21))
def test_cheb_negative_reflection(n):
    v = 0.37 - 1.1j
    assert cheb(-n, v) == pytest.approx(-cheb(n - 2, v), abs=1e-12, rel=1e-12)


@settings(max_examples=50, deadline=None)
@given(v=complex_v, n=st.integers(-20, 20))
def test_cheb_trace_identity(v, n):
    s, s1 = cheb(n, v), cheb(n - 1, v)
    terms = abs(s) ** 2 + abs(v * s * s1) + abs(s1) ** 2
    assert abs(s * s - v * s * s1 + s1 * s1 - 1) <= 1e-10 * max(1.0, terms)


def test_cheb_vectorised_matches_scalar():
    vs = np.array([0.1, 1.5 + 0.2j, -2.2])
    out = cheb(7, vs)
    assert np.allclose(out, [cheb(7, complex(v)) for v in vs], rtol=1e-14)


def test_cheb_derivative_matches_finite_difference():
    v, h = 0.8 + 0.3j, 1e-6
    for k in (-4, 0, 3, 9):
        value, deriv = cheb_with_derivative(k, v)
        assert value == pytest.approx(cheb(k, v))
        fd = (cheb(k, v + h) - cheb(k, v - h)) / (2 * h)
        assert abs(deriv - fd) <= 1e-6 * max(1, abs(fd))


# ---------------------------------------------------------------- SL2Matrix / mat_pow


def test_matrix_product_and_inverse_against_numpy(rng):
    A, B = random_sl2(rng), random_sl2(rng)
    assert np.allclose((A @ B).to_array(), A.to_array() @ B.to_array())
    assert np.allclose(A.inv().to_array(), np.linalg.inv(A.to_array()))
    assert A.max_abs_diff(SL2Matrix.from_array(A.to_array())) == 0


def test_mat_pow_trivial_powers(rng):
    V = random_sl2(rng)
    assert mat_pow(V, 0).max_abs_diff(SL2Matrix.identity()) < 1e-14
    assert mat_pow(V, 1).max_abs_diff(V) < 1e-14


def test_mat_pow_five_real_matrix():
    V = SL2Matrix(2.0, 1.0, 1.0, 1.0)  # det 1 already
    assert abs(V.det - 1) < 1e-15
    assert mat_pow(V, 5).max_abs_diff(power_by_multiplication(V, 5)) < 1e-10


@pytest.mark.parametrize("k", range(-6, 13))
def test_mat_pow_matches_repeated_multiplication(rng, k):
    for _ in range(5):
        V = random_sl2(rng)
        assert mat_pow(V, k).max_abs_diff(power_by_multiplication(V, k)) < 1e-9 * max(
            1, np.max(np.abs(power_by_multiplication(V, k).to_array()))
        )


def test_mat_pow_rejects_non_unimodular():
    with pytest.raises(DomainError):
        mat_pow(SL2Matrix(2.0, 0.0, 0.0, 2.0), 3)


# ---------------------------------------------------------------- holonomy


def test_holonomy_z_formula(rng):
    params = KnotParams(3, 2)
    for _ in range(10):
        x = complex(rng.normal(), rng.normal())
        M = cmath.exp(1j * rng.uniform(0, math.pi))
        hol = build_holonomy(params, x, M)
        v = x + M**2 + M**-2
        assert abs(hol.z - (2 + (v - 2) * x * cheb(2, v) ** 2)) < 1e-12 * max(1, abs(hol.z))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_closed_form_w_matches_product(rng, n):
    params = KnotParams(n, 2)
    for _ in range(5):
        x = complex(rng.normal(), rng.normal())
        M = cmath.exp(1j * rng.uniform(0, math.pi))
        hol = build_holonomy(params, x, M)
        S, T = hol.S, hol.T
        direct = power_by_multiplication(T.inv() @ S, n) @ power_by_multiplication(T @ S.inv(), n)
        scale = max(1, np.max(np.abs(direct.to_array())))
        assert hol.W.max_abs_diff(direct) < 1e-10 * scale
        reverse = power_by_multiplication(S.inv() @ T, n) @ power_by_multiplication(S @ T.inv(), n)
        assert hol.W_star.max_abs_diff(reverse) < 1e-10 * scale


def test_constructed_matrices_are_unimodular(rng):
    for n in range(1, 5):
        for _ in range(5):
            x = complex(rng.normal(), rng.normal())
            M = cmath.exp(1j * rng.uniform(0, math.pi))
            hol = build_holonomy(KnotParams(n, 1), x, M)
            for mat in (hol.S, hol.T, hol.W, hol.W_star):
                assert abs(mat.det - 1) < 1e-10 * max(1, abs(mat.a * mat.d))


def test_w_lower_left_entry_relation():
    n, v, M = 3, 0.4 + 0.9j, cmath.exp(0.6j)
    w11, w12, w22 = w_entries(n, v, M)
    hol_w = build_holonomy(KnotParams(n, 1), v - M**2 - M**-2, M).W
    assert abs(hol_w.c - (2 - v) * w12) < 1e-12


def test_longitude_terms_definition():
    v = 1.3 - 0.2j
    a, b = longitude_terms(4, v)
    assert a == pytest.approx(cheb(4, v) - cheb(3, v))
    assert b == pytest.approx(cheb(3, v) - cheb(2, v))


def test_build_holonomy_rejects_zero_meridian():
    with pytest.raises(DomainError):
        build_holonomy(KnotParams(1, 1), 0.5, 0)
