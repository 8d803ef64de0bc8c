import math
import warnings

import numpy as np
import pytest

from rieszshift.errors import ConvergenceError, DomainError
from rieszshift.nodal import (
    NodCoefficients,
    TruncationWarning,
    coefficient_mask,
    gauss_nod_coefficients,
    interpolate,
    lorentz_nod_coefficients,
    nod_coefficients,
    nod_function_eval,
    nod_normalizer,
    sign_alternation_violations,
    sinc,
    sinc_distance_closed_form,
)
from rieszshift.oracle import nod_function_fourier, sinc_distance_quadrature
from rieszshift.systems import GeneratorSpec, mask_phi
from rieszshift.verification import lorentz_kmax_for

SIGMAS = (0.5, 1.0, 2.0, 3.0)


def _quiet(fn, *args, **kwargs):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TruncationWarning)
        return fn(*args, **kwargs)


def _nod_residual(coeffs, reach):
    m = np.arange(-reach, reach + 1, dtype=float)
    return np.max(np.abs(nod_function_eval(coeffs, m) - (m == 0)))


# -- coefficients -----------------------------------------------------------------

@pytest.mark.parametrize("sigma", ["0.5", "1", "2", "3"])
def test_gauss_coefficients_against_mpmath(reference, sigma):
    ref = reference["gauss_nod"][sigma]
    assert nod_normalizer(float(sigma)) == pytest.approx(float(ref["C"]), rel=1e-14)
    coeffs = _quiet(gauss_nod_coefficients, float(sigma), 6)
    for k, want in enumerate(ref["d"]):
        assert coeffs[k] == pytest.approx(float(want), rel=1e-14)


@pytest.mark.parametrize("sigma", ["0.5", "1", "2", "3"])
def test_lorentz_coefficients_against_mpmath(reference, sigma):
    coeffs = lorentz_nod_coefficients(float(sigma), 40)
    for k, want in reference["lorentz_nod"][sigma].items():
        # absolute quadrature tolerance 1e-12 times the prefactor sinh(sigma pi)/(sigma pi^2)
        assert abs(coeffs[int(k)] - float(want)) <= 1e-10


def test_lorentz_d0_example():
    from rieszshift.quadrature import adaptive_quadrature

    integral = adaptive_quadrature(lambda t: 1 / np.cosh(t), 0.0, math.pi, tol=1e-14)
    assert integral == pytest.approx(2 * math.atan(math.tanh(math.pi / 2)), rel=1e-14)
    want = math.sinh(math.pi) / math.pi**2 * integral
    assert _quiet(lorentz_nod_coefficients, 1.0, 5)[0] == pytest.approx(want, rel=1e-12)


@pytest.mark.parametrize("family", ["gauss", "lorentz"])
@pytest.mark.parametrize("sigma", SIGMAS)
def test_coefficients_even(family, sigma):
    coeffs = _quiet(nod_coefficients, GeneratorSpec(family, sigma), 25)
    assert np.array_equal(coeffs.values, coeffs.values[::-1])
    assert coeffs.values.size == 51
    assert coeffs[-7] == coeffs[7]


@pytest.mark.parametrize("sigma", SIGMAS)
def test_gauss_coefficients_alternate(sigma):
    coeffs = _quiet(gauss_nod_coefficients, sigma, 40)
    assert coeffs[0] > 0
    assert sign_alternation_violations(coeffs) == []


@pytest.mark.parametrize("sigma, first", [(0.5, 2), (1.0, 6), (2.0, 14), (3.0, 28)])
def test_lorentz_alternation_breaks(sigma, first):
    # reported, not assumed: past some k every coefficient is negative
    bad = sign_alternation_violations(lorentz_nod_coefficients(sigma, 40))
    assert bad[0] == first
    assert bad == list(range(first, 41, 2))


@pytest.mark.parametrize("sigma", SIGMAS)
def test_lorentz_tail_asymptotic(sigma):
    coeffs = lorentz_nod_coefficients(sigma, 200)
    a = math.tanh(sigma * math.pi) ** 2 / math.pi**2
    k = 200
    assert coeffs[k] == pytest.approx(-a / k**2, rel=0.05)


def test_coefficients_read_only():
    coeffs = _quiet(lorentz_nod_coefficients, 1.0, 5)
    with pytest.raises(ValueError):
        coeffs.values[0] = 1.0


def test_coefficient_container_checks():
    spec = GeneratorSpec("gauss", 1.0)
    with pytest.raises(DomainError):
        NodCoefficients(spec, 2, np.zeros(4))
    with pytest.raises(DomainError):
        NodCoefficients(spec, 0, np.zeros(1))
    with pytest.raises(IndexError):
        NodCoefficients(spec, 2, np.zeros(5))[3]


# -- nod property -------------------------------------------------------------------

def test_gauss_nod_example():
    coeffs = gauss_nod_coefficients(1.0, 20)
    assert _nod_residual(coeffs, 8) <= 1e-8


@pytest.mark.parametrize("sigma", SIGMAS)
def test_gauss_nod_property_kmax40(sigma):
    assert _nod_residual(_quiet(gauss_nod_coefficients, sigma, 40), 10) <= 1e-6


@pytest.mark.parametrize("sigma", SIGMAS)
def test_lorentz_nod_property_with_tail_bound_kmax(sigma):
    kmax = lorentz_kmax_for(sigma, 5e-7)
    assert _nod_residual(lorentz_nod_coefficients(sigma, kmax), 10) <= 1e-6


@pytest.mark.parametrize("family", ["gauss", "lorentz"])
def test_eval_at_zero(family):
    coeffs = _quiet(nod_coefficients, GeneratorSpec(family, 1.0), 30)
    assert nod_function_eval(coeffs, 0.0) == pytest.approx(1.0, abs=1e-5)


def test_eval_at_three_gauss():
    assert abs(nod_function_eval(gauss_nod_coefficients(1.0, 30), 3.0)) <= 1e-6


@pytest.mark.xfail(strict=True, reason="coefficients decay like k^-2; the kmax=30 "
                   "truncation leaves 2.4e-6 at t=3")
def test_eval_at_three_lorentz():
    assert abs(nod_function_eval(lorentz_nod_coefficients(1.0, 30), 3.0)) <= 1e-6


@pytest.mark.parametrize("family", ["gauss", "lorentz"])
def test_nod_function_even(family):
    coeffs = _quiet(nod_coefficients, GeneratorSpec(family, 1.5), 30)
    t = np.linspace(0.0, 7.3, 40)
    assert np.allclose(nod_function_eval(coeffs, t), nod_function_eval(coeffs, -t), rtol=0, atol=1e-12)


def test_eval_shapes():
    coeffs = lorentz_nod_coefficients(1.0, 10)
    assert isinstance(nod_function_eval(coeffs, 0.25), float)
    assert nod_function_eval(coeffs, np.zeros((2, 3))).shape == (2, 3)
    with pytest.raises(DomainError):
        nod_function_eval(coeffs, math.nan)


def test_fourier_inversion_lorentz(reference):
    spec = GeneratorSpec("lorentz", 2.0)
    oracle = nod_function_fourier(spec, 0.5)
    assert oracle == pytest.approx(float(reference["lorentz_nod_fourier_sigma2_t0.5"]), abs=1e-10)
    assert abs(nod_function_eval(lorentz_nod_coefficients(2.0, 40), 0.5) - oracle) <= 1e-4


def test_fourier_inversion_gauss():
    spec = GeneratorSpec("gauss", 1.0)
    coeffs = gauss_nod_coefficients(1.0, 40)
    for t in (0.3, 1.5, 2.75):
        assert nod_function_eval(coeffs, t) == pytest.approx(nod_function_fourier(spec, t), abs=1e-10)


# -- mask duality -------------------------------------------------------------------

def test_gauss_mask_duality():
    spec = GeneratorSpec("gauss", 1.0)
    coeffs = gauss_nod_coefficients(1.0, 60)
    t = np.linspace(0.0, 2 * math.pi, 50)
    assert np.max(np.abs(coefficient_mask(coeffs, t) * mask_phi(spec, t) - 1.0)) <= 1e-10


def test_lorentz_mask_duality_tail_at_zero():
    # at t = 0 the dropped tail is sum_{|k|>K} d_k ~ -2a/K: first order in 1/K
    spec = GeneratorSpec("lorentz", 1.0)
    a = math.tanh(math.pi) ** 2 / math.pi**2
    for kmax in (50, 200):
        coeffs = lorentz_nod_coefficients(1.0, kmax)
        resid = coefficient_mask(coeffs, 0.0) * mask_phi(spec, 0.0) - 1.0
        assert resid == pytest.approx(mask_phi(spec, 0.0) * 2 * a / kmax, rel=0.05)


def test_lorentz_mask_duality_three_points():
    spec = GeneratorSpec("lorentz", 1.0)
    coeffs = lorentz_nod_coefficients(1.0, 30)
    t = np.array([0.5, 1.5, 2.5])
    resid = np.abs(coefficient_mask(coeffs, t) * mask_phi(spec, t) - 1.0)
    # the dropped tail sum_{k>30} 2 a cos(kt)/k^2 is about 4.5e-4 here
    assert np.max(resid) <= 1e-3


# -- interpolation ------------------------------------------------------------------

def test_interpolate_delta():
    coeffs = lorentz_nod_coefficients(1.0, 40)
    assert interpolate(coeffs, {0: 1.0}, 0.0) == pytest.approx(1.0, abs=2e-6)


@pytest.mark.parametrize("family", ["gauss", "lorentz"])
@pytest.mark.parametrize("kmax, n", [(40, 20), (60, 30)])
def test_interpolate_constant(family, kmax, n):
    coeffs = _quiet(nod_coefficients, GeneratorSpec(family, 1.0), kmax)
    tol = _nod_residual(coeffs, kmax // 2)
    c = 2.5
    samples = {k: c for k in range(-n, n + 1)}
    # node 0 is the only one whose offsets to all samples stay within kmax/2
    assert abs(interpolate(coeffs, samples, 0.0) - c) <= max(tol, 1e-15) * (2 * n + 1) * abs(c)


def test_interpolate_sine_lorentz():
    coeffs = lorentz_nod_coefficients(3.0, 40)
    samples = {n: math.sin(math.pi * n / 6) for n in range(-20, 21)}
    assert abs(interpolate(coeffs, samples, 2.0) - math.sin(math.pi / 3)) <= 1e-4


def test_interpolate_reproduces_interior_samples():
    coeffs = gauss_nod_coefficients(1.0, 40)
    rng = np.random.default_rng(7)
    samples = {n: float(v) for n, v in zip(range(-30, 31), rng.uniform(-1, 1, 61))}
    m = np.arange(-10, 11)
    got = interpolate(coeffs, samples, m.astype(float))
    assert np.max(np.abs(got - [samples[k] for k in m])) <= 1e-5


def test_interpolate_errors():
    coeffs = _quiet(lorentz_nod_coefficients, 1.0, 5)
    with pytest.raises(DomainError):
        interpolate(coeffs, {}, 0.0)
    with pytest.raises(DomainError):
        interpolate(coeffs, {0.5: 1.0}, 0.0)
    with pytest.raises(DomainError):
        interpolate(coeffs, {0: math.inf}, 0.0)


# -- sinc and the distance to it ----------------------------------------------------

def test_sinc_values():
    assert sinc(0.0) == 1.0
    assert sinc(1e-10) == pytest.approx(1.0, abs=1e-18)
    assert sinc(0.5) == pytest.approx(2 / math.pi, rel=1e-15)
    ints = np.array([-7.0, -1.0, 1.0, 2.0, 1e6])
    assert np.all(sinc(ints) == 0.0)
    t = np.linspace(-4.3, 4.3, 27)
    assert np.allclose(sinc(t), np.sinc(t), rtol=1e-14, atol=1e-16)


@pytest.mark.parametrize("sigma", ["0.5", "1", "2", "5"])
def test_sinc_distance_against_mpmath(reference, sigma):
    assert sinc_distance_closed_form(float(sigma)) == pytest.approx(
        float(reference["sinc_distance"][sigma]), rel=1e-12)


@pytest.mark.parametrize("sigma", [0.5, 1.0, 2.0])
def test_sinc_distance_against_quadrature(sigma):
    assert abs(sinc_distance_closed_form(sigma) - sinc_distance_quadrature(sigma)) <= 1e-8


def test_sinc_distance_decreasing():
    vals = [sinc_distance_closed_form(s) for s in (0.5, 1, 2, 5)]
    assert all(a > b > 0 for a, b in zip(vals, vals[1:]))


def test_sinc_distance_large_sigma_rate():
    # leading behaviour (2 log 2 - 1) / (2 pi sigma)
    for sigma in (20.0, 80.0):
        want = (2 * math.log(2) - 1) / (2 * math.pi * sigma)
        assert sinc_distance_closed_form(sigma) == pytest.approx(want, rel=1e-6)


@pytest.mark.xfail(strict=True, reason="the distance decays like 0.0614/sigma; at sigma=5 it is 0.0123")
def test_sinc_distance_sigma5_below_1e3():
    assert sinc_distance_closed_form(5.0) <= 1e-3


# -- errors and warnings ------------------------------------------------------------

@pytest.mark.parametrize("fn", [gauss_nod_coefficients, lorentz_nod_coefficients])
@pytest.mark.parametrize("sigma, kmax", [(0.0, 5), (-1.0, 5), (1.0, 0), (1.0, 2.5)])
def test_bad_arguments(fn, sigma, kmax):
    with pytest.raises(DomainError):
        fn(sigma, kmax)


def test_bad_tolerances():
    with pytest.raises(DomainError):
        gauss_nod_coefficients(1.0, 5, tail_tolerance=0.0)
    with pytest.raises(DomainError):
        lorentz_nod_coefficients(1.0, 5, quadrature_tolerance=-1.0)


def test_gauss_term_budget():
    with pytest.raises(ConvergenceError):
        gauss_nod_coefficients(3.0, 5, max_terms=3)


def test_truncation_warning():
    with pytest.warns(TruncationWarning):
        gauss_nod_coefficients(3.0, 10)
    with pytest.warns(TruncationWarning):
        lorentz_nod_coefficients(1.0, 5)
    with warnings.catch_warnings():
        warnings.simplefilter("error", TruncationWarning)
        gauss_nod_coefficients(1.0, 30)
