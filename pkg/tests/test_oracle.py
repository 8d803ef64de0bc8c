import math

import numpy as np
import pytest

from rieszshift.errors import DomainError
from rieszshift.nodal import gauss_nod_coefficients
from rieszshift.oracle import (
    CONDITIONING_FLOOR,
    GramSummary,
    direct_mask_sum,
    direct_spectral_sum,
    gram_eigen_bounds,
    gram_entry,
    gram_entry_quadrature,
    gram_matrix,
    monotonicity_check,
    nodal_gram_eigen_bounds,
)
from rieszshift.systems import GeneratorSpec, mask_phi, nod_riesz_constants, riesz_constants, spectral_p
from rieszshift.theta import theta3

GRID = np.linspace(0.0, 2.0 * math.pi, 200)


# -- Gram matrices ------------------------------------------------------------------

@pytest.mark.parametrize("key", ["gauss:0.5", "gauss:1", "gauss:2", "lorentz:0.5", "lorentz:1", "lorentz:2"])
def test_gram_entries_against_quadrature(reference, key):
    family, sigma = key.split(":")
    spec = GeneratorSpec(family, float(sigma))
    for d, want in enumerate(reference["gram_entries"][key]):
        closed = gram_entry(spec, d)
        assert abs(closed - float(want)) <= 1e-10
        assert abs(closed - gram_entry_quadrature(spec, d)) <= 1e-10


def test_gram_diagonal_examples():
    assert gram_entry(GeneratorSpec("gauss", 1.0), 0) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    assert gram_entry(GeneratorSpec("lorentz", 1.0), 0) == pytest.approx(math.pi / 2, rel=1e-15)


@pytest.mark.parametrize("family", ["gauss", "lorentz"])
def test_gram_matrix_toeplitz(family):
    g = gram_matrix(GeneratorSpec(family, 0.7), 11)
    assert np.array_equal(g, g.T)
    for d in range(11):
        assert np.all(np.diagonal(g, d) == g[0, d])


def test_gram_examples():
    spec = GeneratorSpec("lorentz", 0.6)
    b = riesz_constants(spec)
    g81, g41 = gram_eigen_bounds(spec, 81), gram_eigen_bounds(spec, 41)
    assert f"{b.lower:.3g}" == "0.164" and b.lower <= g81.lambda_min
    assert g81.lambda_max <= b.upper and f"{b.upper:.4g}" == "3.557"
    assert g81.lambda_min <= g41.lambda_min and g81.lambda_max >= g41.lambda_max
    assert g81.lambda_min == pytest.approx(b.lower, rel=0.05)

    spec = GeneratorSpec("gauss", 0.4)
    b = riesz_constants(spec)
    g = gram_eigen_bounds(spec, 81)
    assert g.lambda_min == pytest.approx(0.415, rel=0.05)
    assert g.lambda_max == pytest.approx(1.009, rel=0.05)
    assert b.lower <= g.lambda_min <= g.lambda_max <= b.upper


@pytest.mark.parametrize("family", ["gauss", "lorentz"])
@pytest.mark.parametrize("sigma", [0.4, 0.6, 1.0])
def test_gram_bracketing_and_nesting(family, sigma):
    spec = GeneratorSpec(family, sigma)
    b = riesz_constants(spec)
    summaries = [gram_eigen_bounds(spec, n) for n in (11, 21, 41, 81)]
    for g in summaries:
        assert g.note is None
        assert b.lower <= g.lambda_min <= g.lambda_max <= b.upper
    lows = [g.lambda_min for g in summaries]
    highs = [g.lambda_max for g in summaries]
    assert all(x >= y for x, y in zip(lows, lows[1:]))
    assert all(x <= y for x, y in zip(highs, highs[1:]))


def test_gram_conditioning_note():
    g = gram_eigen_bounds(GeneratorSpec("gauss", 2.0), 81)
    assert riesz_constants(GeneratorSpec("gauss", 2.0)).lower < CONDITIONING_FLOOR
    assert g.note is not None and "resolution" in g.note
    assert g.lambda_max <= riesz_constants(GeneratorSpec("gauss", 2.0)).upper


@pytest.mark.parametrize("n", [1, 2, 10, 403, 5.0])
def test_gram_bad_size(n):
    with pytest.raises(DomainError):
        gram_eigen_bounds(GeneratorSpec("gauss", 1.0), n)


def test_gram_summary_invariants():
    spec = GeneratorSpec("gauss", 1.0)
    with pytest.raises(DomainError):
        GramSummary(spec, 11, 2.0, 1.0)
    with pytest.raises(DomainError):
        GramSummary(spec, 11, -1e-17, 1.0)


@pytest.mark.parametrize("sigma", [0.5, 1.0])
def test_nodal_gram_bracketed_by_nodal_bounds(sigma):
    spec = GeneratorSpec("gauss", sigma)
    b = nod_riesz_constants(spec)
    g = nodal_gram_eigen_bounds(gauss_nod_coefficients(sigma, 60), 41)
    assert b.lower <= g.lambda_min <= g.lambda_max <= b.upper * (1 + 1e-10)


# -- direct sums --------------------------------------------------------------------

def test_direct_spectral_examples():
    lor = direct_spectral_sum(GeneratorSpec("lorentz", 1.0), math.pi, 40)
    assert abs(lor - math.pi**2 / math.sinh(2 * math.pi)) <= 1e-12
    gau = direct_spectral_sum(GeneratorSpec("gauss", 0.5), 0.0, 10)
    assert abs(gau - 0.5 * math.sqrt(math.pi) * theta3(0.0, math.exp(-1.0))) <= 1e-14
    for spec in (GeneratorSpec("lorentz", 1.0), GeneratorSpec("gauss", 0.3)):
        assert direct_spectral_sum(spec, 0.4, 0) <= direct_spectral_sum(spec, 0.4, 20)


def test_direct_mask_examples():
    lor = direct_mask_sum(GeneratorSpec("lorentz", 1.0), math.pi, 60)
    assert abs(lor - math.pi / math.sinh(math.pi)) <= 1e-10
    gau = direct_mask_sum(GeneratorSpec("gauss", 1.0), 0.0, 20)
    assert abs(gau - theta3(0.0, math.exp(-0.5))) <= 1e-14
    t = np.linspace(0.0, 2 * math.pi, 9)
    for spec in (GeneratorSpec("lorentz", 0.8), GeneratorSpec("gauss", 1.0)):
        # equal up to the rounding of cos(k (t + 2 pi))
        assert np.allclose(direct_mask_sum(spec, t, 30), direct_mask_sum(spec, t + 2 * math.pi, 30),
                           rtol=0, atol=1e-13)


def test_lorentz_mask_example_sigma08():
    spec = GeneratorSpec("lorentz", 0.8)
    assert abs(direct_mask_sum(spec, 1.0, 60) - mask_phi(spec, 1.0)) <= 1e-10


def test_bare_lorentz_truncation_is_first_order():
    # without the tail correction the k^-2 samples leave an O(1/K) error at t = 0
    spec = GeneratorSpec("lorentz", 1.0)
    bare = direct_mask_sum(spec, 0.0, 60, tail_correction=False)
    assert mask_phi(spec, 0.0) - bare == pytest.approx(2.0 / 60, rel=0.05)


@pytest.mark.parametrize("family", ["gauss", "lorentz"])
@pytest.mark.parametrize("sigma", [0.5, 1.0, 2.0])
def test_poisson_identities_on_grid(family, sigma):
    spec = GeneratorSpec(family, sigma)
    closed = mask_phi(spec, GRID)
    assert np.max(np.abs(direct_mask_sum(spec, GRID, 60) - closed)) <= 1e-10
    assert np.max(np.abs(direct_mask_sum(spec, GRID, 40, side="right") - closed)) <= 1e-10
    assert np.max(np.abs(direct_spectral_sum(spec, GRID, 40) - spectral_p(spec, GRID))) <= 1e-10


def test_direct_sum_errors():
    spec = GeneratorSpec("lorentz", 3.0)
    with pytest.raises(DomainError):
        direct_mask_sum(spec, 0.0, 0)
    with pytest.raises(DomainError):
        direct_mask_sum(spec, 0.0, 5)
    with pytest.raises(DomainError):
        direct_mask_sum(spec, 0.0, 10, side="middle")
    with pytest.raises(DomainError):
        direct_spectral_sum(spec, 0.0, -1)


# -- monotonicity ---------------------------------------------------------------------

@pytest.mark.parametrize("q", [0.3, 0.6, 0.9, math.exp(-0.25), math.exp(-0.01), 1e-6])
def test_monotonicity_passes(q):
    report = monotonicity_check(q, 500)
    assert report.passed, report


@pytest.mark.parametrize("q", [0.3, 0.6, math.exp(-0.25)])
def test_raw_samples_strict_for_moderate_nomes(q):
    assert monotonicity_check(q, 500).raw_ties == 0


def test_raw_ties_counted_near_one():
    # P is constant to double precision over most of the grid; the gap form still resolves it
    report = monotonicity_check(math.exp(-0.01), 500)
    assert report.raw_ties > 0 and report.passed


@pytest.mark.parametrize("q, grid", [(0.0, 500), (1.0, 500), (0.5, 9)])
def test_monotonicity_bad_args(q, grid):
    with pytest.raises(DomainError):
        monotonicity_check(q, grid)
