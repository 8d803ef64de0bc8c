import math

import numpy as np
import pytest

from rieszshift.errors import ConvergenceError, DomainError
from rieszshift.quadrature import adaptive_quadrature, gauss_kronrod_15


def test_constant_is_exact():
    assert adaptive_quadrature(lambda t: np.ones_like(t), 0.0, 1.0) == 1.0


def test_sech_integral_matches_reference(reference):
    got = adaptive_quadrature(lambda t: 1.0 / np.cosh(t), 0.0, math.pi)
    assert abs(got - float(reference["adaptive_sech_integral"])) < 1e-14
    # closed form of the same integral
    assert abs(got - 2.0 * math.atan(math.tanh(math.pi / 2))) < 1e-14


def test_odd_integrand_vanishes():
    assert abs(adaptive_quadrature(lambda t: np.sin(3 * t) * t**2, -math.pi, math.pi, tol=1e-12)) < 1e-12


def test_kronrod_rule_integrates_degree_22_polynomials():
    value, _ = gauss_kronrod_15(lambda t: t**22, -1.0, 1.0)
    assert value == pytest.approx(2.0 / 23.0, rel=1e-14)


def test_budget_exhaustion_carries_estimate():
    with pytest.raises(ConvergenceError) as info:
        adaptive_quadrature(lambda t: np.sign(t - 0.3), 0.0, 1.0, tol=1e-15, max_panels=5)
    assert info.value.estimate == pytest.approx(0.4, abs=0.05)


@pytest.mark.parametrize("a, b", [(1.0, 0.0), (0.0, math.inf), (math.nan, 1.0)])
def test_bad_interval(a, b):
    with pytest.raises(DomainError):
        adaptive_quadrature(np.cos, a, b)
