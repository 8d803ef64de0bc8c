"""Closed forms for integer-shift systems of Gaussian and Cauchy-Lorentz generators.

Fourier transforms use the unitary convention
``fhat(w) = (2 pi)**-1/2 * int f(t) exp(-i w t) dt``.  All 2pi-periodic
functions (masks, spectral functions) accept any real frequency and reduce it
into [0, 2pi) before applying formulas that are only valid on one period.
"""

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from .errors import DomainError
from .theta import DEFAULT_POLICY, log_abs_theta, theta3, theta_ratio

__all__ = [
    "Family",
    "GeneratorSpec",
    "RieszBounds",
    "generator_value",
    "fourier_image",
    "mask_phi",
    "spectral_p",
    "riesz_constants",
    "log_riesz_constants",
    "nod_spectral_p",
    "nod_riesz_constants",
    "reduce_period",
]

SQRT_PI = math.sqrt(math.pi)
_LOG_FLOAT_MAX = math.log(np.finfo(float).max)


class Family(str, Enum):
    GAUSS = "gauss"
    LORENTZ = "lorentz"


@dataclass(frozen=True)
class GeneratorSpec:
    """Generator family and width ``sigma > 0``."""

    family: Family
    sigma: float

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if not (math.isfinite(self.sigma) and self.sigma > 0):
            raise DomainError(f"sigma must be positive and finite, got {self.sigma!r}")
        object.__setattr__(self, "sigma", float(self.sigma))

    @property
    def log_nome(self):
        """-log q = 1/(4 sigma^2) for the Gaussian spectral nome."""
        return 0.25 / self.sigma**2

    @property
    def nome(self):
        """q = exp(-1/(4 sigma^2)), the theta nome of the Gaussian spectral function."""
        return math.exp(-self.log_nome)


@dataclass(frozen=True)
class RieszBounds:
    lower: float
    upper: float
    ratio: float

    def __post_init__(self):
        if not (0.0 <= self.lower <= self.upper):
            raise DomainError(f"invalid Riesz bounds ({self.lower}, {self.upper})")


def _scalar_or_array(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def _out(values, scalar):
    return float(values) if scalar else values


def reduce_period(w):
    """Reduce ``w`` into [0, 2 pi)."""
    return np.mod(w, 2.0 * math.pi)


def generator_value(spec, t):
    """phi(t): exp(-t^2/(2 sigma^2)) or sigma^2/(sigma^2 + t^2)."""
    t, scalar = _scalar_or_array(t)
    s = spec.sigma
    if spec.family is Family.GAUSS:
        out = np.exp(-(t * t) / (2.0 * s * s))
    else:
        out = s * s / (s * s + t * t)
    return _out(out, scalar)


def fourier_image(spec, omega):
    """Unitary Fourier transform of the generator.

    Gauss: ``sigma exp(-sigma^2 w^2 / 2)``; Lorentz: ``sigma sqrt(pi/2) exp(-sigma |w|)``.
    """
    w, scalar = _scalar_or_array(omega)
    s = spec.sigma
    if spec.family is Family.GAUSS:
        out = s * np.exp(-0.5 * (s * w) ** 2)
    else:
        out = s * math.sqrt(0.5 * math.pi) * np.exp(-s * np.abs(w))
    return _out(out, scalar)


def _cosh_ratio(a, x, b):
    """cosh(a x) / sinh(a b) for |x| <= b, without overflow."""
    ax = np.abs(a * x)
    ab = a * b
    return (np.exp(ax - ab) + np.exp(-ax - ab)) / (-np.expm1(-2.0 * ab))


def mask_phi(spec, t, policy=DEFAULT_POLICY):
    """Mask Phi(t) = sum_k phi(k) exp(-ikt) in closed form.

    Lorentz: ``sigma pi cosh(sigma (t - pi)) / sinh(sigma pi)`` on [0, 2 pi];
    Gauss: ``theta3(t/2, exp(-1/(2 sigma^2)))``.
    """
    t, scalar = _scalar_or_array(t)
    t = reduce_period(t)
    s = spec.sigma
    if spec.family is Family.GAUSS:
        out = theta3(t / 2.0, math.exp(-0.5 / s**2), policy, lam=0.5 / s**2)
    else:
        out = s * math.pi * _cosh_ratio(s, t - math.pi, math.pi)
    return _out(np.asarray(out), scalar)


def spectral_p(spec, omega, policy=DEFAULT_POLICY):
    """P(w) = 2 pi sum_k |phihat(w + 2 pi k)|^2 in closed form.

    Lorentz: ``sigma^2 pi^2 cosh(2 sigma (w - pi)) / sinh(2 sigma pi)``;
    Gauss: ``sigma sqrt(pi) theta3(w/2, exp(-1/(4 sigma^2)))``.
    """
    w, scalar = _scalar_or_array(omega)
    w = reduce_period(w)
    s = spec.sigma
    if spec.family is Family.GAUSS:
        out = s * SQRT_PI * theta3(w / 2.0, spec.nome, policy, lam=spec.log_nome)
    else:
        out = (s * math.pi) ** 2 * _cosh_ratio(2.0 * s, w - math.pi, math.pi)
    return _out(np.asarray(out), scalar)


def log_riesz_constants(spec, policy=DEFAULT_POLICY):
    """Natural logs (log A, log B) of the generator-system Riesz constants.

    Finite even when A itself underflows (Gauss, sigma above about 8).
    """
    s = spec.sigma
    if spec.family is Family.GAUSS:
        base = math.log(s * SQRT_PI)
        # theta3(pi/2, q) == theta4(0, q); t = 0 avoids rounding pi/2
        log_a = base + log_abs_theta(4, 0.0, spec.nome, policy, lam=spec.log_nome)
        log_b = base + log_abs_theta(3, 0.0, spec.nome, policy, lam=spec.log_nome)
    else:
        x = 2.0 * s * math.pi
        # log sinh(x) = x + log1p(-exp(-2x)) - log 2
        log_sinh = x + math.log1p(-math.exp(-2.0 * x)) - math.log(2.0)
        log_a = 2.0 * math.log(s * math.pi) - log_sinh
        log_b = log_a + x + math.log1p(math.exp(-2.0 * x)) - math.log(2.0)
    return log_a, log_b


def riesz_constants(spec, policy=DEFAULT_POLICY):
    """Riesz bounds (A, B) of the integer shifts phi(t - k).

    Gauss: ``A = sigma sqrt(pi) theta3(pi/2, q)``, ``B = sigma sqrt(pi) theta3(0, q)``
    with ``q = exp(-1/(4 sigma^2))``.  Lorentz: ``A = sigma^2 pi^2 / sinh(2 sigma pi)``,
    ``B = A cosh(2 sigma pi)``.  The ratio is formed from logarithms, so it
    stays finite when A is as small as 1e-105 (Gauss, sigma = 5).
    """
    s = spec.sigma
    log_a, log_b = log_riesz_constants(spec, policy)
    if spec.family is Family.LORENTZ:
        x = 2.0 * s * math.pi
        lower = (s * math.pi) ** 2 * 2.0 * math.exp(-x) / -math.expm1(-2.0 * x)
        upper = (s * math.pi) ** 2 / math.tanh(x)
        ratio = upper / lower
    else:
        lower = math.exp(log_a)
        upper = math.exp(log_b)
        gap = log_b - log_a
        ratio = math.exp(gap) if gap < _LOG_FLOAT_MAX else math.inf
    return RieszBounds(lower, upper, ratio)


def nod_spectral_p(spec, omega, policy=DEFAULT_POLICY):
    """Spectral function of the nod-function system, P(w) / Phi(w)^2.

    Lorentz: ``tanh(sigma pi)/2 * (2 - sech^2(sigma (w - pi)))``, an overflow-free
    rewrite of ``sinh^2(sigma pi)/sinh(2 sigma pi) * cosh(2 sigma x)/cosh^2(sigma x)``.
    Gauss: ``sigma sqrt(pi) theta3(w/2, q) / theta3(w/2, q^2)^2``.
    """
    w, scalar = _scalar_or_array(omega)
    w = reduce_period(w)
    s = spec.sigma
    if spec.family is Family.GAUSS:
        out = s * SQRT_PI * theta_ratio(3, w / 2.0, spec.nome, policy, lam=spec.log_nome)
    else:
        e = np.exp(-np.abs(s * (w - math.pi)))
        sech = 2.0 * e / (1.0 + e * e)
        out = 0.5 * math.tanh(s * math.pi) * (2.0 - sech * sech)
    return _out(np.asarray(out), scalar)


def nod_riesz_constants(spec, policy=DEFAULT_POLICY):
    """Riesz bounds of the shifted nod functions.

    The nodal spectral function attains its minimum at w = pi and its maximum
    at w = 0 for both families (for the Gaussian this is the monotonicity of
    ``theta3(t,q)/theta3(t,q^2)^2`` on (0, pi/2)).
    """
    s = spec.sigma
    if spec.family is Family.GAUSS:
        q, lam = spec.nome, spec.log_nome
        lower = s * SQRT_PI * theta_ratio(4, 0.0, q, policy, lam=lam)
        upper = s * SQRT_PI * theta_ratio(3, 0.0, q, policy, lam=lam)
    else:
        lower = 0.5 * math.tanh(s * math.pi)
        sech = 1.0 / math.cosh(s * math.pi)
        upper = lower * (2.0 - sech * sech)
    return RieszBounds(lower, upper, upper / lower)
