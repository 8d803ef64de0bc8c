"""Nod (cardinal) functions of the Gaussian and Cauchy-Lorentz shift systems.

A nod function ``phi~(t) = sum_k d_k phi(t - k)`` satisfies ``phi~(m) = delta_0m``
at every integer ``m``.  Coefficients are truncated to ``|k| <= kmax``.

Gaussian coefficients grow like ``1 / C(sigma)`` (about 1e16 at sigma = 3)
while the nod function stays O(1), so the coefficient tails and the nod sum
are carried in double-double arithmetic.  Lorentz coefficients are O(1) and
plain double precision suffices.
"""

from dataclasses import dataclass
import math
from numbers import Integral
import warnings

import numpy as np

from . import _dd as dd
from .errors import ConditioningError, ConvergenceError, DomainError
from .quadrature import adaptive_quadrature
from .systems import Family, GeneratorSpec, generator_value

__all__ = [
    "NodCoefficients",
    "TruncationWarning",
    "nod_normalizer",
    "gauss_nod_coefficients",
    "lorentz_nod_coefficients",
    "nod_coefficients",
    "sign_alternation_violations",
    "nod_function_eval",
    "coefficient_mask",
    "interpolate",
    "sinc",
    "sinc_distance_closed_form",
]

# runtime truncation check: |d_kmax| must fall below this fraction of |d_0|
DECAY_CHECK = 1e-3


class TruncationWarning(RuntimeWarning):
    """The coefficient sequence has not decayed enough at ``kmax``."""


@dataclass(frozen=True)
class NodCoefficients:
    """Truncated nod coefficients ``d_k`` for ``k = -kmax .. kmax``.

    Attributes
    ----------
    spec : GeneratorSpec
    kmax : int
    values : ndarray
        ``2*kmax + 1`` coefficients, index ``i`` holds ``d_{i - kmax}``.
    quadrature_tolerance : float or None
        Lorentz only.
    tail_tolerance : float or None
        Gauss only.
    values_lo : ndarray or None
        Low-order parts when ``values`` came from double-double arithmetic.
    """

    spec: GeneratorSpec
    kmax: int
    values: np.ndarray
    quadrature_tolerance: float = None
    tail_tolerance: float = None
    values_lo: np.ndarray = None

    def __post_init__(self):
        if not (isinstance(self.kmax, Integral) and self.kmax >= 1):
            raise DomainError(f"kmax must be an integer >= 1, got {self.kmax!r}")
        for name in ("values", "values_lo"):
            arr = getattr(self, name)
            if arr is None:
                continue
            arr = np.array(arr, dtype=float)
            if arr.shape != (2 * self.kmax + 1,):
                raise DomainError(f"{name} must have 2*kmax+1 = {2 * self.kmax + 1} entries")
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    @property
    def indices(self):
        return np.arange(-self.kmax, self.kmax + 1)

    def __getitem__(self, k):
        if abs(k) > self.kmax:
            raise IndexError(f"k={k} outside [-{self.kmax}, {self.kmax}]")
        return float(self.values[k + self.kmax])

    def _dd_values(self):
        lo = self.values_lo if self.values_lo is not None else np.zeros_like(self.values)
        return self.values, lo


def _check_args(sigma, kmax):
    spec_family_free = GeneratorSpec(Family.GAUSS, sigma)  # validates sigma
    if not (isinstance(kmax, Integral) and kmax >= 1):
        raise DomainError(f"kmax must be an integer >= 1, got {kmax!r}")
    return spec_family_free.sigma


def _warn_if_slow_decay(values, kmax, label):
    d0, dk = abs(values[kmax]), abs(values[-1])
    if dk >= DECAY_CHECK * d0:
        warnings.warn(
            f"{label}: |d_kmax|/|d_0| = {dk / d0:.2e} at kmax={kmax}; "
            "check the nod residual before trusting the truncation",
            TruncationWarning,
            stacklevel=3,
        )


def nod_normalizer(sigma, terms=400):
    """C(sigma) = sum_r (4r + 1) exp(-(2r + 1/2)^2 / (2 sigma^2)) over all integers r.

    The direct sum cancels catastrophically once sigma exceeds about 1 (at
    sigma = 3 it even comes out negative), so for sigma > 1 the Poisson dual

        C = 2 pi sqrt(2 pi) sigma^3 sum_{m>=0} (-1)^m (2m+1) exp(-pi^2 sigma^2 (2m+1)^2 / 2)

    is used instead; it converges fast exactly where the direct form does not.
    """
    s2 = 2.0 * sigma * sigma
    if sigma <= 1.0:
        r = np.arange(-terms, terms + 1, dtype=float)
        c = math.fsum((4.0 * r + 1.0) * np.exp(-((2.0 * r + 0.5) ** 2) / s2))
    else:
        m = np.arange(0, 8, dtype=float)
        series = math.fsum((-1.0) ** m * (2.0 * m + 1.0)
                           * np.exp(-0.5 * (math.pi * sigma * (2.0 * m + 1.0)) ** 2))
        c = 2.0 * math.pi * math.sqrt(2.0 * math.pi) * sigma**3 * series
    if not abs(c) >= 1e-300:
        raise ConditioningError(
            f"C(sigma) = {c:.3e} at sigma={sigma}; coefficients are not representable"
        )
    return c


def _dd_two_sigma_sq(sigma):
    # 2 sigma^2 as a double-double, so generator exponents are formed exactly
    return dd.ldexp(dd.two_prod(np.float64(sigma), np.float64(sigma)), 1)


def gauss_nod_coefficients(sigma, kmax, tail_tolerance=1e-32, max_terms=10000):
    """Gaussian nod coefficients.

    ``d_k = exp(k^2/(2 sigma^2)) / C(sigma) * sum_{r >= |k|} (-1)^r exp(-(r + 1/2)^2 / (2 sigma^2))``

    The prefactor is folded into each tail term, which keeps every exponent
    non-positive.  Tail sums are truncated once the next term falls below
    ``tail_tolerance`` times the partial sum.

    Parameters
    ----------
    sigma : float
    kmax : int
    tail_tolerance : float
        Relative truncation level of the alternating tail; the default sits
        at double-double resolution.
    max_terms : int
        Budget for each tail series.

    Returns
    -------
    NodCoefficients
    """
    sigma = _check_args(sigma, kmax)
    if not tail_tolerance > 0:
        raise DomainError("tail_tolerance must be positive")
    s2 = 2.0 * sigma * sigma
    s2_dd = _dd_two_sigma_sq(sigma)
    c = nod_normalizer(sigma)

    # term j of the tail for index k has exponent -(j + 1/2)(2k + j + 1/2)/s2;
    # the first term (j=0) bounds the partial sum from below by about half of it
    need = s2 * (math.log(1.0 / tail_tolerance) + math.log(4.0))
    n_terms = int(math.ceil(math.sqrt(need))) + 2
    if n_terms > max_terms:
        raise ConvergenceError(
            f"tail series needs {n_terms} terms (> max_terms={max_terms})"
        )

    k = np.arange(0, kmax + 1, dtype=float)[:, None]
    j = np.arange(n_terms, dtype=float)[None, :]
    # (j + 1/2)(2k + j + 1/2) is exact in float64 for these magnitudes
    num = -(j + 0.5) * (2.0 * k + j + 0.5)
    expo = dd.div(dd.asdd(num), (np.broadcast_to(s2_dd[0], num.shape),
                                 np.broadcast_to(s2_dd[1], num.shape)))
    terms = dd.exp(expo)
    sign = np.where((k + j) % 2 == 0, 1.0, -1.0)
    terms = (terms[0] * sign, terms[1] * sign)
    # smallest first
    tail = dd.sum_axis((terms[0][:, ::-1], terms[1][:, ::-1]), axis=1)

    last = np.abs(terms[0][:, -1])
    if np.any(last > tail_tolerance * np.abs(tail[0])):
        raise ConvergenceError("Gaussian tail series did not reach tail_tolerance")

    half = dd.div(tail, dd.asdd(np.full(kmax + 1, c)))
    hi = np.concatenate([half[0][:0:-1], half[0]])
    lo = np.concatenate([half[1][:0:-1], half[1]])
    _warn_if_slow_decay(hi, kmax, f"gauss sigma={sigma}")
    return NodCoefficients(GeneratorSpec(Family.GAUSS, sigma), int(kmax), hi,
                           tail_tolerance=float(tail_tolerance), values_lo=lo)


def lorentz_nod_coefficients(sigma, kmax, quadrature_tolerance=1e-12):
    """Lorentz nod coefficients by adaptive quadrature.

    ``d_k = (-1)^k sinh(sigma pi) / (sigma pi^2) * int_0^pi cos(k t) / cosh(sigma t) dt``,
    each integral to absolute ``quadrature_tolerance``.
    """
    sigma = _check_args(sigma, kmax)
    if not quadrature_tolerance > 0:
        raise DomainError("quadrature_tolerance must be positive")
    pref = math.sinh(sigma * math.pi) / (sigma * math.pi**2)
    half = np.empty(kmax + 1)
    for k in range(kmax + 1):
        integral = adaptive_quadrature(
            lambda t, k=k: np.cos(k * t) / np.cosh(sigma * t),
            0.0, math.pi, tol=quadrature_tolerance,
        )
        half[k] = (-1.0) ** k * pref * integral
    values = np.concatenate([half[:0:-1], half])
    _warn_if_slow_decay(values, kmax, f"lorentz sigma={sigma}")
    return NodCoefficients(GeneratorSpec(Family.LORENTZ, sigma), int(kmax), values,
                           quadrature_tolerance=float(quadrature_tolerance))


def sign_alternation_violations(coeffs):
    """Indices ``k >= 1`` where ``d_k`` fails to have the sign ``(-1)^k sign(d_0)``.

    The Gaussian coefficients alternate for every ``k``.  The Lorentz ones
    stop alternating once ``k`` is large, because their tail behaves like
    ``-tanh(sigma pi)^2 / (pi k)^2``.
    """
    half = coeffs.values[coeffs.kmax:]
    k = np.arange(half.size)
    expected = np.where(k % 2 == 0, 1.0, -1.0) * np.sign(half[0])
    return [int(i) for i in np.flatnonzero(np.sign(half) != expected) if i >= 1]


def nod_coefficients(spec, kmax, tol=None):
    """Dispatch on ``spec.family``; ``tol`` overrides the family's default tolerance."""
    if spec.family is Family.GAUSS:
        return gauss_nod_coefficients(spec.sigma, kmax, *(() if tol is None else (tol,)))
    return lorentz_nod_coefficients(spec.sigma, kmax, *(() if tol is None else (tol,)))


def _gauss_nod_dd(coeffs, t):
    s2 = _dd_two_sigma_sq(coeffs.spec.sigma)
    d_hi, d_lo = coeffs._dd_values()
    k = coeffs.indices.astype(float)
    diff = dd.two_sum(t[:, None], -k[None, :])
    sq = dd.mul(diff, diff)
    expo = dd.neg(dd.div(sq, (np.full(sq[0].shape, s2[0]), np.full(sq[0].shape, s2[1]))))
    prod = dd.mul(dd.exp(expo), (np.broadcast_to(d_hi, sq[0].shape),
                                 np.broadcast_to(d_lo, sq[0].shape)))
    return dd.to_float(dd.sum_axis(prod, axis=1))


def nod_function_eval(coeffs, t):
    """Truncated nod function ``sum_{|k| <= kmax} d_k phi(t - k)``.

    Reproduces ``delta_0m`` at integers ``|m| <= kmax/2`` up to the truncation
    residual.  Accepts a scalar or an array.
    """
    arr = np.asarray(t, dtype=float)
    scalar = arr.ndim == 0
    flat = np.atleast_1d(arr).ravel()
    if not np.all(np.isfinite(flat)):
        raise DomainError("t must be finite")
    if coeffs.spec.family is Family.GAUSS:
        out = _gauss_nod_dd(coeffs, flat)
    else:
        phi = generator_value(coeffs.spec, flat[:, None] - coeffs.indices[None, :])
        out = phi @ coeffs.values
    out = out.reshape(arr.shape)
    return float(out) if scalar else out


def coefficient_mask(coeffs, t):
    """Mask ``D(t) = sum_k d_k exp(-ikt)``, real by the symmetry of the coefficients.

    Evaluated in double precision, so it is only meaningful while the
    coefficients stay moderate (Gaussian sigma up to about 1.5).
    """
    arr = np.asarray(t, dtype=float)
    k = np.arange(1, coeffs.kmax + 1)
    pos = coeffs.values[coeffs.kmax + 1:]
    out = coeffs.values[coeffs.kmax] + 2.0 * np.cos(np.multiply.outer(arr, k)) @ pos
    return float(out) if arr.ndim == 0 else out


def interpolate(coeffs, samples, t):
    """Cardinal interpolant ``sum_n f(n) phi~(t - n)``.

    Parameters
    ----------
    coeffs : NodCoefficients
    samples : mapping
        Integer node ``n`` to the finite sample ``f(n)``.
    t : float or array_like

    Notes
    -----
    Points within ``kmax/2`` of the edge of the sample window are still
    evaluated, but the missing samples beyond the window make the result
    a truncation of the infinite-grid interpolant there.
    """
    if not samples:
        raise DomainError("samples must not be empty")
    nodes, values = [], []
    for n, f in sorted(samples.items()):
        if not (isinstance(n, Integral) or (isinstance(n, float) and n.is_integer())):
            raise DomainError(f"sample node {n!r} is not an integer")
        if not math.isfinite(f):
            raise DomainError(f"sample f({n}) = {f!r} is not finite")
        nodes.append(int(n))
        values.append(float(f))
    arr = np.asarray(t, dtype=float)
    flat = np.atleast_1d(arr).ravel()
    nodes = np.array(nodes, dtype=float)
    basis = nod_function_eval(coeffs, (flat[:, None] - nodes[None, :]).ravel())
    out = basis.reshape(flat.size, nodes.size) @ np.array(values)
    out = out.reshape(arr.shape)
    return float(out) if arr.ndim == 0 else out


def sinc(t):
    """Normalized sinc ``sin(pi t) / (pi t)`` with exact zeros at nonzero integers."""
    arr = np.asarray(t, dtype=float)
    n = np.round(arr)
    r = arr - n
    # sin(pi t) = (-1)^n sin(pi r), |r| <= 1/2, so integers give exactly 0
    sign = np.where(np.mod(n, 2.0) == 0.0, 1.0, -1.0)
    small = np.abs(arr) < 1e-8
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(small, 1.0 - (math.pi * arr) ** 2 / 6.0,
                       sign * np.sin(math.pi * r) / (math.pi * arr))
    return float(out) if arr.ndim == 0 else out


def sinc_distance_closed_form(sigma):
    """Squared L2 distance between the Lorentz nod function and the sinc.

    Equal to ``I1 - 2 I2 + 1`` with
    ``I1 = (1 - tanh(sigma pi)/(2 sigma pi)) tanh(sigma pi)`` and
    ``I2 = (1 - exp(-2 sigma pi)) (1 + log((1 + exp(-2 sigma pi))/2) / (2 sigma pi))``.
    """
    sigma = GeneratorSpec(Family.LORENTZ, sigma).sigma
    x = sigma * math.pi
    th = math.tanh(x)
    e = math.exp(-2.0 * x)
    i1 = (1.0 - th / (2.0 * x)) * th
    i2 = (1.0 - e) * (1.0 + math.log1p(e) / (2.0 * x) - math.log(2.0) / (2.0 * x))
    return i1 - 2.0 * i2 + 1.0
