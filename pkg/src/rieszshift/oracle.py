"""Brute-force counterparts of the closed forms.

Nothing here calls the closed-form routines it is meant to check: Gram
matrices come from inner products, masks and spectral functions from their
defining series, and Fourier-domain quantities from quadrature.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math

import numpy as np
from scipy import integrate
from scipy.linalg import toeplitz

from .errors import DomainError
from .quadrature import adaptive_quadrature
from .systems import Family, GeneratorSpec, fourier_image, generator_value, mask_phi, riesz_constants
from .theta import DEFAULT_POLICY, p_ratio, theta23_ratio_derivative, theta23_ratio_gaps

__all__ = [
    "GramSummary",
    "MonotonicityReport",
    "adaptive_quadrature",
    "gram_entry",
    "gram_entry_quadrature",
    "gram_matrix",
    "gram_eigen_bounds",
    "nodal_gram_eigen_bounds",
    "direct_spectral_sum",
    "direct_mask_sum",
    "fourier_image_quadrature",
    "nod_function_fourier",
    "sinc_distance_quadrature",
    "monotonicity_check",
]

# below this lower Riesz constant the smallest Gram eigenvalue is not
# resolved by a dense double-precision solver
CONDITIONING_FLOOR = 1e-10


@dataclass(frozen=True)
class GramSummary:
    """Extreme eigenvalues of the ``n x n`` Gram section.

    ``note`` explains why ``lambda_min`` is unreliable when the lower Riesz
    constant sits below solver resolution; it is None otherwise.
    """

    spec: object
    n: int
    lambda_min: float
    lambda_max: float
    note: str = None

    def __post_init__(self):
        if self.lambda_min > self.lambda_max:
            raise DomainError("lambda_min exceeds lambda_max")
        if self.lambda_min <= 0 and self.note is None:
            raise DomainError("non-positive lambda_min without a conditioning note")

    @property
    def condition_number(self):
        return self.lambda_max / self.lambda_min if self.lambda_min > 0 else math.inf


def _check_n(n, upper=None):
    if not (isinstance(n, (int, np.integer)) and n >= 3 and n % 2 == 1):
        raise DomainError(f"n must be an odd integer >= 3, got {n!r}")
    if upper is not None and n > upper:
        raise DomainError(f"n must be at most {upper}, got {n}")


def gram_entry(spec, d):
    """Inner product of phi(. - j) and phi(. - k) with ``d = j - k``.

    Gauss: ``sigma sqrt(pi) exp(-d^2/(4 sigma^2))``; Lorentz: ``2 pi sigma^3/(4 sigma^2 + d^2)``.
    """
    d = np.asarray(d, dtype=float)
    s = spec.sigma
    if spec.family is Family.GAUSS:
        return s * math.sqrt(math.pi) * np.exp(-(d * d) / (4.0 * s * s))
    return 2.0 * math.pi * s**3 / (4.0 * s * s + d * d)


def gram_entry_quadrature(spec, d, tol=1e-13):
    """Same inner product by quadrature of ``int phi(t) phi(t - d) dt``.

    Centered at ``d/2`` the integrand is even; ``u = sigma tan(theta)`` maps
    the half-line onto [0, pi/2).
    """
    s = spec.sigma

    def integrand(theta):
        u = s * np.tan(theta)
        jac = s / np.cos(theta) ** 2
        return (generator_value(spec, u + 0.5 * d) * generator_value(spec, u - 0.5 * d)) * jac

    return 2.0 * adaptive_quadrature(integrand, 0.0, 0.5 * math.pi, tol=0.5 * tol)


def gram_matrix(spec, n):
    """Toeplitz Gram matrix of the shifts ``k = -(n-1)/2 .. (n-1)/2``."""
    _check_n(n)
    return toeplitz(gram_entry(spec, np.arange(n)))


def gram_eigen_bounds(spec, n):
    """Extreme eigenvalues of the Gram section (dense symmetric solver).

    Parameters
    ----------
    spec : GeneratorSpec
    n : int
        Odd, between 3 and 401.

    Returns
    -------
    GramSummary
        With a conditioning note when the lower Riesz constant is below
        ``CONDITIONING_FLOOR``.
    """
    _check_n(n, upper=401)
    eig = np.linalg.eigvalsh(gram_matrix(spec, n))
    note = None
    lower = riesz_constants(spec).lower
    if lower < CONDITIONING_FLOOR:
        note = (f"lower Riesz constant {lower:.3e} is below solver resolution "
                f"(~{np.finfo(float).eps * eig[-1]:.1e}); lambda_min is not resolved")
    return GramSummary(spec, int(n), float(eig[0]), float(eig[-1]), note)


def nodal_gram_eigen_bounds(coeffs, n):
    """Extreme eigenvalues of the Gram section of the shifted nod functions.

    ``<phi~(. - j), phi~(. - k)> = sum_m r(m) g(j - k - m)`` where ``r`` is the
    autocorrelation of the coefficients and ``g`` the generator Gram sequence,
    so only coefficients and inner products enter.  Coefficients must be
    moderate (Gaussian sigma up to about 1) for this to be accurate.
    """
    _check_n(n, upper=401)
    r = np.convolve(coeffs.values, coeffs.values[::-1])
    m = np.arange(-2 * coeffs.kmax, 2 * coeffs.kmax + 1)
    lags = np.arange(n)
    first = gram_entry(coeffs.spec, lags[:, None] - m[None, :]) @ r
    eig = np.linalg.eigvalsh(toeplitz(first))
    return GramSummary(coeffs.spec, int(n), float(eig[0]), float(eig[-1]))


def direct_spectral_sum(spec, omega, kmax):
    """``2 pi sum_{|k| <= kmax} |phihat(omega + 2 pi k)|^2``."""
    if not (isinstance(kmax, (int, np.integer)) and kmax >= 0):
        raise DomainError(f"kmax must be a non-negative integer, got {kmax!r}")
    w = np.asarray(omega, dtype=float)
    k = np.arange(-kmax, kmax + 1)
    vals = fourier_image(spec, np.add.outer(w, 2.0 * math.pi * k)) ** 2
    # smallest terms first
    order = np.argsort(np.abs(k))[::-1]
    out = 2.0 * math.pi * np.sum(vals[..., order], axis=-1)
    return float(out) if w.ndim == 0 else out


# Kummer orders handled in closed form; higher orders would amplify rounding by sigma^(2m)
_KUMMER_ORDERS = 2
_REMAINDER_TERMS = 2000


@lru_cache(maxsize=None)
def _bernoulli_poly(n):
    """Exact coefficients of B_n(x), highest degree first (Akiyama-Tanigawa numbers).

    scipy.special.bernoulli is off by ~1e-12 relative at n=4, too coarse here.
    """
    numbers = []
    row = []
    for m in range(n + 1):
        row.append(Fraction(1, m + 1))
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        numbers.append(row[0])
    numbers[1] = -numbers[1]  # B_1 = -1/2 convention
    return tuple(float(math.comb(n, j) * numbers[j]) for j in range(n + 1))


def _cos_zeta(t, order):
    """``sum_{k>=1} cos(k t) / k^order`` for even ``order``, via Bernoulli polynomials."""
    n = order
    x = np.mod(t, 2.0 * math.pi) / (2.0 * math.pi)
    poly = np.polyval(_bernoulli_poly(n), x)
    m = n // 2
    return (-1) ** (m - 1) * (2.0 * math.pi) ** n * poly / (2.0 * math.factorial(n))


def _lorentz_left(sigma, t, kmax, tail_correction):
    k = np.arange(1, kmax + 1, dtype=float)
    kt = np.multiply.outer(t, k)
    body = 1.0 + 2.0 * np.cos(kt)[..., ::-1] @ (sigma**2 / (sigma**2 + k**2))[::-1]
    if not tail_correction:
        return body
    # phi(k) = sum_{m<=M} (-1)^(m-1) (s/k)^(2m) + (-1)^M (s/k)^(2M) phi(k), exact for k != 0;
    # the power sums have closed forms; the remainder decays like k^-(2M+2)
    tail = np.zeros_like(body)
    for m in range(1, _KUMMER_ORDERS + 1):
        head = np.cos(kt)[..., ::-1] @ (1.0 / k ** (2 * m))[::-1]
        tail += (-1) ** (m - 1) * sigma ** (2 * m) * (_cos_zeta(t, 2 * m) - head)
    extra = np.arange(kmax + 1, max(4 * kmax, _REMAINDER_TERMS) + 1, dtype=float)
    rem = (sigma / extra) ** (2 * _KUMMER_ORDERS) * sigma**2 / (sigma**2 + extra**2)
    tail += (-1) ** _KUMMER_ORDERS * (np.cos(np.multiply.outer(t, extra))[..., ::-1] @ rem[::-1])
    return body + 2.0 * tail


def direct_mask_sum(spec, t, kmax, side="left", tail_correction=True):
    """Both sides of the Poisson summation identity for the mask.

    ``side="left"``: ``sum_{|k| <= kmax} phi(k) exp(-ikt)`` (real by evenness).
    ``side="right"``: ``sqrt(2 pi) sum_{|k| <= kmax} phihat(t + 2 pi k)``.

    The Lorentz samples ``phi(k)`` decay only like ``k^-2``, so by default the
    left side adds the exact tail of the leading ``(sigma/k)^2`` and
    ``(sigma/k)^4`` terms (Kummer's transformation) and sums the remaining
    ``O(k^-6)`` tail directly out to ``max(4 kmax, 2000)``.  Pass ``tail_correction=False`` for the bare truncation.
    """
    if not (isinstance(kmax, (int, np.integer)) and kmax >= 1):
        raise DomainError(f"kmax must be an integer >= 1, got {kmax!r}")
    arr = np.asarray(t, dtype=float)
    if side == "right":
        k = np.arange(-kmax, kmax + 1)
        vals = fourier_image(spec, np.add.outer(arr, 2.0 * math.pi * k))
        order = np.argsort(np.abs(k))[::-1]
        out = math.sqrt(2.0 * math.pi) * np.sum(vals[..., order], axis=-1)
    elif side == "left":
        if spec.family is Family.LORENTZ:
            if tail_correction and kmax < 2.0 * spec.sigma:
                raise DomainError("tail correction needs kmax >= 2 sigma")
            out = _lorentz_left(spec.sigma, arr, kmax, tail_correction)
        else:
            k = np.arange(1, kmax + 1, dtype=float)
            w = generator_value(spec, k)
            out = 1.0 + 2.0 * np.cos(np.multiply.outer(arr, k))[..., ::-1] @ w[::-1]
    else:
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")
    return float(out) if arr.ndim == 0 else out


def fourier_image_quadrature(spec, omega, tol=1e-12):
    """Unitary Fourier transform of the generator by quadrature.

    ``sqrt(2/pi) int_0^inf phi(t) cos(omega t) dt``, using QUADPACK's QAWF
    cosine-weighted rule (scipy) for the slowly decaying oscillatory tail.
    """
    if omega == 0.0:
        s = spec.sigma

        def integrand(theta):
            return generator_value(spec, s * np.tan(theta)) * s / np.cos(theta) ** 2

        value = adaptive_quadrature(integrand, 0.0, 0.5 * math.pi, tol=tol)
    else:
        value, _ = integrate.quad(lambda t: generator_value(spec, t), 0.0, np.inf,
                                  weight="cos", wvar=abs(omega), epsabs=tol, limlst=200)
    return math.sqrt(2.0 / math.pi) * value


def _frequency_panels(spec, omega_max):
    edges = [0.0, math.pi]
    n = 1
    while 2.0 * n * math.pi < omega_max:
        edges.append(2.0 * n * math.pi)
        n += 1
    edges.append(omega_max)
    return list(zip(edges[:-1], edges[1:]))


def nod_function_fourier(spec, t, tol=1e-13, omega_max=None):
    """Nod function by Fourier inversion of ``phihat(w) / Phi(w)``.

    ``phi~(t) = sqrt(2/pi) int_0^inf phihat(w) cos(w t) / Phi(w) dw``,
    integrated panel by panel (Phi has kinks at multiples of 2 pi).
    """
    if omega_max is None:
        # phihat/Phi <= exp(-sigma w) * (1/A-like factor); 40 e-foldings beyond the bulk
        omega_max = 2.0 * math.pi * math.ceil((40.0 / spec.sigma + 2.0 * math.pi) / (2.0 * math.pi))
        if spec.family is Family.GAUSS:
            omega_max = min(omega_max, 2.0 * math.pi * math.ceil(12.0 / spec.sigma / math.pi + 1))

    def integrand(w):
        return fourier_image(spec, w) * np.cos(w * t) / mask_phi(spec, w)

    total = sum(adaptive_quadrature(integrand, a, b, tol=tol)
                for a, b in _frequency_panels(spec, omega_max))
    return math.sqrt(2.0 / math.pi) * total


def sinc_distance_quadrature(sigma, tol=1e-14, omega_max=40.0 * math.pi):
    """Squared L2 distance of the Lorentz nod function to the sinc, in frequency.

    ``int |sigma sqrt(pi/2) exp(-sigma|w|)/Phi_L(w) - chi_[-pi,pi](w)/sqrt(2 pi)|^2 dw``
    over ``|w| <= omega_max``, which is twice the integral over [0, omega_max].
    """
    spec = GeneratorSpec(Family.LORENTZ, sigma)
    inv = 1.0 / math.sqrt(2.0 * math.pi)

    def make(box):
        def integrand(w):
            diff = fourier_image(spec, w) / mask_phi(spec, w) - box
            return diff * diff
        return integrand

    total = 0.0
    for a, b in _frequency_panels(spec, omega_max):
        total += adaptive_quadrature(make(inv if b <= math.pi else 0.0), a, b, tol=tol)
    return 2.0 * total


@dataclass(frozen=True)
class MonotonicityReport:
    """Outcome of the grid check of ``P(t) = theta3(t,q)/theta3(t,q^2)^2``.

    ``first_*`` fields hold the grid point where a violation starts, or None.
    ``raw_ties`` counts neighbouring raw ``P`` samples that are equal or out of
    order in double precision; it is informational (see ``monotonicity_check``).
    """

    q: float
    grid_size: int
    first_decrease_violation: float = None
    first_increase_violation: float = None
    first_derivative_violation: float = None
    raw_ties: int = 0

    @property
    def passed(self):
        return (self.first_decrease_violation is None
                and self.first_increase_violation is None
                and self.first_derivative_violation is None)


def _first_bad(t, ok):
    bad = np.flatnonzero(~ok)
    return None if bad.size == 0 else float(t[bad[0]])


def monotonicity_check(q, grid_size=500, policy=DEFAULT_POLICY):
    """Strict decrease of P on (0, pi/2) and strict increase on (pi/2, pi).

    With ``r = theta2(t,q^2)/theta3(t,q^2)`` one has
    ``P(t) = (1 + r^2) / theta3(0,q)``, so P is monotone exactly where r^2 is.
    For nomes near 1, r equals 1 to double precision over most of (0, pi/2)
    and raw P samples tie.  Strictness is therefore judged on
    ``log(1 - r)`` and ``log(1 + r)``, which resolve r near +-1 and near 0.
    The sign of ``theta23_ratio_derivative`` is checked on the same grids.
    """
    if not 0.0 < q < 1.0:
        raise DomainError(f"q must lie in (0, 1), got {q!r}")
    if grid_size < 10:
        raise DomainError("grid_size must be at least 10")
    half = 0.5 * math.pi
    # uniform interior grids: endpoints excluded
    left = np.linspace(0.0, half, grid_size + 2)[1:-1]
    right = np.linspace(half, math.pi, grid_size + 2)[1:-1]
    p = q * q

    lm, lp = theta23_ratio_gaps(left, p, policy)
    # r in (0, 1) and decreasing: log(1 + r) > 0, log(1 - r) increasing
    ok_left = np.concatenate([np.diff(lm) > 0, [True]]) & (lp > 0)
    rm, rp = theta23_ratio_gaps(right, p, policy)
    # r in (-1, 0) and decreasing: log(1 - r) > 0, log(1 + r) decreasing
    ok_right = np.concatenate([np.diff(rp) < 0, [True]]) & (rm > 0)

    grid = np.concatenate([left, right])
    ok_deriv = theta23_ratio_derivative(grid, p, policy) <= 0.0

    raw_l = p_ratio(left, q, policy)
    raw_r = p_ratio(right, q, policy)
    ties = int(np.sum(np.diff(raw_l) >= 0) + np.sum(np.diff(raw_r) <= 0))

    return MonotonicityReport(
        q=float(q),
        grid_size=int(grid_size),
        first_decrease_violation=_first_bad(left, ok_left),
        first_increase_violation=_first_bad(right, ok_right),
        first_derivative_violation=_first_bad(grid, ok_deriv),
        raw_ties=ties,
    )
