"""Jacobi theta functions of a real argument and a real nome.

Conventions follow Whittaker & Watson: with nome ``q`` in [0, 1)

    theta3(t, q) = 1 + 2 sum_{k>=1} q**(k**2) cos(2 k t)
    theta4(t, q) = 1 + 2 sum_{k>=1} (-1)**k q**(k**2) cos(2 k t)
    theta2(t, q) = 2 sum_{k>=0} q**((k + 1/2)**2) cos((2k + 1) t)
    theta1(t, q) = 2 sum_{k>=0} (-1)**k q**((k + 1/2)**2) sin((2k + 1) t)

For small nomes the series above are summed directly.  For ``q`` above
``EvalPolicy.nome_switch_threshold`` the Jacobi imaginary transformation is
used instead.  Writing ``lam = -log(q)``,

    theta3(t, q) = sqrt(pi / lam) * sum_n exp(-(t - n pi)**2 / lam)

and the other three functions are the same Gaussian comb shifted by half a
period and/or with alternating signs.  The comb converges in O(1) terms when
``q`` is close to 1 and, for theta3 and theta4, is a sum of positive terms, so
values as small as 1e-300 keep full relative accuracy.

Internally every evaluation returns a pair ``(log_scale, series)`` with
``value = exp(log_scale) * series``; ratios of thetas are formed on these
parts so that huge or tiny scale factors cancel before exponentiation.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import ConvergenceError, DomainError

__all__ = [
    "EvalPolicy",
    "DEFAULT_POLICY",
    "ThetaArgs",
    "theta1",
    "theta2",
    "theta3",
    "theta4",
    "log_abs_theta",
    "theta_ratio",
    "p_ratio",
    "watson_residual",
    "theta23_ratio_derivative",
    "theta23_ratio_gaps",
]


@dataclass(frozen=True)
class EvalPolicy:
    """Series controls shared by all theta evaluations.

    ``nome_switch_threshold`` may be 0 (always use the transformed comb for
    q > 0) or 1 (never use it); both settings exist for cross-checking.

    Error guarantee: on the direct path the absolute error is at most
    ``4 * tail_tolerance / (1 - q)`` plus rounding; on the transformed path the
    truncated comb terms are below ``tail_tolerance`` relative to the leading
    term, so the error is relative.
    """

    tail_tolerance: float = 1e-16
    nome_switch_threshold: float = 0.5
    max_terms: int = 10000

    def __post_init__(self):
        if not self.tail_tolerance > 0:
            raise DomainError("tail_tolerance must be positive")
        if not 0.0 <= self.nome_switch_threshold <= 1.0:
            raise DomainError("nome_switch_threshold must lie in [0, 1]")
        if self.max_terms < 1:
            raise DomainError("max_terms must be at least 1")


DEFAULT_POLICY = EvalPolicy()


@dataclass(frozen=True)
class ThetaArgs:
    """Argument ``t`` (radians, scalar or array) and nome ``q`` in [0, 1)."""

    t: object
    q: float

    def __post_init__(self):
        if not 0.0 <= self.q < 1.0:
            raise DomainError(f"nome q={self.q!r} outside [0, 1)")
        if not np.all(np.isfinite(self.t)):
            raise DomainError("theta argument t must be finite")


# transformed comb: lattice shift (in periods) and sign alternation
_SHIFT = {1: 0.5, 2: 0.0, 3: 0.0, 4: 0.5}
_ALTERNATING = {1: True, 2: True, 3: False, 4: False}
# direct q-series: sign alternation
_DIRECT_ALTERNATING = {1: True, 2: False, 3: False, 4: True}


def _as_array(t):
    arr = np.asarray(t, dtype=float)
    return np.atleast_1d(arr), arr.ndim == 0


def _restore(values, scalar):
    return float(values[0]) if scalar else values


def _direct(kind, t, q, policy):
    """Sum the q-series directly; returns the value (log_scale is 0)."""
    if q == 0.0:
        return np.ones_like(t) if kind in (3, 4) else np.zeros_like(t)
    logq = math.log(q)
    half = 0.5 if kind in (1, 2) else 0.0
    # smallest K whose next exponent (K + 1 + half)**2 pushes q**. below tol
    kcut = math.sqrt(math.log(policy.tail_tolerance) / logq)
    nterms = max(1, int(math.ceil(kcut - half)))
    if nterms > policy.max_terms:
        raise ConvergenceError(
            f"theta{kind} series needs {nterms} terms at q={q} "
            f"(max_terms={policy.max_terms})"
        )
    start = 0 if half else 1
    k = np.arange(start, start + nterms, dtype=float)
    weights = np.exp((k + half) ** 2 * logq)
    if _DIRECT_ALTERNATING[kind]:
        weights = weights * np.where(k % 2 == 0, 1.0, -1.0)
    if kind == 1:
        waves = np.sin(np.outer(t, 2.0 * k + 1.0))
    elif kind == 2:
        waves = np.cos(np.outer(t, 2.0 * k + 1.0))
    else:
        waves = np.cos(np.outer(t, 2.0 * k))
    # smallest terms first
    total = 2.0 * np.sum((waves * weights)[:, ::-1], axis=1)
    return total + 1.0 if kind in (3, 4) else total


def _comb(t, shift, lam, alternating, policy):
    """Transformed series sqrt(pi/lam) sum_n (+-1)^n exp(-(t - (n+shift) pi)^2/lam).

    Returns ``(log_scale, series)``; the dominant term is factored into
    ``log_scale`` so the series is O(1).
    """
    n0 = np.round(t / math.pi - shift)
    d0 = t - (n0 + shift) * math.pi
    log_scale = 0.5 * math.log(math.pi / lam) - d0 * d0 / lam

    # terms with |j| >= 2 are bounded by exp(-pi^2 |j| (|j| - 1) / lam)
    need = lam * -math.log(policy.tail_tolerance) / math.pi**2
    jmax = max(1, int(math.ceil(0.5 * (-1.0 + math.sqrt(1.0 + 4.0 * need)))))
    if 2 * jmax + 1 > policy.max_terms:
        raise ConvergenceError(
            f"transformed theta series needs {2 * jmax + 1} terms at lam={lam}"
        )
    j = np.arange(-jmax, jmax + 1, dtype=float)
    expo = -(j * j * math.pi**2 - 2.0 * math.pi * np.outer(d0, j)) / lam
    terms = np.exp(expo)
    if alternating:
        terms = terms * np.where(j % 2 == 0, 1.0, -1.0)
        sign0 = np.where(n0 % 2 == 0, 1.0, -1.0)
    else:
        sign0 = 1.0
    order = np.argsort(np.abs(j))[::-1]
    series = sign0 * np.sum(terms[:, order], axis=1)
    return log_scale, series


def _use_transform(q, policy):
    return q > 0.0 and q > policy.nome_switch_threshold


def _log_nome(q, lam):
    # callers that know -log(q) exactly pass it to avoid the exp/log round trip
    return -math.log(q) if lam is None else lam


def _parts(kind, t, q, policy, lam=None):
    """``(log_scale, series)`` for theta_kind at nome q."""
    if not _use_transform(q, policy):
        return np.zeros_like(t), _direct(kind, t, q, policy)
    return _comb(t, _SHIFT[kind], _log_nome(q, lam), _ALTERNATING[kind], policy)


def _theta(kind, t, q, policy, lam=None):
    ThetaArgs(t, q)
    arr, scalar = _as_array(t)
    log_scale, series = _parts(kind, arr, q, policy, lam)
    return _restore(np.exp(log_scale) * series, scalar)


def theta1(t, q, policy=DEFAULT_POLICY, lam=None):
    """Jacobi theta1(t, q); odd, positive on (0, pi)."""
    return _theta(1, t, q, policy, lam)


def theta2(t, q, policy=DEFAULT_POLICY, lam=None):
    """Jacobi theta2(t, q); positive on (0, pi/2), negative on (pi/2, pi)."""
    return _theta(2, t, q, policy, lam)


def theta3(t, q, policy=DEFAULT_POLICY, lam=None):
    """Jacobi theta3(t, q) = sum_k q**(k**2) exp(2ikt) for real t.

    Parameters
    ----------
    t : float or array_like
        Argument in radians.
    q : float
        Nome in [0, 1).
    policy : EvalPolicy, optional
    lam : float, optional
        Exact value of ``-log(q)`` if known; used by the transformed series.

    Returns
    -------
    float or ndarray
        Strictly positive values with the shape of ``t``.

    Raises
    ------
    DomainError
        If ``q`` is outside [0, 1) or ``t`` is not finite.
    ConvergenceError
        If the series would need more than ``policy.max_terms`` terms.
    """
    return _theta(3, t, q, policy, lam)


def theta4(t, q, policy=DEFAULT_POLICY, lam=None):
    """Jacobi theta4(t, q) = theta3(t + pi/2, q); strictly positive."""
    return _theta(4, t, q, policy, lam)


def log_abs_theta(kind, t, q, policy=DEFAULT_POLICY, lam=None):
    """Natural log of |theta_kind(t, q)|, finite even where the value underflows."""
    if kind not in _SHIFT:
        raise DomainError(f"theta kind must be 1..4, got {kind!r}")
    ThetaArgs(t, q)
    arr, scalar = _as_array(t)
    log_scale, series = _parts(kind, arr, q, policy, lam)
    with np.errstate(divide="ignore"):
        out = log_scale + np.log(np.abs(series))
    return _restore(out, scalar)


def theta_ratio(kind, t, q, policy=DEFAULT_POLICY, lam=None):
    """theta_kind(t, q) / theta_kind(t, q**2)**2 for kind 3 or 4.

    On the transformed path both thetas are Gaussian combs centred on the
    same lattice point, so their exponential scale factors cancel exactly and
    the ratio reduces to ``2 sqrt(lam/pi) S(t; lam) / S(t; 2 lam)**2``.
    """
    if kind not in (3, 4):
        raise DomainError("theta_ratio is defined for theta3 and theta4 only")
    ThetaArgs(t, q)
    arr, scalar = _as_array(t)
    if _use_transform(q, policy):
        lam = _log_nome(q, lam)
        _, num = _comb(arr, _SHIFT[kind], lam, False, policy)
        _, den = _comb(arr, _SHIFT[kind], 2.0 * lam, False, policy)
        out = 2.0 * math.sqrt(lam / math.pi) * num / den**2
    else:
        out = _direct(kind, arr, q, policy) / _direct(kind, arr, q * q, policy) ** 2
    return _restore(out, scalar)


def p_ratio(t, q, policy=DEFAULT_POLICY):
    """P(t) = theta3(t, q) / theta3(t, q**2)**2, for t in [0, pi] and q in (0, 1).

    Decreasing on (0, pi/2) and increasing on (pi/2, pi).  For q near 1 the
    variation is below double-precision resolution over most of the range;
    use :func:`theta23_ratio_gaps` to resolve it.
    """
    if not 0.0 < q < 1.0:
        raise DomainError(f"p_ratio needs q in (0, 1), got {q!r}")
    return theta_ratio(3, t, q, policy)


def watson_residual(t, q, policy=DEFAULT_POLICY):
    """theta3(t,q) theta3(0,q) - theta3(t,q^2)^2 - theta2(t,q^2)^2 (zero in exact arithmetic)."""
    q2 = q * q
    return (
        theta3(t, q, policy) * theta3(0.0, q, policy)
        - theta3(t, q2, policy) ** 2
        - theta2(t, q2, policy) ** 2
    )


def theta23_ratio_derivative(t, p, policy=DEFAULT_POLICY):
    """Closed form of d/dt [theta2(t,p) / theta3(t,p)].

    Equals ``-theta4(0,p)**2 * theta1(t,p) * theta4(t,p) / theta3(t,p)**2``,
    assembled in log space so that factors like theta4(0, p) ~ 1e-100 for p
    near 1 do not underflow.
    """
    ThetaArgs(t, p)
    arr, scalar = _as_array(t)
    ls40, s40 = _parts(4, np.zeros(1), p, policy)
    ls1, s1 = _parts(1, arr, p, policy)
    ls4, s4 = _parts(4, arr, p, policy)
    ls3, s3 = _parts(3, arr, p, policy)
    log_scale = 2.0 * ls40 + ls1 + ls4 - 2.0 * ls3
    out = -np.exp(log_scale) * (s40 * s40 * s1 * s4 / (s3 * s3))
    return _restore(out, scalar)


def theta23_ratio_gaps(t, p, policy=DEFAULT_POLICY):
    """Logs of ``1 - r`` and ``1 + r`` where r = theta2(t,p) / theta3(t,p).

    Uses the exact identities ``theta3(t,p) -+ theta2(t,p) = theta_{4,3}(t/2,
    p**(1/4))``: both differences are sums of positive terms, so the
    distance of r from +-1 is resolved even when it is 1e-200.

    Returns
    -------
    (ndarray, ndarray) or (float, float)
    """
    if not 0.0 < p < 1.0:
        raise DomainError(f"nome p must lie in (0, 1), got {p!r}")
    arr, scalar = _as_array(t)
    root = p**0.25
    log3 = log_abs_theta(3, arr, p, policy)
    minus = log_abs_theta(4, 0.5 * arr, root, policy) - log3
    plus = log_abs_theta(3, 0.5 * arr, root, policy) - log3
    return _restore(minus, scalar), _restore(plus, scalar)
