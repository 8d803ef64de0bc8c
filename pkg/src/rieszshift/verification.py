"""End-to-end verification suite: every closed form against its oracle.

``run_checks`` returns a report dictionary in the shape described by
``REPORT_SCHEMA``; ``verify`` on the command line writes it out.
"""

from dataclasses import dataclass
import math
import time
import warnings

import numpy as np

from . import oracle, table2
from .nodal import (
    TruncationWarning,
    gauss_nod_coefficients,
    lorentz_nod_coefficients,
    nod_function_eval,
    sinc_distance_closed_form,
)
from .systems import (
    Family,
    GeneratorSpec,
    mask_phi,
    nod_riesz_constants,
    riesz_constants,
    spectral_p,
)
from .theta import watson_residual

__all__ = ["Check", "REPORT_SCHEMA", "run_checks", "build_report", "lorentz_kmax_for"]

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["checks", "summary"],
    "properties": {
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "residual", "tolerance", "pass"],
                "properties": {
                    "name": {"type": "string"},
                    "residual": {"type": ["number", "null"]},
                    "tolerance": {"type": "number"},
                    "pass": {"type": "boolean"},
                    "detail": {"type": "string"},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["passed", "failed"],
            "properties": {
                "passed": {"type": "integer", "minimum": 0},
                "failed": {"type": "integer", "minimum": 0},
            },
        },
    },
}

GRAM_SIGMAS = (0.4, 0.6, 1.0)
GRAM_SIZES = (11, 21, 41, 81)
POISSON_SIGMAS = (0.5, 1.0, 2.0)
NOD_SIGMAS = (0.5, 1.0, 2.0, 3.0)
MONOTONICITY_NOMES = (0.3, 0.6, 0.9, math.exp(-0.25), math.exp(-0.01))


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tolerance: float
    detail: str = ""

    @property
    def passed(self):
        return self.residual is not None and np.isfinite(self.residual) and self.residual <= self.tolerance

    def as_dict(self):
        out = {
            "name": self.name,
            "residual": None if not np.isfinite(self.residual) else float(self.residual),
            "tolerance": float(self.tolerance),
            "pass": bool(self.passed),
        }
        if self.detail:
            out["detail"] = self.detail
        return out


def lorentz_kmax_for(sigma, tol, reach=10):
    """Truncation kmax for which the Lorentz nod residual is below ``tol`` at ``|m| <= reach``.

    The coefficients behave like ``-tanh(sigma pi)^2 / (pi k)^2`` and the
    generator like ``sigma^2 / k^2``, so the dropped tail is about
    ``2 a sigma^2 / (3 K^3)`` with ``K = kmax - reach``.  K is doubled as a
    margin for the higher-order terms of the coefficient expansion.
    """
    a = math.tanh(sigma * math.pi) ** 2 / math.pi**2
    k = (2.0 * a * sigma**2 / (3.0 * tol)) ** (1.0 / 3.0)
    return int(math.ceil(2.0 * k)) + reach


def _table2_checks():
    t0 = time.perf_counter()
    rows = table2.compute_table()
    elapsed = time.perf_counter() - t0
    cells = table2.compare(rows, mode="tolerant")
    worst = max(cells, key=lambda c: c.deviation_units)
    bad = [f"{c.column}({c.sigma:g})" for c in cells if not c.ok]
    detail = (f"worst {worst.column}({worst.sigma:g}) at {worst.deviation_units:.2f} units "
              "of the last printed digit")
    if bad:
        detail += "; failing: " + ", ".join(bad)
    errata = ", ".join(f"{col}({s:g})" for s, col in table2.ERRATA)
    return [
        Check("table2.tolerant", worst.deviation_units, 1.0 + 1e-9,
              detail + f"; errata applied: {errata}"),
        Check("table2.runtime_seconds", elapsed, 1.0),
    ]


def _gram_checks():
    out = []
    for family in Family:
        for sigma in GRAM_SIGMAS:
            spec = GeneratorSpec(family, sigma)
            rb = riesz_constants(spec)
            summaries = [oracle.gram_eigen_bounds(spec, n) for n in GRAM_SIZES]
            lo = np.array([g.lambda_min for g in summaries])
            hi = np.array([g.lambda_max for g in summaries])
            # bracketing and nesting violations, all as non-negative excess
            excess = max(
                np.max(rb.lower - lo, initial=0.0),
                np.max(hi - rb.upper, initial=0.0),
                np.max(np.diff(lo), initial=0.0),
                np.max(-np.diff(hi), initial=0.0),
                np.max(lo - hi, initial=0.0),
            )
            out.append(Check(f"gram.bracketing[{family.value},sigma={sigma:g}]", excess, 0.0,
                             f"A={rb.lower:.6e} lambda_min(81)={lo[-1]:.6e} "
                             f"lambda_max(81)={hi[-1]:.6e} B={rb.upper:.6e}"))
    spec = GeneratorSpec(Family.LORENTZ, 0.6)
    g = oracle.gram_eigen_bounds(spec, 81)
    a = riesz_constants(spec).lower
    out.append(Check("gram.lorentz_sigma=0.6_n=81_lambda_min_rel_gap", (g.lambda_min - a) / a, 0.05))
    return out


def _poisson_checks():
    out = []
    grid = np.linspace(0.0, 2.0 * math.pi, 200)
    for family in Family:
        for sigma in POISSON_SIGMAS:
            spec = GeneratorSpec(family, sigma)
            closed = mask_phi(spec, grid)
            left = oracle.direct_mask_sum(spec, grid, 60)
            right = oracle.direct_mask_sum(spec, grid, 40, side="right")
            p_closed = spectral_p(spec, grid)
            p_direct = oracle.direct_spectral_sum(spec, grid, 40)
            tag = f"{family.value},sigma={sigma:g}"
            out.append(Check(f"poisson.mask_left[{tag}]", np.max(np.abs(left - closed)), 1e-10))
            out.append(Check(f"poisson.mask_right[{tag}]", np.max(np.abs(right - closed)), 1e-10))
            out.append(Check(f"poisson.spectral[{tag}]", np.max(np.abs(p_direct - p_closed)), 1e-10))
    return out


def _nod_checks(tol=1e-6):
    out = []
    m = np.arange(-10, 11)
    delta = (m == 0).astype(float)
    for family in Family:
        for sigma in NOD_SIGMAS:
            if family is Family.GAUSS:
                kmax = 40
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore", TruncationWarning)
                    coeffs = gauss_nod_coefficients(sigma, kmax)
            else:
                kmax = max(40, lorentz_kmax_for(sigma, tol / 2))
                coeffs = lorentz_nod_coefficients(sigma, kmax)
            resid = np.max(np.abs(nod_function_eval(coeffs, m.astype(float)) - delta))
            out.append(Check(f"nod.residual[{family.value},sigma={sigma:g},kmax={kmax}]", resid, tol))
    return out


def _limit_checks():
    out = []
    sig = (0.2, 0.4, 0.6, 1.0, 2.0, 3.0, 4.0, 5.0)
    rel = max(abs(riesz_constants(GeneratorSpec(Family.LORENTZ, s)).ratio
                  / math.cosh(2.0 * s * math.pi) - 1.0) for s in sig)
    out.append(Check("lorentz.ratio_identity", rel, 1e-14))
    lor = nod_riesz_constants(GeneratorSpec(Family.LORENTZ, 5.0))
    out.append(Check("nodal.lorentz_limits[sigma=5]",
                     max(abs(lor.lower - 0.5), abs(lor.upper - 1.0)), 1e-12))
    gau = nod_riesz_constants(GeneratorSpec(Family.GAUSS, 5.0))
    out.append(Check("nodal.gauss_limits[sigma=5]",
                     max(abs(gau.lower - 0.5), abs(gau.upper - 1.0)), 1e-4))
    return out


def _theta_checks():
    out = []
    t = np.linspace(0.0, math.pi, 100)
    worst = max(np.max(np.abs(watson_residual(t, q))) for q in np.linspace(0.05, 0.95, 20))
    out.append(Check("theta.watson_grid[100x20]", worst, 1e-10))
    for q in MONOTONICITY_NOMES:
        rep = oracle.monotonicity_check(q, 500)
        firsts = [rep.first_decrease_violation, rep.first_increase_violation,
                  rep.first_derivative_violation]
        n_bad = sum(v is not None for v in firsts)
        out.append(Check(f"theta.monotonicity[q={q:.6g}]", float(n_bad), 0.0,
                         "" if rep.passed else f"violations start at {firsts}"))
    return out


def _sinc_checks():
    out = []
    for sigma in (0.5, 1.0, 2.0):
        diff = abs(sinc_distance_closed_form(sigma) - oracle.sinc_distance_quadrature(sigma))
        out.append(Check(f"sinc_distance.quadrature[sigma={sigma:g}]", diff, 1e-8))
    vals = [sinc_distance_closed_form(s) for s in (0.5, 1.0, 2.0, 5.0)]
    steps = np.diff(vals)
    out.append(Check("sinc_distance.decreasing", float(np.sum(steps >= 0)), 0.0,
                     "values at sigma=0.5,1,2,5: " + ", ".join(f"{v:.6e}" for v in vals)))
    return out


def run_checks():
    """Run all checks in a fixed order and return them as a list of ``Check``."""
    checks = []
    for group in (_table2_checks, _limit_checks, _gram_checks, _poisson_checks,
                  _nod_checks, _theta_checks, _sinc_checks):
        checks.extend(group())
    return checks


def build_report(checks):
    items = [c.as_dict() for c in checks]
    passed = sum(item["pass"] for item in items)
    return {"checks": items, "summary": {"passed": passed, "failed": len(items) - passed}}
