"""Nod functions of the two families: coefficient decay, truncation, interpolation.

Gaussian coefficients shrink geometrically, so a few dozen terms reach
machine precision.  Lorentz coefficients fall off only like 1/k^2, which
sets how large kmax must be for a given nod residual.  The last part
interpolates sin(pi t / 6) from its integer samples and shows the L2
distance of the Lorentz nod function to the sinc shrinking like 1/sigma.

Run:  python3 demos/nod_functions.py
"""

import math
import warnings

import numpy as np

from rieszshift import (
    GeneratorSpec,
    TruncationWarning,
    interpolate,
    nod_coefficients,
    nod_function_eval,
    sign_alternation_violations,
    sinc,
    sinc_distance_closed_form,
)
from rieszshift.verification import lorentz_kmax_for


def residual(coeffs, reach=10):
    m = np.arange(-reach, reach + 1, dtype=float)
    return float(np.max(np.abs(nod_function_eval(coeffs, m) - (m == 0))))


def coefficient_decay():
    print("|d_k| at sigma = 1")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TruncationWarning)
        g = nod_coefficients(GeneratorSpec("gauss", 1.0), 40)
    lo = nod_coefficients(GeneratorSpec("lorentz", 1.0), 40)
    for k in (0, 1, 5, 10, 20, 40):
        print(f"  k={k:3d}  gauss {g[k]:+.3e}   lorentz {lo[k]:+.3e}")
    print(f"  lorentz signs stop alternating at k = {sign_alternation_violations(lo)[0]}")


def truncation():
    print("\nmax |nod(m) - delta_0m| over |m| <= 10")
    for sigma in (0.5, 1.0, 2.0, 3.0):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", TruncationWarning)
            g40 = residual(nod_coefficients(GeneratorSpec("gauss", sigma), 40))
        l40 = residual(nod_coefficients(GeneratorSpec("lorentz", sigma), 40))
        kmax = lorentz_kmax_for(sigma, 5e-7)
        lk = residual(nod_coefficients(GeneratorSpec("lorentz", sigma), kmax))
        print(f"  sigma={sigma:3.1f}  gauss kmax=40 {g40:.1e}   lorentz kmax=40 {l40:.1e}"
              f"   lorentz kmax={kmax} {lk:.1e}")


def interpolation():
    print("\ninterpolating sin(pi t / 6) from samples at |n| <= 20, Lorentz sigma = 3")
    coeffs = nod_coefficients(GeneratorSpec("lorentz", 3.0), 40)
    samples = {n: math.sin(math.pi * n / 6) for n in range(-20, 21)}
    for t in (0.0, 0.5, 2.0, 3.25):
        got = interpolate(coeffs, samples, t)
        print(f"  t={t:5.2f}  interpolant {got:+.6f}   exact {math.sin(math.pi * t / 6):+.6f}")


def sinc_limit():
    # sup is only measured up to sigma = 5: the coefficients grow roughly like
    # exp(pi sigma) and the direct sum loses all digits past sigma of about 10
    print("\nLorentz nod function against sinc")
    t = np.linspace(-4, 4, 801)
    for sigma in (0.5, 1.0, 2.0, 5.0, 20.0):
        line = f"  sigma={sigma:5.1f}  squared L2 distance {sinc_distance_closed_form(sigma):.4e}"
        if sigma <= 5.0:
            coeffs = nod_coefficients(GeneratorSpec("lorentz", sigma), max(40, lorentz_kmax_for(sigma, 1e-6)))
            line += f"   sup on [-4, 4] {np.max(np.abs(nod_function_eval(coeffs, t) - sinc(t))):.3e}"
        print(line)


if __name__ == "__main__":
    coefficient_decay()
    truncation()
    interpolation()
    sinc_limit()
