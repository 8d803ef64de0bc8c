"""Riesz bounds of the two shift systems, and how finite Gram sections approach them.

The closed-form bounds come from the extremes of the spectral function
P(w) = 2 pi sum_k |phihat(w + 2 pi k)|^2.  The extreme eigenvalues of the
n x n Gram matrix of the shifts must lie inside [A, B] and spread outward
as n grows.

Run:  python3 demos/riesz_bounds_and_gram.py
"""

from rieszshift import (
    GeneratorSpec,
    gram_eigen_bounds,
    nod_riesz_constants,
    riesz_constants,
)
from rieszshift.table2 import SIGMAS


def bounds_table():
    print("generator system: lower A, upper B, condition B/A")
    print(f"{'sigma':>6} {'A_G':>11} {'B_G':>9} {'B_G/A_G':>10} {'A_L':>10} {'B_L':>9} {'B_L/A_L':>10}")
    for s in SIGMAS:
        g = riesz_constants(GeneratorSpec("gauss", s))
        lo = riesz_constants(GeneratorSpec("lorentz", s))
        print(f"{s:6.1f} {g.lower:11.3e} {g.upper:9.3f} {g.ratio:10.3e} "
              f"{lo.lower:10.3e} {lo.upper:9.3f} {lo.ratio:10.3e}")


def nodal_table():
    print("\nnod-function system: both families tend to the bounds (1/2, 1)")
    print(f"{'sigma':>6} {'gauss lower':>12} {'gauss upper':>12} {'lorentz lower':>14} {'lorentz upper':>14}")
    for s in (0.5, 1.0, 2.0, 3.0, 5.0):
        g = nod_riesz_constants(GeneratorSpec("gauss", s))
        lo = nod_riesz_constants(GeneratorSpec("lorentz", s))
        print(f"{s:6.1f} {g.lower:12.8f} {g.upper:12.8f} {lo.lower:14.10f} {lo.upper:14.10f}")


def gram_convergence():
    print("\nGram sections for the Lorentz generator, sigma = 0.6")
    spec = GeneratorSpec("lorentz", 0.6)
    b = riesz_constants(spec)
    print(f"  A = {b.lower:.6f}   B = {b.upper:.6f}")
    for n in (11, 21, 41, 81, 161, 321):
        g = gram_eigen_bounds(spec, n)
        print(f"  n={n:4d}  lambda_min={g.lambda_min:.6f}  lambda_max={g.lambda_max:.6f}"
              f"  gap to A {100 * (g.lambda_min / b.lower - 1):6.3f}%")

    print("\nGaussian, sigma = 2: A is below what a dense solver can resolve")
    g = gram_eigen_bounds(GeneratorSpec("gauss", 2.0), 81)
    print(f"  lambda_min={g.lambda_min:.3e}  note: {g.note}")


if __name__ == "__main__":
    bounds_table()
    nodal_table()
    gram_convergence()
