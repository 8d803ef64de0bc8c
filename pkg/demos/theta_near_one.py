"""Why the lower Gaussian Riesz constant needs the transformed theta series.

A_G(sigma) = sigma sqrt(pi) theta4(0, q) with q = exp(-1/(4 sigma^2)).  For
sigma = 5 the nome is 0.99 and theta4(0, q) is about 1e-106, while the
terms of its q-series are of order one.  Summing them directly leaves only
rounding noise; the transformed series gives every digit.

Run:  python3 demos/theta_near_one.py
"""

import math

from rieszshift import EvalPolicy, log_abs_theta, theta4

TRANSFORMED = EvalPolicy(nome_switch_threshold=0.0)


def direct_float_sum(q, terms=2000):
    # naive double-precision partial sum, for contrast
    return 1.0 + 2.0 * sum((-1) ** n * q ** (n * n) for n in range(1, terms))


def main():
    print(f"{'sigma':>6} {'q':>10} {'naive sum':>12} {'library':>12} {'log10 theta4':>13}")
    for sigma in (0.5, 1.0, 2.0, 3.0, 5.0):
        lam = 0.25 / sigma**2
        q = math.exp(-lam)
        naive = direct_float_sum(q)
        value = theta4(0.0, q, TRANSFORMED, lam=lam)
        log10 = log_abs_theta(4, 0.0, q, lam=lam) / math.log(10)
        print(f"{sigma:6.1f} {q:10.6f} {naive:12.3e} {value:12.5e} {log10:13.4f}")

    # past sigma ~ 8 the value leaves double range; the log stays exact
    sigma = 12.0
    lam = 0.25 / sigma**2
    leading = -math.pi**2 * sigma**2 + math.log(4.0 * sigma * math.sqrt(math.pi))
    print(f"\nsigma={sigma}: log theta4(0, q) = {log_abs_theta(4, 0.0, math.exp(-lam), lam=lam):.6f}"
          f"  (leading term -pi^2 sigma^2 + log(4 sigma sqrt(pi)) = {leading:.6f})")


if __name__ == "__main__":
    main()
