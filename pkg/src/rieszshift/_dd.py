"""Double-double arithmetic on numpy arrays.

A double-double number is a pair ``(hi, lo)`` of float64 arrays with
``|lo| <= ulp(hi) / 2``; together they carry roughly 32 significant digits.
Only the handful of operations needed by the Gaussian nod coefficients are
provided.  Algorithms follow Dekker (1971) and the QD library of Hida, Li and
Bailey.
"""

import numpy as np

_SPLITTER = 134217729.0  # 2**27 + 1

LN2 = (0.6931471805599453, 2.3190468138462996e-17)
PI = (3.141592653589793, 1.2246467991473532e-16)

# exp() argument reduction: r = (x - m ln2) / 2**_EXP_SQUARINGS
_EXP_SQUARINGS = 10


def two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a, b):
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a):
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def asdd(x):
    """Promote a float array (or scalar) to a double-double pair."""
    x = np.asarray(x, dtype=float)
    return x, np.zeros_like(x)


def add(x, y):
    s, e = two_sum(x[0], y[0])
    t, f = two_sum(x[1], y[1])
    e = e + t
    s, e = quick_two_sum(s, e)
    e = e + f
    return quick_two_sum(s, e)


def neg(x):
    return -x[0], -x[1]


def sub(x, y):
    return add(x, neg(y))


def mul(x, y):
    p, e = two_prod(x[0], y[0])
    e = e + (x[0] * y[1] + x[1] * y[0])
    return quick_two_sum(p, e)


def div(x, y):
    q1 = x[0] / y[0]
    r = sub(x, mul(y, asdd(q1)))
    q2 = r[0] / y[0]
    r = sub(r, mul(y, asdd(q2)))
    q3 = r[0] / y[0]
    q1, q2 = quick_two_sum(q1, q2)
    return add((q1, q2), asdd(q3))


def ldexp(x, n):
    return np.ldexp(x[0], n), np.ldexp(x[1], n)


def exp(x):
    """exp of a double-double array, accurate to about 1e-30 relative.

    Arguments below about -745 underflow to zero, as for float64.
    """
    xh, xl = np.asarray(x[0], dtype=float), np.asarray(x[1], dtype=float)
    xh = np.clip(xh, -800.0, 709.0)
    m = np.round(xh / LN2[0])
    r = sub((xh, xl), mul(asdd(m), LN2))
    r = ldexp(r, -_EXP_SQUARINGS)

    # Taylor series of expm1(r); |r| < 3.4e-4 so 10 terms reach 1e-35
    s = r
    term = r
    for n in range(2, 12):
        term = div(mul(term, r), asdd(float(n)))
        s = add(s, term)

    # expm1(2r) = 2 expm1(r) + expm1(r)**2
    for _ in range(_EXP_SQUARINGS):
        s = add(ldexp(s, 1), mul(s, s))
    s = add(s, asdd(np.ones_like(xh)))
    mi = m.astype(np.int64)
    # split the binary exponent so that 2**m never overflows on its own
    half = mi // 2
    s = ldexp(s, half)
    return ldexp(s, mi - half)


def to_float(x):
    return x[0] + x[1]


def sum_axis(x, axis=-1):
    """Sequential double-double sum of ``x`` along ``axis``."""
    hi = np.moveaxis(np.asarray(x[0]), axis, 0)
    lo = np.moveaxis(np.asarray(x[1]), axis, 0)
    acc = (np.zeros(hi.shape[1:]), np.zeros(hi.shape[1:]))
    for i in range(hi.shape[0]):
        acc = add(acc, (hi[i], lo[i]))
    return acc
