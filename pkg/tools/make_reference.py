"""Generate the frozen high-precision reference values in tests/fixtures/reference.json.

Everything here is computed with mpmath (50 digits, more where a value is
tiny against the terms of its series), independently of the library code.  Run from the repository root:

    python3 tools/make_reference.py
"""

import json
from pathlib import Path

import mpmath as mp

mp.mp.dps = 50
OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "reference.json"


def s(x):
    return mp.nstr(x, 30)


def jtheta(kind, t, q):
    return mp.jtheta(kind, mp.mpf(t), mp.mpf(q))


def theta_values():
    points = []
    for q in ("0.1", "0.5", "0.8", "0.95", "0.99", "0.999"):
        # theta1/theta4 can be as small as exp(-pi^2 / (4 |log q|)) against O(1) terms
        extra = mp.pi**2 / (4 * abs(mp.log(mp.mpf(q)))) / mp.log(10)
        with mp.workdps(50 + int(extra) + 20):
            points.extend(_theta_rows(q))
    return points


def _theta_rows(q):
    ts = ("0", "0.3", "1.1", "1.5707963267948966", "2.5", "3.141592653589793", "-0.7", "7.0")
    return [{"t": float(t), "q": float(q), **{f"theta{k}": s(jtheta(k, t, q)) for k in (1, 2, 3, 4)}}
            for t in ts]


def theta4_series_0_2():
    q = mp.mpf("0.2")
    return s(1 + 2 * mp.fsum((-1) ** n * q ** (n * n) for n in range(1, 51)))


def theta3_series(t, q, terms=200):
    t, q = mp.mpf(t), mp.mpf(q)
    return 1 + 2 * mp.fsum(q ** (k * k) * mp.cos(2 * k * t) for k in range(1, terms + 1))


@mp.workdps(400)
def riesz_table():
    # theta4(0, q) for q near 1 is ~1e-107 and cancels in the q-series: use 400 digits
    rows = {}
    for sig in ("0.2", "0.4", "0.6", "1", "2", "3", "4", "5"):
        sg = mp.mpf(sig)
        q = mp.exp(-1 / (4 * sg * sg))
        ag = sg * mp.sqrt(mp.pi) * mp.jtheta(4, 0, q)
        bg = sg * mp.sqrt(mp.pi) * mp.jtheta(3, 0, q)
        al = (sg * mp.pi) ** 2 / mp.sinh(2 * sg * mp.pi)
        bl = al * mp.cosh(2 * sg * mp.pi)
        rows[sig] = [s(ag), s(bg), s(bg / ag), s(al), s(bl), s(bl / al)]
    return rows


@mp.workdps(400)
def nodal_bounds():
    out = {}
    for sig in ("0.5", "1", "2", "3", "4", "5"):
        sg = mp.mpf(sig)
        q = mp.exp(-1 / (4 * sg * sg))
        lo_g = sg * mp.sqrt(mp.pi) * mp.jtheta(4, 0, q) / mp.jtheta(4, 0, q * q) ** 2
        hi_g = sg * mp.sqrt(mp.pi) * mp.jtheta(3, 0, q) / mp.jtheta(3, 0, q * q) ** 2
        x = sg * mp.pi
        lo_l = mp.sinh(x) ** 2 / mp.sinh(2 * x)
        hi_l = lo_l * (2 - 1 / mp.cosh(x) ** 2)
        out[sig] = {"gauss": [s(lo_g), s(hi_g)], "lorentz": [s(lo_l), s(hi_l)]}
    return out


def gauss_nod(sig, kmax):
    sg = mp.mpf(sig)
    s2 = 2 * sg * sg
    c = mp.nsum(lambda r: (4 * r + 1) * mp.exp(-((2 * r + mp.mpf(1) / 2) ** 2) / s2), [-mp.inf, mp.inf])
    out = []
    for k in range(kmax + 1):
        tail = mp.nsum(lambda r: (-1) ** int(r) * mp.exp((k * k - (r + mp.mpf(1) / 2) ** 2) / s2),
                       [k, mp.inf])
        out.append(s(tail / c))
    return {"C": s(c), "d": out}


def lorentz_nod(sig, ks):
    sg = mp.mpf(sig)
    pref = mp.sinh(sg * mp.pi) / (sg * mp.pi**2)
    return {str(k): s((-1) ** k * pref * mp.quad(lambda t: mp.cos(k * t) / mp.cosh(sg * t), [0, mp.pi]))
            for k in ks}


def phi_l(w, sg):
    w = w % (2 * mp.pi)
    return sg * mp.pi * mp.cosh(sg * (w - mp.pi)) / mp.sinh(sg * mp.pi)


def sinc_distance(sig):
    sg = mp.mpf(sig)
    box = 1 / mp.sqrt(2 * mp.pi)

    def f(w, inside):
        return (sg * mp.sqrt(mp.pi / 2) * mp.exp(-sg * w) / phi_l(w, sg) - (box if inside else 0)) ** 2

    edges = [0, mp.pi] + [2 * n * mp.pi for n in range(1, 41)]
    total = mp.quad(lambda w: f(w, True), [0, mp.pi])
    for a, b in zip(edges[1:-1], edges[2:]):
        total += mp.quad(lambda w: f(w, False), [a, b])
    return s(2 * total)


def lorentz_nod_fourier(sig, t):
    sg = mp.mpf(sig)
    t = mp.mpf(t)
    total = 0
    for n in range(0, 40):
        a, b = 2 * n * mp.pi, 2 * (n + 1) * mp.pi
        total += mp.quad(lambda w: sg * mp.sqrt(mp.pi / 2) * mp.exp(-sg * w) * mp.cos(w * t) / phi_l(w, sg),
                         [a, b])
    return s(mp.sqrt(2 / mp.pi) * total)


def gram_entries():
    out = {}
    for fam in ("gauss", "lorentz"):
        for sig in ("0.5", "1", "2"):
            sg = mp.mpf(sig)
            if fam == "gauss":
                phi = lambda t, sg=sg: mp.exp(-t * t / (2 * sg * sg))  # noqa: E731
            else:
                phi = lambda t, sg=sg: sg * sg / (sg * sg + t * t)  # noqa: E731
            out[f"{fam}:{sig}"] = [s(mp.quad(lambda t: phi(t) * phi(t - d), [-mp.inf, d / 2, mp.inf]))
                                   for d in range(6)]
    return out


def main():
    ref = {
        "theta": theta_values(),
        "theta4_series_q0.2": theta4_series_0_2(),
        "theta3_series_pi_over_2_q0.3": s(theta3_series(mp.pi / 2, "0.3")),
        "theta4_series_0_q0.3": s(1 + 2 * mp.fsum((-1) ** n * mp.mpf("0.3") ** (n * n) for n in range(1, 201))),
        "table2": riesz_table(),
        "nodal_bounds": nodal_bounds(),
        "gauss_nod": {sig: gauss_nod(sig, 6) for sig in ("0.5", "1", "2", "3")},
        "lorentz_nod": {sig: lorentz_nod(sig, (0, 1, 2, 5, 10, 20, 40)) for sig in ("0.5", "1", "2", "3")},
        "sinc_distance": {sig: sinc_distance(sig) for sig in ("0.5", "1", "2", "5")},
        "lorentz_nod_fourier_sigma2_t0.5": lorentz_nod_fourier("2", "0.5"),
        "gram_entries": gram_entries(),
        "lorentz_fourier_sigma2_w1": s(mp.sqrt(2 / mp.pi) * mp.quadosc(
            lambda t: 4 / (4 + t * t) * mp.cos(t), [0, mp.inf], omega=1)),
        "adaptive_sech_integral": s(mp.quad(lambda t: 1 / mp.cosh(t), [0, mp.pi])),
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(ref, indent=1) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
