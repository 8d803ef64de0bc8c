"""Published Riesz-constant table for the two generator families, and comparison.

The published cells are kept as the strings they were printed with, so the
number of displayed digits is known.  Two comparisons are offered:

``strict``
    Both values rounded to 3 significant figures (fewer when the cell was
    printed with fewer, e.g. ``0.037``) must coincide.
``tolerant``
    The computed value must lie within one unit of the last printed digit,
    with known misprints replaced by their corrected values (``ERRATA``).
"""

from dataclasses import dataclass
import math

from .systems import Family, GeneratorSpec, log_riesz_constants, riesz_constants

__all__ = [
    "COLUMNS",
    "SIGMAS",
    "PUBLISHED",
    "ERRATA",
    "CellCheck",
    "table_row",
    "compute_table",
    "round_sig",
    "compare",
]

COLUMNS = ("A_G", "B_G", "B_G/A_G", "A_L", "B_L", "B_L/A_L")
SIGMAS = (0.2, 0.4, 0.6, 1.0, 2.0, 3.0, 4.0, 5.0)

PUBLISHED = {
    0.2: ("0.353", "0.356", "1.01", "0.245", "0.464", "1.90"),
    0.4: ("0.415", "1.009", "2.43", "0.258", "1.600", "6.21"),
    0.6: ("0.130", "2.262", "17.46", "0.164", "3.557", "21.70"),
    1.0: ("6.45e-4", "6.283", "9.67e3", "0.037", "9.870", "267.75"),
    2.0: ("3.60e-16", "25.13", "6.98e16", "2.75e-4", "39.48", "1.43e5"),
    3.0: ("3.00e-37", "56.55", "1.88e38", "1.16e-6", "88.83", "7.68e7"),
    4.0: ("5.28e-67", "100.53", "1.91e68", "3.84e-9", "157.91", "4.11e10"),
    5.0: ("2.18e-105", "157.08", "7.19e106", "1.12e-11", "246.74", "2.20e13"),
}

# (sigma, column) -> (corrected string, reason)
ERRATA = {
    (1.0, "A_G"): (
        "6.50e-4",
        "printed 6.45e-4 contradicts the printed B_G = 6.283 and B_G/A_G = 9.67e3 "
        "of the same row, which give 6.50e-4",
    ),
}


@dataclass(frozen=True)
class CellCheck:
    sigma: float
    column: str
    computed: float
    published: str
    ok: bool
    note: str = ""

    @property
    def deviation_units(self):
        """|computed - published| in units of the last printed digit."""
        return abs(self.computed - float(self.published)) / _last_digit_unit(self.published)


def table_row(sigma):
    """Six computed cells for one sigma; ratios are quotients of logarithms."""
    out = []
    for family in (Family.GAUSS, Family.LORENTZ):
        spec = GeneratorSpec(family, sigma)
        bounds = riesz_constants(spec)
        log_a, log_b = log_riesz_constants(spec)
        ratio = bounds.ratio if family is Family.LORENTZ else math.exp(log_b - log_a)
        out.extend([bounds.lower, bounds.upper, ratio])
    return tuple(out)


def compute_table(sigmas=SIGMAS):
    return [(float(s),) + table_row(s) for s in sigmas]


def round_sig(x, digits=3):
    """Round to ``digits`` significant figures through the decimal string."""
    if x == 0 or not math.isfinite(x):
        return x
    return float(f"{x:.{digits - 1}e}")


def _printed_sig(text):
    digits = text.lower().partition("e")[0].replace(".", "").lstrip("0")
    return max(len(digits), 1)


def _last_digit_unit(text):
    mant, _, exp = text.lower().partition("e")
    decimals = len(mant.partition(".")[2])
    return 10.0 ** (int(exp or 0) - decimals)


def compare(rows, mode="strict"):
    """Check computed rows against the published table.

    Rows whose sigma is not in the table are skipped.

    Parameters
    ----------
    rows : iterable of tuples
        ``(sigma, A_G, B_G, ratio_G, A_L, B_L, ratio_L)`` as from ``compute_table``.
    mode : {"strict", "tolerant"}

    Returns
    -------
    list of CellCheck
    """
    if mode not in ("strict", "tolerant"):
        raise ValueError(f"unknown comparison mode {mode!r}")
    checks = []
    for row in rows:
        sigma, values = float(row[0]), row[1:]
        if sigma not in PUBLISHED:
            continue
        for column, value, printed in zip(COLUMNS, values, PUBLISHED[sigma]):
            note = ""
            if mode == "strict":
                digits = min(3, _printed_sig(printed))
                ok = round_sig(value, digits) == round_sig(float(printed), digits)
            else:
                if (sigma, column) in ERRATA:
                    printed, note = ERRATA[(sigma, column)]
                unit = _last_digit_unit(printed)
                ok = abs(value - float(printed)) <= unit * (1.0 + 1e-9)
            checks.append(CellCheck(sigma, column, float(value), printed, ok, note))
    return checks
