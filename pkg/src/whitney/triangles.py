"""Number triangles, polynomial families, and the classical sequences they use.

Triangle rows
    whitney2_row    W(n,k):  W(n,k) = W(n-1,k-1) + (km+r) W(n-1,k)
    whitney1_row    w(n,k):  defined by the column series
                    (1+mz)^(-r/m) ln^k(1+mz) / (m^k k!); the recurrence
                    w(n+1,k) = w(n,k-1) - (r+mn) w(n,k) is used as a fast
                    path and is checked against the series definition.
    m_stirling2_row S(n,k) = S(n-1,k-1) + km S(n-1,k)   (= whitney2 at r=0)
    m_stirling1_row coefficients of x(x-m)...(x-(n-1)m)

Polynomial families (by kind string)
    "touchard"          sum_k S(n,k) x^k
    "touchard-inverse"  x(x-m)...(x-(n-1)m)
    "dowling"           sum_k W(n,k) x^k
    "dowling-inverse"   (x-r)(x-r-m)...(x-r-(n-1)m)
    "bernoulli"         EGF t e^{xt}/(e^t - 1)
    "euler"             EGF 2 e^{xt}/(e^t + 1)

The parameter r is accepted as an arbitrary exact rational everywhere the
algebra allows it; only the enumeration oracles require an integer.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import WhitneyError
from .poly import Poly, stepped_product
from .qformat import parse_rat, rat_str
from .series import Egf, expm1_scaled, log1p_scaled

TRIANGLE_KINDS = ("whitney2", "whitney1", "mstirling2", "mstirling1")
FAMILY_KINDS = (
    "touchard",
    "touchard-inverse",
    "dowling",
    "dowling-inverse",
    "bernoulli",
    "euler",
)
SEQUENCE_KINDS = ("bernoulli-numbers", "euler-zero-values", "cauchy1", "bell")


def _check_m(m):
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")


# -- second kind ------------------------------------------------------


@lru_cache(maxsize=None)
def _whitney2_row(m, r, n):
    if n == 0:
        return (1,)
    prev = _whitney2_row(m, r, n - 1)
    row = []
    for k in range(n + 1):
        v = prev[k - 1] if 1 <= k <= n else 0
        if k <= n - 1:
            v += (k * m + r) * prev[k]
        row.append(v)
    return tuple(row)


def whitney2_row(m: int, r, n: int) -> list:
    _check_m(m)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_whitney2_row(m, r, n))


def whitney2_row_egf(m: int, r, n: int) -> list:
    """Row n extracted from the column series e^{rz} ((e^{mz}-1)/m)^k / k!."""
    _check_m(m)
    base = Egf.exp_linear(r, n)
    step = expm1_scaled(m, n)
    row = []
    col = base
    kfact = 1
    for k in range(n + 1):
        row.append(col.a[n] / kfact)
        if k < n:
            col = col.mul(step)
            kfact *= k + 1
    return row


# -- first kind -------------------------------------------------------


@lru_cache(maxsize=None)
def _whitney1_row(m, r, n):
    if n == 0:
        return (1,)
    prev = _whitney1_row(m, r, n - 1)
    fac = r + m * (n - 1)
    row = []
    for k in range(n + 1):
        v = prev[k - 1] if 1 <= k <= n else 0
        if k <= n - 1:
            v -= fac * prev[k]
        row.append(v)
    return tuple(row)


def whitney1_row(m: int, r, n: int) -> list:
    _check_m(m)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_whitney1_row(m, r, n))


def whitney1_row_egf(m: int, r, n: int) -> list:
    """Row n straight from the defining column series."""
    _check_m(m)
    base = Egf.one_plus_ct(m, n).pow(-Fraction(r) / m) if n >= 1 else Egf.one(0)
    logpart = log1p_scaled(m, n)
    row = []
    col = base
    kfact = 1
    for k in range(n + 1):
        row.append(col.a[n] / kfact)
        if k < n:
            col = col.mul(logpart)
            kfact *= k + 1
    return row


# -- r = 0 specializations ---------------------------------------------


@lru_cache(maxsize=None)
def _m_stirling2_row(m, n):
    if n == 0:
        return (1,)
    prev = _m_stirling2_row(m, n - 1)
    row = []
    for k in range(n + 1):
        v = prev[k - 1] if 1 <= k <= n else 0
        if k <= n - 1:
            v += k * m * prev[k]
        row.append(v)
    return tuple(row)


def m_stirling2_row(m: int, n: int) -> list:
    _check_m(m)
    return list(_m_stirling2_row(m, n))


def m_stirling1_row(m: int, n: int) -> list:
    """Power-basis coefficients of x(x-m)...(x-(n-1)m), padded to length n+1."""
    _check_m(m)
    p = stepped_product(n, m, 0)
    return [p.coeff(i) for i in range(n + 1)]


# -- polynomial families ----------------------------------------------


def touchard_poly(m: int, n: int) -> Poly:
    return Poly(m_stirling2_row(m, n))


def touchard_inverse_poly(m: int, n: int) -> Poly:
    return stepped_product(n, m, 0)


def dowling_poly(m: int, r, n: int) -> Poly:
    return Poly(whitney2_row(m, r, n))


def dowling_inverse_poly(m: int, r, n: int) -> Poly:
    return stepped_product(n, m, r)


@lru_cache(maxsize=None)
def _bernoulli_numbers(n):
    e = Egf.exp_linear(1, n + 1) - Egf.one(n + 1)
    return (e.shift_down()).inv().a


def bernoulli_numbers(n: int) -> list:
    """B_0..B_n from the series t/(e^t - 1); B_1 = -1/2 in this convention."""
    return list(_bernoulli_numbers(n))


@lru_cache(maxsize=None)
def _euler_zero_values(n):
    half = Fraction(1, 2)
    return (half * (Egf.exp_linear(1, n) + Egf.one(n))).inv().a


def euler_zero_values(n: int) -> list:
    """Values E_0(0)..E_n(0) from the series 2/(e^t + 1)."""
    return list(_euler_zero_values(n))


def bernoulli_poly(n: int) -> Poly:
    b = bernoulli_numbers(n)
    return Poly(comb(n, k) * b[n - k] for k in range(n + 1))


def euler_poly(n: int) -> Poly:
    e = euler_zero_values(n)
    return Poly(comb(n, k) * e[n - k] for k in range(n + 1))


def cauchy_numbers(n: int) -> list:
    """c_0..c_n with c_j the integral of x(x-1)...(x-j+1) over [0, 1].

    Computed twice: by exact integration of the expanded product and as
    the coefficients of t/ln(1+t).  The two routes must agree.
    """
    by_integral = [stepped_product(j, 1, 0).integral_01() for j in range(n + 1)]
    series = Egf.one_plus_ct(1, n + 1).log().shift_down().inv()
    by_series = list(series.a)
    if by_integral != by_series:
        raise WhitneyError("internal inconsistency: Cauchy number routes disagree")
    return by_integral


def bell_numbers(n: int) -> list:
    return [touchard_poly(1, j)(1) for j in range(n + 1)]


def family(kind: str, n: int, m: int = None, r=None) -> Poly:
    """Degree-n member of the named polynomial family."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "touchard":
        return touchard_poly(m, n)
    if kind == "touchard-inverse":
        return touchard_inverse_poly(m, n)
    if kind == "dowling":
        return dowling_poly(m, r, n)
    if kind == "dowling-inverse":
        return dowling_inverse_poly(m, r, n)
    if kind == "bernoulli":
        return bernoulli_poly(n)
    if kind == "euler":
        return euler_poly(n)
    raise ValueError("unknown family kind %r" % (kind,))


def classical_seq(kind: str, n: int) -> list:
    """First n+1 values of the named number sequence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "bernoulli-numbers":
        return bernoulli_numbers(n)
    if kind == "euler-zero-values":
        return euler_zero_values(n)
    if kind == "cauchy1":
        return cauchy_numbers(n)
    if kind == "bell":
        return bell_numbers(n)
    raise ValueError("unknown sequence kind %r" % (kind,))


# -- triangle container and export ------------------------------------


@dataclass(frozen=True)
class Triangle:
    """Lower-triangular rows 0..N of one triangle kind, with parameters."""

    kind: str
    m: int
    r: object  # exact rational; None for the r-free kinds
    rows: tuple

    def to_csv(self) -> str:
        return "\n".join(",".join(rat_str(v) for v in row) for row in self.rows) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "m": self.m,
            "r": None if self.r is None else rat_str(self.r),
            "rows": [[rat_str(v) for v in row] for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def build_triangle(kind: str, m: int, r, n: int) -> Triangle:
    if kind == "whitney2":
        rows = tuple(tuple(whitney2_row(m, r, j)) for j in range(n + 1))
    elif kind == "whitney1":
        rows = tuple(tuple(whitney1_row(m, r, j)) for j in range(n + 1))
    elif kind == "mstirling2":
        rows, r = tuple(tuple(m_stirling2_row(m, j)) for j in range(n + 1)), None
    elif kind == "mstirling1":
        rows, r = tuple(tuple(m_stirling1_row(m, j)) for j in range(n + 1)), None
    else:
        raise ValueError("unknown triangle kind %r" % (kind,))
    return Triangle(kind, m, r, rows)


def rows_from_csv(text: str) -> list:
    """Parse CSV rows of "p/q" entries back to exact values."""
    return [
        [parse_rat(v) for v in line.split(",")]
        for line in text.strip().splitlines()
        if line.strip()
    ]


def triangle_from_json(text: str) -> Triangle:
    data = json.loads(text)
    rows = tuple(tuple(parse_rat(v) for v in row) for row in data["rows"])
    r = None if data["r"] is None else parse_rat(data["r"])
    return Triangle(data["kind"], data["m"], r, rows)
