"""Executable registry of the identities the triangle families satisfy.

Every entry states one identity as a pair of independently computed sides,
evaluates both exactly over a finite parameter grid, and reports the first
counterexample if the sides ever differ.  Polynomial statements are
compared coefficient by coefficient, never by sampling; scalar statements
are compared at every grid point.

Two entries ("dowling-to-bernoulli", "dowling-to-euler") are flagged: the
printed derivations they come from contain apparent slips, so their
reports always carry two outcomes: the statement exactly as printed, and
the same expansion with constants recomputed from the connection-constant
array.  The report passes only when both routes verify.
"""

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import UnknownIdentity
from .grammar import XYPoly, derive_n, whitney_grammar
from .operators import forward_difference_op, scaled_log_op, shift_op
from .poly import Poly, stepped_product, xy_accumulate, xy_expand_sum, xy_product
from .qformat import rat_str
from .riordan import connection_constants
from .series import Egf, expm1_scaled, log1p_scaled
from .triangles import (
    bernoulli_numbers,
    bernoulli_poly,
    cauchy_numbers,
    dowling_inverse_poly,
    dowling_poly,
    euler_poly,
    euler_zero_values,
    m_stirling1_row,
    m_stirling2_row,
    touchard_inverse_poly,
    touchard_poly,
    whitney1_row,
    whitney2_row,
)

# -- small helpers ------------------------------------------------------


def _ipow(base, e):
    # 0^0 = 1, matching the empty-product reading used in the stated sums
    return 1 if e == 0 else base ** e


def _comb0(n, k):
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _w2(m, r, n, k):
    if n < 0 or k < 0 or k > n:
        return 0
    return whitney2_row(m, r, n)[k]


def _w1(m, r, n, k):
    if n < 0 or k < 0 or k > n:
        return 0
    return whitney1_row(m, r, n)[k]


def _xpow(n):
    return Poly([0] * n + [1])


def _touchard_at_one(m, n):
    return sum(m_stirling2_row(m, n))


def exact_det(rows) -> Fraction:
    """Determinant by fraction-free Bareiss elimination.

    Intermediate divisions are exact over an integral domain, so the
    result is exact for integer or rational entries alike.
    """
    a = [[Fraction(v) for v in row] for row in rows]
    n = len(a)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for i in range(n - 1):
        if a[i][i] == 0:
            for j in range(i + 1, n):
                if a[j][i] != 0:
                    a[i], a[j] = a[j], a[i]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                a[j][k] = (a[j][k] * a[i][i] - a[j][i] * a[i][k]) / prev
            a[j][i] = Fraction(0)
        prev = a[i][i]
    return sign * a[n - 1][n - 1]


def dowling_from_determinant(m, r, n) -> Poly:
    """(-1)^n det of the bordered first-kind matrix, expanded along the x-row.

    The matrix is (n+1) x (n+1): row 0 holds 1, x, ..., x^n and row i >= 1
    holds the first-kind entries w(j, i-1) for j = 0..n.
    """
    coeffs = []
    for j in range(n + 1):
        minor = [
            [_w1(m, r, jj, i - 1) for jj in range(n + 1) if jj != j]
            for i in range(1, n + 1)
        ]
        coeffs.append((-1) ** j * exact_det(minor))
    return Poly(c * (-1) ** n for c in coeffs)


def _sheffer_pair_bernoulli(order):
    return (expm1_scaled(1, order + 1).shift_down(), Egf.t(order))


def _sheffer_pair_euler(order):
    return (Fraction(1, 2) * (Egf.exp_linear(1, order) + Egf.one(order)), Egf.t(order))


def _sheffer_pair_dowling(m, r, order):
    g = Egf.one_plus_ct(m, order).pow(-Fraction(r) / m)
    return (g, log1p_scaled(m, order))


# -- evaluators ----------------------------------------------------------
# Each yields (params, lhs, rhs); the runner compares lhs == rhs exactly.


def _ev_egf_whitney2(grid):
    n_max = grid["max_n"]
    for m in grid["m"]:
        for r in grid["r"]:
            col = Egf.exp_linear(r, n_max)
            step = expm1_scaled(m, n_max)
            kfact = 1
            for k in range(n_max + 1):
                lhs = [col.a[n] / kfact for n in range(n_max + 1)]
                rhs = [_w2(m, r, n, k) for n in range(n_max + 1)]
                yield {"m": m, "r": r, "k": k}, lhs, rhs
                if k < n_max:
                    col = col.mul(step)
                    kfact *= k + 1


def _ev_egf_dowling(grid):
    n_max = grid["max_n"]
    for m in grid["m"]:
        for r in grid["r"]:
            growth = expm1_scaled(m, n_max)
            rt = Egf([0, r] + [0] * (n_max - 1))
            for u in grid["u"]:
                series = (rt + u * growth).exp()
                lhs = list(series.a)
                rhs = [dowling_poly(m, r, n)(u) for n in range(n_max + 1)]
                yield {"m": m, "r": r, "u": u}, lhs, rhs


def _ev_lemma_grammar_dowling(grid):
    for m in grid["m"]:
        g = whitney_grammar(m)
        for r in grid["r"]:
            state = XYPoly.monomial(1, r)
            for n in range(grid["max_n"] + 1):
                row = whitney2_row(m, r, n)
                rhs = XYPoly({(1, m * k + r): row[k] for k in range(n + 1)})
                yield {"m": m, "r": r, "n": n}, state, rhs
                state = derive_n(g, state, 1)


def _ev_dowling_shift(grid):
    for m in grid["m"]:
        for r in grid["r"]:
            for l in grid["l"]:
                for n in range(grid["max_n"] + 1):
                    lhs = dowling_poly(m, r + l, n)
                    rhs = Poly()
                    for k in range(n + 1):
                        rhs = rhs + comb(n, k) * _ipow(l, n - k) * dowling_poly(m, r, k)
                    yield {"m": m, "r": r, "l": l, "n": n}, lhs, rhs


def _ev_dowling_shift_l1(grid):
    inner = dict(grid)
    inner["l"] = (1,)
    for params, lhs, rhs in _ev_dowling_shift(inner):
        del params["l"]
        yield params, lhs, rhs


def _ev_spivey(grid):
    for m in grid["m"]:
        for r in grid["r"]:
            for n in range(grid["max_n"] + 1):
                for h in range(grid["max_h"] + 1):
                    lhs = dowling_poly(m, r, n + h)
                    rhs = Poly()
                    for k in range(n + 1):
                        base = comb(n, k) * dowling_poly(m, r, k)
                        for j in range(h + 1):
                            c = _w2(m, r, h, j) * _ipow(j * m, n - k)
                            if c:
                                rhs = rhs + (c * base).mul_xpow(j)
                    yield {"m": m, "r": r, "n": n, "h": h}, lhs, rhs


def _ev_whitney_convolution(grid):
    for m in grid["m"]:
        for r in grid["r"]:
            for n in range(grid["max_n"] + 1):
                for h in range(grid["max_h"] + 1):
                    lhs = whitney2_row(m, r, n + h)
                    rhs = [
                        sum(
                            comb(n, k)
                            * _w2(m, r, h, j)
                            * _w2(m, r, k, s - j)
                            * _ipow(j * m, n - k)
                            for k in range(n + 1)
                            for j in range(h + 1)
                        )
                        for s in range(n + h + 1)
                    ]
                    yield {"m": m, "r": r, "n": n, "h": h}, lhs, rhs


def _ev_dowling_recurrence(grid):
    for m in grid["m"]:
        for r in grid["r"]:
            for n in range(grid["max_n"] + 1):
                lhs = dowling_poly(m, r, n + 1)
                acc = Poly()
                for j in range(n + 1):
                    acc = acc + comb(n, j) * m ** (n - j) * dowling_poly(m, r, j)
                rhs = r * dowling_poly(m, r, n) + acc.mul_xpow(1)
                yield {"m": m, "r": r, "n": n}, lhs, rhs


def _ev_whitney_recurrence(grid):
    for m in grid["m"]:
        for r in grid["r"]:
            for n in range(grid["max_n"] + 1):
                lhs = whitney2_row(m, r, n + 1)
                rhs = [
                    r * _w2(m, r, n, k)
                    + sum(
                        comb(n, j) * m ** (n - j) * _w2(m, r, j, k - 1)
                        for j in range(max(k - 1, 0), n + 1)
                    )
                    for k in range(n + 2)
                ]
                yield {"m": m, "r": r, "n": n}, lhs, rhs


def _ev_r_shift_s(grid):
    for m in grid["m"]:
        for r in grid["r"]:
            for s in grid["s"]:
                for n in range(grid["max_n"] + 1):
                    lhs = dowling_poly(m, r, n)
                    rhs = Poly()
                    for j in range(n + 1):
                        rhs = rhs + comb(n, j) * _ipow(r - s, n - j) * dowling_poly(m, s, j)
                    yield {"m": m, "r": r, "s": s, "n": n}, lhs, rhs


def _ev_whitney_r_shift(grid):
    for m in grid["m"]:
        for r in grid["r"]:
            for s in grid["s"]:
                for n in range(grid["max_n"] + 1):
                    lhs = whitney2_row(m, r, n)
                    rhs = [
                        sum(
                            comb(n, j) * _ipow(r - s, n - j) * _w2(m, s, j, k)
                            for j in range(n + 1)
                        )
                        for k in range(n + 1)
                    ]
                    yield {"m": m, "r": r, "s": s, "n": n}, lhs, rhs


def _ev_touchard_binomial(grid):
    for m in grid["m"]:
        for n in range(grid["max_n"] + 1):
            lhs = xy_expand_sum(touchard_poly(m, n))
            rhs = {}
            for k in range(n + 1):
                xy_accumulate(
                    rhs,
                    xy_product(touchard_poly(m, k), touchard_poly(m, n - k)),
                    comb(n, k),
                )
            yield {"m": m, "n": n}, lhs, rhs


def _ev_umbral_inverse_touchard(grid):
    for m in grid["m"]:
        for n in range(grid["max_n"] + 1):
            lhs = Poly()
            srow = m_stirling2_row(m, n)
            for k in range(n + 1):
                lhs = lhs + srow[k] * touchard_inverse_poly(m, k)
            yield {"m": m, "n": n, "direction": "inverse-into-touchard"}, lhs, _xpow(n)
            lhs = Poly()
            frow = m_stirling1_row(m, n)
            for k in range(n + 1):
                lhs = lhs + frow[k] * touchard_poly(m, k)
            yield {"m": m, "n": n, "direction": "touchard-into-inverse"}, lhs, _xpow(n)


def _ev_delta_ops(grid):
    for m in grid["m"]:
        for n in range(1, grid["max_n"] + 1):
            diff = forward_difference_op(m, n)
            lhs = diff(touchard_inverse_poly(m, n))
            rhs = n * touchard_inverse_poly(m, n - 1)
            yield {"m": m, "n": n, "operator": "forward-difference"}, lhs, rhs
            logop = scaled_log_op(m, n)
            lhs = logop(touchard_poly(m, n))
            rhs = n * touchard_poly(m, n - 1)
            yield {"m": m, "n": n, "operator": "scaled-log"}, lhs, rhs


def _ev_binomial_recurrences(grid):
    x = Poly.x()
    for m in grid["m"]:
        for n in range(1, grid["max_n"] + 1):
            lhs = touchard_inverse_poly(m, n)
            rhs = x * touchard_inverse_poly(m, n - 1).shifted(-m)
            yield {"m": m, "n": n, "family": "touchard-inverse"}, lhs, rhs
            prev = touchard_poly(m, n - 1)
            lhs = touchard_poly(m, n)
            rhs = x * (prev + m * prev.deriv())
            yield {"m": m, "n": n, "family": "touchard"}, lhs, rhs


def _ev_sheffer_binomial_dowling(grid):
    for m in grid["m"]:
        for r in grid["r"]:
            for n in range(grid["max_n"] + 1):
                lhs = xy_expand_sum(dowling_poly(m, r, n))
                rhs = {}
                for k in range(n + 1):
                    xy_accumulate(
                        rhs,
                        xy_product(dowling_poly(m, r, k), touchard_poly(m, n - k)),
                        comb(n, k),
                    )
                yield {"m": m, "r": r, "n": n}, lhs, rhs


def _ev_dowling_umbral_inverse(grid):
    for m in grid["m"]:
        for r in grid["r"]:
            for n in range(grid["max_n"] + 1):
                lhs = dowling_inverse_poly(m, r, n)
                rhs = shift_op(-r, n)(touchard_inverse_poly(m, n))
                yield {"m": m, "r": r, "n": n, "part": "shifted-product"}, lhs, rhs
                acc = Poly()
                for k in range(n + 1):
                    acc = acc + _w2(m, r, n, k) * dowling_inverse_poly(m, r, k)
                yield {"m": m, "r": r, "n": n, "part": "second-into-inverse"}, acc, _xpow(n)
                acc = Poly()
                for k in range(n + 1):
                    acc = acc + _w1(m, r, n, k) * dowling_poly(m, r, k)
                yield {"m": m, "r": r, "n": n, "part": "first-into-dowling"}, acc, _xpow(n)


def _ev_dowlstir(grid):
    for m in grid["m"]:
        for r in grid["r"]:
            for n in range(grid["max_n"] + 1):
                lhs = dowling_poly(m, r, n)
                rhs = Poly()
                dp = touchard_poly(m, n)
                for k in range(n + 1):
                    c = Fraction(stepped_product(k, m, 0)(r), factorial(k))
                    rhs = rhs + c * dp
                    dp = dp.deriv()
                yield {"m": m, "r": r, "n": n}, lhs, rhs


def _ev_bernoulli_to_dowling(grid):
    n_max = grid["max_n"]
    bnum = bernoulli_numbers(n_max)
    for m in grid["m"]:
        for r in grid["r"]:
            for n in range(n_max + 1):
                lhs = bernoulli_poly(n)
                rhs = Poly()
                for k in range(n + 1):
                    c = sum(
                        comb(n, l) * bnum[n - l] * _w1(m, r, l, k) for l in range(k, n + 1)
                    )
                    rhs = rhs + c * dowling_poly(m, r, k)
                yield {"m": m, "r": r, "n": n}, lhs, rhs


def _ev_euler_to_dowling(grid):
    n_max = grid["max_n"]
    enum_ = euler_zero_values(n_max)
    for m in grid["m"]:
        for r in grid["r"]:
            for n in range(n_max + 1):
                lhs = euler_poly(n)
                rhs = Poly()
                for k in range(n + 1):
                    c = sum(
                        comb(n, l) * enum_[n - l] * _w1(m, r, l, k) for l in range(k, n + 1)
                    )
                    rhs = rhs + c * dowling_poly(m, r, k)
                yield {"m": m, "r": r, "n": n}, lhs, rhs


def _ev_dowling_to_bernoulli(grid):
    n_max = grid["max_n"]
    bnum = bernoulli_numbers(n_max + 1)
    for m in grid["m"]:
        t_one = [_touchard_at_one(m, s) for s in range(n_max + 2)]
        for r in grid["r"]:
            for n in range(n_max + 1):
                lhs = dowling_poly(m, r, n)
                rhs = Poly()
                for k in range(n + 1):
                    c = Fraction(0)
                    for l in range(n - k + 1):
                        for s in range(l + 1):
                            c += (
                                comb(n + 1, l + 1)
                                * comb(l + 1, s + 1)
                                * _w2(m, r, n - l, k)
                                * Fraction(m) ** (l - s)
                                * t_one[s + 1]
                                * bnum[l - s]
                            )
                    rhs = rhs + Fraction(c, n + 1) * bernoulli_poly(k)
                yield {"m": m, "r": r, "n": n}, lhs, rhs


def _ev_dowling_to_bernoulli_corrected(grid):
    # correction route: take the constants straight off the
    # connection-constant array between the two Sheffer pairs
    n_max = grid["max_n"]
    for m in grid["m"]:
        for r in grid["r"]:
            arr = connection_constants(
                _sheffer_pair_bernoulli(n_max), _sheffer_pair_dowling(m, r, n_max)
            )
            for n in range(n_max + 1):
                lhs = dowling_poly(m, r, n)
                rhs = Poly()
                for k in range(n + 1):
                    rhs = rhs + arr.entry(n, k) * bernoulli_poly(k)
                yield {"m": m, "r": r, "n": n}, lhs, rhs


def _ev_dowling_to_euler(grid):
    n_max = grid["max_n"]
    for m in grid["m"]:
        t_one = [_touchard_at_one(m, s) for s in range(n_max + 1)]
        for r in grid["r"]:
            for n in range(n_max + 1):
                lhs = dowling_poly(m, r, n)
                rhs = Poly()
                for k in range(n + 1):
                    c = Fraction(1, 2) * sum(
                        comb(n, l) * _w2(m, r, n - l, k) * t_one[l]
                        for l in range(n - k + 1)
                    ) + Fraction(1, 2) * _w2(m, r, n, k)
                    rhs = rhs + c * euler_poly(k)
                yield {"m": m, "r": r, "n": n}, lhs, rhs


def _ev_dowling_to_euler_corrected(grid):
    n_max = grid["max_n"]
    for m in grid["m"]:
        for r in grid["r"]:
            arr = connection_constants(
                _sheffer_pair_euler(n_max), _sheffer_pair_dowling(m, r, n_max)
            )
            for n in range(n_max + 1):
                lhs = dowling_poly(m, r, n)
                rhs = Poly()
                for k in range(n + 1):
                    rhs = rhs + arr.entry(n, k) * euler_poly(k)
                yield {"m": m, "r": r, "n": n}, lhs, rhs


def _ev_az_w2(grid):
    n_max = grid["max_n"]
    cnum = cauchy_numbers(n_max)
    for m in grid["m"]:
        for r in grid["r"]:
            for n in range(n_max):
                lhs = [_w2(m, r, n + 1, k + 1) for k in range(n + 1)]
                rhs = [
                    sum(
                        Fraction(n + 1, k + 1)
                        * comb(k + j, j)
                        * cnum[j]
                        * Fraction(m) ** j
                        * _w2(m, r, n, k + j)
                        for j in range(n - k + 1)
                    )
                    for k in range(n + 1)
                ]
                yield {"m": m, "r": r, "n": n, "identity": "a-sequence-row"}, lhs, rhs
            for n in range(1, n_max + 1):
                lhs = [_w2(m, r, n, k) - r * _w2(m, r, n - 1, k) for k in range(n + 1)]
                rhs = [
                    sum(
                        _comb0(n - 1, l - 1) * m ** (n - l) * _w2(m, r, l - 1, k - 1)
                        for l in range(max(k, 1), n + 1)
                    )
                    for k in range(n + 1)
                ]
                yield {"m": m, "r": r, "n": n, "identity": "g-shift"}, lhs, rhs
                lhs = [k * _w2(m, r, n, k) for k in range(n + 1)]
                rhs = [
                    sum(
                        _comb0(n, l - 1) * m ** (n - l) * _w2(m, r, l - 1, k - 1)
                        for l in range(max(k, 1), n + 1)
                    )
                    for k in range(n + 1)
                ]
                yield {"m": m, "r": r, "n": n, "identity": "column-scale"}, lhs, rhs


def _ev_az_w1(grid):
    n_max = grid["max_n"]
    bnum = bernoulli_numbers(n_max)
    for m in grid["m"]:
        for r in grid["r"]:
            for n in range(n_max):
                lhs = [_w1(m, r, n + 1, k + 1) for k in range(n + 1)]
                rhs = [
                    sum(
                        Fraction(n + 1, k + 1)
                        * comb(k + j, j)
                        * bnum[j]
                        * Fraction(m) ** j
                        * _w1(m, r, n, k + j)
                        for j in range(n - k + 1)
                    )
                    for k in range(n + 1)
                ]
                yield {"m": m, "r": r, "n": n, "identity": "a-sequence-row"}, lhs, rhs
            for n in range(1, n_max + 1):
                lhs = [
                    _w1(m, r, n, k)
                    + r
                    * sum(
                        comb(n - 1, l)
                        * factorial(n - l - 1)
                        * _w1(m, r, l, k)
                        * (-m) ** (n - l - 1)
                        for l in range(n)
                    )
                    for k in range(n + 1)
                ]
                rhs = [
                    sum(
                        _comb0(n - 1, l - 1)
                        * (-m) ** (n - l)
                        * factorial(n - l)
                        * _w1(m, r, l - 1, k - 1)
                        for l in range(max(k, 1), n + 1)
                    )
                    for k in range(n + 1)
                ]
                yield {"m": m, "r": r, "n": n, "identity": "g-shift"}, lhs, rhs
                lhs = [k * _w1(m, r, n, k) for k in range(n + 1)]
                rhs = [
                    sum(
                        _comb0(n, l - 1)
                        * (-m) ** (n - l)
                        * factorial(n - l)
                        * _w1(m, r, l - 1, k - 1)
                        for l in range(max(k, 1), n + 1)
                    )
                    for k in range(n + 1)
                ]
                yield {"m": m, "r": r, "n": n, "identity": "column-scale"}, lhs, rhs


def _ev_orthogonality(grid):
    n_max = grid["max_n"]
    for m in grid["m"]:
        for r in grid["r"]:
            for n in range(n_max + 1):
                lhs = [
                    sum(_w2(m, r, n, i) * _w1(m, r, i, s) for i in range(s, n + 1))
                    for s in range(n + 1)
                ]
                rhs = [1 if s == n else 0 for s in range(n + 1)]
                yield {"m": m, "r": r, "n": n, "direction": "second-first"}, lhs, rhs
                lhs = [
                    sum(_w1(m, r, n, i) * _w2(m, r, i, s) for i in range(s, n + 1))
                    for s in range(n + 1)
                ]
                yield {"m": m, "r": r, "n": n, "direction": "first-second"}, lhs, rhs


def _ev_inverse_relation(grid):
    n_max = grid["max_n"]
    for m in grid["m"]:
        for r in grid["r"]:
            for seed in grid["seeds"]:
                rng = random.Random("inverse-relation-%d-%s-%d" % (m, r, seed))
                f = [rng.randint(-9, 9) for _ in range(n_max + 1)]
                g = [
                    sum(_w2(m, r, n, s) * f[s] for s in range(n + 1))
                    for n in range(n_max + 1)
                ]
                back = [
                    sum(_w1(m, r, n, s) * g[s] for s in range(n + 1))
                    for n in range(n_max + 1)
                ]
                yield {"m": m, "r": r, "seed": seed, "direction": "second-then-first"}, back, f
                g2 = [rng.randint(-9, 9) for _ in range(n_max + 1)]
                f2 = [
                    sum(_w1(m, r, n, s) * g2[s] for s in range(n + 1))
                    for n in range(n_max + 1)
                ]
                back2 = [
                    sum(_w2(m, r, n, s) * f2[s] for s in range(n + 1))
                    for n in range(n_max + 1)
                ]
                yield {"m": m, "r": r, "seed": seed, "direction": "first-then-second"}, back2, g2


def _ev_power_in_dowling(grid):
    for m in grid["m"]:
        for r in grid["r"]:
            for n in range(grid["max_n"] + 1):
                acc = Poly()
                for k in range(n + 1):
                    acc = acc + _w1(m, r, n, k) * dowling_poly(m, r, k)
                yield {"m": m, "r": r, "n": n, "part": "power-expansion"}, acc, _xpow(n)
                rest = Poly()
                for k in range(n):
                    rest = rest + _w1(m, r, n, k) * dowling_poly(m, r, k)
                lhs = dowling_poly(m, r, n)
                yield {"m": m, "r": r, "n": n, "part": "rearranged"}, lhs, _xpow(n) - rest


def _ev_determinantal(grid):
    for m in grid["m"]:
        for r in grid["r"]:
            for n in range(grid["max_n"] + 1):
                lhs = dowling_poly(m, r, n)
                rhs = dowling_from_determinant(m, r, n)
                yield {"m": m, "r": r, "n": n}, lhs, rhs


# -- registry ------------------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    summary: str
    mode: str
    grid: dict
    evaluate: object
    flagged: bool = False
    variant: object = None


@dataclass
class CheckReport:
    """Outcome of one identity check.

    ``grid_size`` counts comparisons evaluated; evaluation stops at the
    first counterexample, so on failure it is the 1-based index of the
    failing point.  A counterexample records the grid point and both
    rendered sides, enough to re-evaluate it with matching overrides.
    """

    name: str
    grid_size: int
    status: str
    counterexample: dict | None
    elapsed_ms: int
    notes: tuple = ()

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "grid_size": self.grid_size,
            "status": self.status,
            "counterexample": self.counterexample,
            "elapsed_ms": self.elapsed_ms,
            "notes": list(self.notes),
        }


_BASE = {"max_n": 8, "m": (1, 2, 3), "r": (0, 1, 2, 3)}

REGISTRY: dict = {}


def _register(name, summary, mode, evaluate, grid=None, flagged=False, variant=None):
    g = dict(_BASE)
    g.update(grid or {})
    REGISTRY[name] = IdentityCheck(name, summary, mode, g, evaluate, flagged, variant)


_register(
    "egf-whitney2",
    "column k series of the second-kind triangle is e^{rz}((e^{mz}-1)/m)^k/k!",
    "numeric-at-points",
    _ev_egf_whitney2,
)
_register(
    "egf-dowling",
    "exp(rt + u(e^{mt}-1)/m) generates the Dowling row polynomials",
    "numeric-at-points",
    _ev_egf_dowling,
    grid={"u": (0, 1, 2, 3)},
)
_register(
    "lemma-grammar-dowling",
    "n-th grammar derivative of y x^r equals y x^r times the Dowling polynomial at x^m",
    "bivariate-polynomial",
    _ev_lemma_grammar_dowling,
)
_register(
    "dowling-shift",
    "D_{m,r+l}(n,u) = sum_k C(n,k) l^{n-k} D_{m,r}(k,u)",
    "polynomial-in-u",
    _ev_dowling_shift,
    grid={"l": (0, 1, 2, 3)},
)
_register(
    "dowling-shift-l1",
    "D_{m,r+1}(n,u) = sum_k C(n,k) D_{m,r}(k,u)",
    "polynomial-in-u",
    _ev_dowling_shift_l1,
)
_register(
    "spivey",
    "D(n+h,u) = sum_{k,j} C(n,k) D(k,u) W(h,j) u^j (jm)^{n-k}",
    "polynomial-in-u",
    _ev_spivey,
    grid={"max_h": 8},
)
_register(
    "whitney-convolution",
    "W(n+h,s) = sum_{k,j} C(n,k) W(h,j) W(k,s-j) (jm)^{n-k}",
    "numeric-at-points",
    _ev_whitney_convolution,
    grid={"max_h": 8},
)
_register(
    "dowling-recurrence",
    "D(n+1,u) = r D(n,u) + u sum_j C(n,j) m^{n-j} D(j,u)",
    "polynomial-in-u",
    _ev_dowling_recurrence,
)
_register(
    "whitney-recurrence",
    "W(n+1,k) = r W(n,k) + sum_j C(n,j) m^{n-j} W(j,k-1)",
    "numeric-at-points",
    _ev_whitney_recurrence,
)
_register(
    "r-shift-s",
    "D_{m,r}(n,u) = sum_j C(n,j) (r-s)^{n-j} D_{m,s}(j,u)",
    "polynomial-in-u",
    _ev_r_shift_s,
    grid={"s": (0, 1, 2, 3)},
)
_register(
    "whitney-r-shift",
    "W_{m,r}(n,k) = sum_j C(n,j) (r-s)^{n-j} W_{m,s}(j,k)",
    "numeric-at-points",
    _ev_whitney_r_shift,
    grid={"s": (0, 1, 2, 3)},
)
_register(
    "touchard-binomial",
    "the generalized Touchard family is of binomial type",
    "bivariate-polynomial",
    _ev_touchard_binomial,
)
_register(
    "umbral-inverse-T",
    "umbral composition of the Touchard family with its inverse gives x^n",
    "polynomial-in-u",
    _ev_umbral_inverse_touchard,
)
_register(
    "delta-ops",
    "(E^m-I)/m lowers the inverse family; ln(1+mD)/m lowers the Touchard family",
    "polynomial-in-u",
    _ev_delta_ops,
)
_register(
    "binomial-recurrences",
    "That_n(x) = x That_{n-1}(x-m) and T_n(x) = x(1+mD) T_{n-1}(x)",
    "polynomial-in-u",
    _ev_binomial_recurrences,
)
_register(
    "sheffer-binomial-D",
    "D_n(x+y) = sum_k C(n,k) D_k(x) T_{n-k}(y)",
    "bivariate-polynomial",
    _ev_sheffer_binomial_dowling,
)
_register(
    "dowling-umbral-inverse",
    "the inverse Dowling family is the r-shifted stepped product; compositions give x^n",
    "polynomial-in-u",
    _ev_dowling_umbral_inverse,
)
_register(
    "dowlstir",
    "D_n(x) = sum_k r(r-m)...(r-(k-1)m)/k! times the k-th derivative of T_n",
    "polynomial-in-u",
    _ev_dowlstir,
)
_register(
    "bernoulli-to-dowling",
    "Bernoulli polynomials expanded in the Dowling family through first-kind entries",
    "polynomial-in-u",
    _ev_bernoulli_to_dowling,
)
_register(
    "euler-to-dowling",
    "Euler polynomials expanded in the Dowling family through first-kind entries",
    "polynomial-in-u",
    _ev_euler_to_dowling,
)
_register(
    "dowling-to-bernoulli",
    "Dowling polynomials expanded in Bernoulli polynomials (literal stated form)",
    "polynomial-in-u",
    _ev_dowling_to_bernoulli,
    grid={"max_n": 6},
    flagged=True,
    variant=_ev_dowling_to_bernoulli_corrected,
)
_register(
    "dowling-to-euler",
    "Dowling polynomials expanded in Euler polynomials (literal stated form)",
    "polynomial-in-u",
    _ev_dowling_to_euler,
    flagged=True,
    variant=_ev_dowling_to_euler_corrected,
)
_register(
    "az-recurrences-W2",
    "three row recurrences of the second-kind array (Cauchy-number A-sequence)",
    "numeric-at-points",
    _ev_az_w2,
)
_register(
    "az-recurrences-W1",
    "three row recurrences of the first-kind array (Bernoulli-number A-sequence)",
    "numeric-at-points",
    _ev_az_w1,
)
_register(
    "orthogonality",
    "the two triangles are mutually inverse, entrywise",
    "numeric-at-points",
    _ev_orthogonality,
    grid={"max_n": 12},
)
_register(
    "inverse-relation",
    "f = w * g holds exactly when g = W * f, on random integer sequences",
    "numeric-at-points",
    _ev_inverse_relation,
    grid={"max_n": 10, "seeds": (0, 1, 2)},
)
_register(
    "power-in-dowling",
    "x^n = sum_k w(n,k) D_k(x) and its rearrangement",
    "polynomial-in-u",
    _ev_power_in_dowling,
)
_register(
    "determinantal",
    "(-1)^n times the bordered first-kind determinant equals D_n(x)",
    "polynomial-in-u",
    _ev_determinantal,
    grid={"m": (1, 2), "r": (0, 1, 2)},
)


def registry_names() -> list:
    return sorted(REGISTRY)


def _render(v):
    if isinstance(v, Poly):
        return [rat_str(c) for c in v.coeffs]
    if isinstance(v, XYPoly):
        return [[a, b, rat_str(c)] for (a, b), c in sorted(v.terms.items())]
    if isinstance(v, dict):
        return [[i, j, rat_str(c)] for (i, j), c in sorted(v.items())]
    if isinstance(v, (list, tuple)):
        return [_render(x) for x in v]
    return rat_str(v)


def _scan(evaluate, grid):
    points = 0
    for params, lhs, rhs in evaluate(grid):
        points += 1
        if lhs != rhs:
            return points, {
                "params": dict(params),
                "lhs": _render(lhs),
                "rhs": _render(rhs),
            }
    return points, None


def run_check(name: str, overrides: dict = None) -> CheckReport:
    """Evaluate one registered identity over its grid (or an override).

    Overrides may replace any default grid key, e.g. {"max_n": 4,
    "m": (2,), "r": (3,)}.  Passing the parameters of a reported
    counterexample as singleton overrides re-evaluates that point.
    """
    check = REGISTRY.get(name)
    if check is None:
        raise UnknownIdentity("no identity named %r; see registry_names()" % (name,))
    grid = dict(check.grid)
    for key, value in (overrides or {}).items():
        if key not in grid:
            raise ValueError("identity %r has no grid key %r" % (name, key))
        grid[key] = value
    start = time.perf_counter()
    points, fail = _scan(check.evaluate, grid)
    notes = []
    if check.flagged:
        # flagged entries always report both outcomes: the statement as
        # printed, and the form recomputed from the connection constants
        notes.append(
            "literal statement: %s" % ("pass" if fail is None else "FAIL")
        )
        _, v_fail = _scan(check.variant, grid)
        notes.append(
            "connection-constant route: %s" % ("pass" if v_fail is None else "FAIL")
        )
        if v_fail is not None:
            fail = dict(fail) if fail is not None else {}
            fail["correction_counterexample"] = v_fail
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    return CheckReport(
        name=name,
        grid_size=points,
        status="pass" if fail is None else "fail",
        counterexample=fail,
        elapsed_ms=elapsed_ms,
        notes=tuple(notes),
    )


def run_all(overrides: dict = None, names=None) -> list:
    """Run every registered check (sorted by name) and return the reports."""
    out = []
    for name in registry_names() if names is None else sorted(names):
        applicable = None
        if overrides:
            applicable = {
                k: v for k, v in overrides.items() if k in REGISTRY[name].grid
            }
        out.append(run_check(name, applicable))
    return out
