"""Truncated exponential generating functions over exact rationals.

An :class:`Egf` of order N stores coefficients a_0..a_N of the series
F(t) = sum_n a_n t^n / n!.  Every operation is exact; an operation on
series of different orders truncates to the smaller order, so precision
loss is always explicit in the result's ``order``.

Reversion is implemented twice on purpose: :meth:`Egf.reverse` solves for
the inverse term by term, and :meth:`Egf.reverse_lagrange` recomputes it
from the Lagrange coefficient formula.  The second path exists solely to
check the first.
"""

import json
from fractions import Fraction
from math import comb, factorial

from .errors import BadConstantTerm, NotInvertible, OrderExceeded
from .qformat import parse_rat, rat_str


def _ord_mul(a, b, n):
    c = [Fraction(0)] * (n + 1)
    for i in range(min(len(a) - 1, n) + 1):
        ai = a[i]
        if not ai:
            continue
        for j in range(min(len(b) - 1, n - i) + 1):
            c[i + j] += ai * b[j]
    return c


def _ord_inv(a, n):
    inv0 = 1 / Fraction(a[0])
    out = [inv0] + [Fraction(0)] * n
    for i in range(1, n + 1):
        s = sum(a[j] * out[i - j] for j in range(1, min(i, len(a) - 1) + 1))
        out[i] = -inv0 * s
    return out


def _ord_compose(f, g, n):
    # g[0] must be 0; powers of g gain one order of vanishing each step
    out = [Fraction(0)] * (n + 1)
    out[0] = Fraction(f[0])
    power = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, min(len(f) - 1, n) + 1):
        power = _ord_mul(power, g, n)
        fk = f[k]
        if fk:
            for i in range(k, n + 1):
                out[i] += fk * power[i]
    return out


class Egf:
    """Exponential generating function truncated at a fixed order."""

    __slots__ = ("a",)

    def __init__(self, coeffs):
        a = tuple(Fraction(c) for c in coeffs)
        if not a:
            raise ValueError("an Egf needs at least its constant term")
        object.__setattr__(self, "a", a)

    def __setattr__(self, name, value):
        raise AttributeError("Egf is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "Egf":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "Egf":
        return cls([1] + [0] * order)

    @classmethod
    def t(cls, order: int) -> "Egf":
        if order < 1:
            raise ValueError("order must be at least 1")
        return cls([0, 1] + [0] * (order - 1))

    @classmethod
    def exp_linear(cls, c, order: int) -> "Egf":
        """e^{ct}: coefficient a_n = c^n."""
        out = [Fraction(1)]
        for _ in range(order):
            out.append(out[-1] * c)
        return cls(out)

    @classmethod
    def one_plus_ct(cls, c, order: int) -> "Egf":
        return cls([1, c] + [0] * (order - 1)) if order >= 1 else cls([1])

    @classmethod
    def from_ordinary(cls, coeffs) -> "Egf":
        return cls(Fraction(c) * factorial(i) for i, c in enumerate(coeffs))

    # -- basics -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.a) - 1

    def coeff(self, n: int) -> Fraction:
        if n > self.order:
            raise OrderExceeded("coefficient %d beyond order %d" % (n, self.order))
        return self.a[n]

    def ordinary(self) -> tuple:
        return tuple(c / factorial(i) for i, c in enumerate(self.a))

    def truncate(self, order: int) -> "Egf":
        if order > self.order:
            raise OrderExceeded("cannot extend order %d to %d" % (self.order, order))
        return Egf(self.a[: order + 1])

    def __eq__(self, other) -> bool:
        if isinstance(other, Egf):
            return self.a == other.a
        return NotImplemented

    def __hash__(self):
        return hash(self.a)

    def __repr__(self):
        return "Egf(%s)" % (", ".join(rat_str(c) for c in self.a))

    # -- ring operations ----------------------------------------------

    def _common(self, other):
        n = min(self.order, other.order)
        return n, self.a, other.a

    def __add__(self, other: "Egf") -> "Egf":
        n, a, b = self._common(other)
        return Egf(a[i] + b[i] for i in range(n + 1))

    def __sub__(self, other: "Egf") -> "Egf":
        n, a, b = self._common(other)
        return Egf(a[i] - b[i] for i in range(n + 1))

    def __neg__(self) -> "Egf":
        return Egf(-c for c in self.a)

    def __mul__(self, other):
        if isinstance(other, Egf):
            return self.mul(other)
        return Egf(c * other for c in self.a)

    __rmul__ = __mul__

    def mul(self, other: "Egf") -> "Egf":
        """Product of the underlying series: c_n = sum C(n,k) a_k b_{n-k}."""
        n, a, b = self._common(other)
        return Egf(
            sum(comb(i, j) * a[j] * b[i - j] for j in range(i + 1)) for i in range(n + 1)
        )

    def inv(self) -> "Egf":
        """Reciprocal series; needs a nonzero constant term."""
        if self.a[0] == 0:
            raise NotInvertible("reciprocal needs a nonzero constant term")
        n = self.order
        out = [1 / self.a[0]] + [Fraction(0)] * n
        for i in range(1, n + 1):
            s = sum(comb(i, j) * self.a[j] * out[i - j] for j in range(1, i + 1))
            out[i] = -s / self.a[0]
        return Egf(out)

    def exp(self) -> "Egf":
        """exp of the series; the constant term must be 0."""
        if self.a[0] != 0:
            raise BadConstantTerm("exp needs constant term 0")
        n = self.order
        out = [Fraction(1)] + [Fraction(0)] * n
        for i in range(n):
            out[i + 1] = sum(comb(i, k) * self.a[k + 1] * out[i - k] for k in range(i + 1))
        return Egf(out)

    def log(self) -> "Egf":
        """log of the series; the constant term must be 1."""
        if self.a[0] != 1:
            raise BadConstantTerm("log needs constant term 1")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i in range(n):
            s = sum(comb(i, k) * out[k + 1] * self.a[i - k] for k in range(i))
            out[i + 1] = self.a[i + 1] - s
        return Egf(out)

    def pow(self, q) -> "Egf":
        """(series)^q for rational q, via exp(q log); constant term must be 1."""
        if self.a[0] != 1:
            raise BadConstantTerm("pow needs constant term 1")
        return (Fraction(q) * self.log()).exp()

    def compose(self, inner: "Egf") -> "Egf":
        """self(inner(t)); the inner series must have constant term 0."""
        if inner.a[0] != 0:
            raise BadConstantTerm("composition needs inner constant term 0")
        n = min(self.order, inner.order)
        g = inner.truncate(n)
        out = [Fraction(0)] * (n + 1)
        out[0] = self.a[0]
        power = Egf.one(n)
        kfact = 1
        for k in range(1, n + 1):
            power = power.mul(g)
            kfact *= k
            ck = self.a[k] / kfact
            if ck:
                for i in range(k, n + 1):
                    out[i] += ck * power.a[i]
        return Egf(out)

    def shift_down(self) -> "Egf":
        """Divide by t; the constant term must be 0.  Order drops by one."""
        if self.a[0] != 0:
            raise BadConstantTerm("division by t needs constant term 0")
        if self.order < 1:
            raise OrderExceeded("nothing left after dividing by t")
        return Egf(self.a[i + 1] / (i + 1) for i in range(self.order))

    # -- reversion ----------------------------------------------------

    def _check_reversible(self):
        if self.a[0] != 0 or self.order < 1 or self.a[1] == 0:
            raise NotInvertible("reversion needs a(0) = 0 and a(1) != 0")

    def reverse(self) -> "Egf":
        """Compositional inverse, solved order by order.

        With G known through order n-1 and g_n pending, the coefficient of
        t^n in self(G) is linear in g_n with slope f_1, so each step is one
        exact division.
        """
        self._check_reversible()
        n_max = self.order
        f = list(self.ordinary())
        g = [Fraction(0), 1 / f[1]]
        for n in range(2, n_max + 1):
            g.append(Fraction(0))
            h = _ord_compose(f, g, n)[n]
            g[n] = -h / f[1]
        return Egf.from_ordinary(g)

    def reverse_lagrange(self) -> "Egf":
        """Compositional inverse from the Lagrange formula.

        Ordinary coefficient n of the inverse is (1/n) [t^{n-1}] (t/F)^n.
        Test oracle for :meth:`reverse`; same exactness, different route.
        """
        self._check_reversible()
        n_max = self.order
        f = self.ordinary()
        q = _ord_inv([f[i] for i in range(1, n_max + 1)], n_max - 1)  # t/F
        out = [Fraction(0)] * (n_max + 1)
        power = [Fraction(1)] + [Fraction(0)] * (n_max - 1)
        for n in range(1, n_max + 1):
            power = _ord_mul(power, q, n_max - 1)
            out[n] = power[n - 1] / n
        return Egf.from_ordinary(out)

    # -- serialization ------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"order": self.order, "egf_coeffs": [rat_str(c) for c in self.a]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> "Egf":
        data = json.loads(text)
        coeffs = [parse_rat(s) for s in data["egf_coeffs"]]
        if len(coeffs) != data["order"] + 1:
            raise ValueError("order field disagrees with coefficient count")
        return cls(coeffs)


def expm1_scaled(m, order: int) -> Egf:
    """(e^{mt} - 1)/m: a_0 = 0 and a_n = m^{n-1} for n >= 1."""
    out = [Fraction(0)]
    if order >= 1:
        out.append(Fraction(1))
        for _ in range(order - 1):
            out.append(out[-1] * m)
    return Egf(out)


def log1p_scaled(m, order: int) -> Egf:
    """ln(1 + mt)/m: a_n = (-1)^(n-1) m^(n-1) (n-1)! for n >= 1."""
    out = [Fraction(0)]
    sign = 1
    for n in range(1, order + 1):
        out.append(Fraction(sign * m ** (n - 1) * factorial(n - 1)))
        sign = -sign
    return Egf(out)
