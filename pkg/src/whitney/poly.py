"""Dense univariate polynomials over exact rationals.

Coefficients may be ``int`` or ``fractions.Fraction``; arithmetic never
rounds.  Values are immutable and safe to share.
"""

from fractions import Fraction
from math import comb


class Poly:
    """Polynomial stored as coefficients by ascending power of x.

    No trailing zero coefficient is stored, so equality is structural and
    ``degree`` of the zero polynomial is -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return len(self.coeffs) == len(other.coeffs) and all(
                a == b for a, b in zip(self.coeffs, other.coeffs)
            )
        return NotImplemented

    def __hash__(self):
        return hash(tuple(Fraction(c) for c in self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) - other.coeff(i) for i in range(n))

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        return Poly(c * other for c in self.coeffs)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly((1,))
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, v):
        out = 0
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def deriv(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def shifted(self, a) -> "Poly":
        """p(x + a), expanded binomially."""
        out = [0] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            pw = 1
            for i in range(k, -1, -1):
                out[i] += c * comb(k, i) * pw
                pw *= a
        return Poly(out)

    def mul_xpow(self, j: int) -> "Poly":
        if not self.coeffs:
            return self
        return Poly((0,) * j + self.coeffs)

    def integral_01(self):
        """Exact integral of the polynomial over [0, 1]."""
        return sum((Fraction(c) / (i + 1) for i, c in enumerate(self.coeffs)), Fraction(0))

    def __repr__(self):
        return "Poly(%r)" % (list(self.coeffs),)


def stepped_product(n: int, m, shift=0) -> Poly:
    """(x - shift)(x - shift - m)...(x - shift - (n-1)m); the empty product is 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = Poly((1,))
    for j in range(n):
        out = out * Poly((-(shift + j * m), 1))
    return out


def falling_basis_expand(p: Poly) -> list:
    """Coefficients c_0..c_d with p(x) = sum c_k x(x-1)...(x-k+1).

    Computed by forward differences: c_k = (delta^k p)(0) / k!, which keeps
    the expansion independent of any triangle recurrence.
    """
    if not p:
        return [Fraction(0)]
    vals = [Fraction(p(i)) for i in range(p.degree + 1)]
    out = []
    kfact = 1
    k = 0
    while vals:
        out.append(vals[0] / kfact)
        vals = [b - a for a, b in zip(vals, vals[1:])]
        k += 1
        kfact *= k
    return out


def from_falling_basis(cs) -> Poly:
    """Rebuild sum c_k x(x-1)...(x-k+1) as an ordinary polynomial."""
    out = Poly()
    for k, c in enumerate(cs):
        if c != 0:
            out = out + c * stepped_product(k, 1, 0)
    return out


def xy_expand_sum(p: Poly) -> dict:
    """Coefficients of p(x + y) as a map (i, j) -> coefficient of x^i y^j."""
    out = {}
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        for i in range(k + 1):
            key = (i, k - i)
            v = out.get(key, 0) + c * comb(k, i)
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def xy_product(px: Poly, py: Poly) -> dict:
    """Coefficients of px(x) * py(y) as a map (i, j) -> coefficient."""
    out = {}
    for i, a in enumerate(px.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(py.coeffs):
            if b == 0:
                continue
            out[(i, j)] = a * b
    return out


def xy_accumulate(acc: dict, term: dict, scale=1) -> dict:
    """acc += scale * term, purging zero entries in place."""
    for key, v in term.items():
        w = acc.get(key, 0) + scale * v
        if w:
            acc[key] = w
        else:
            acc.pop(key, None)
    return acc
