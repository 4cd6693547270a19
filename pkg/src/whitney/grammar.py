"""Formal derivatives attached to substitution rules on two-variable monomials.

A grammar assigns each variable a polynomial image; the induced derivative
acts on a monomial by the Leibniz rule, replacing one variable occurrence
at a time by its image.  Iterating the derivative of the rule set
{y -> y x^m, x -> x} on y x^r grows the second-kind generalized Whitney
triangle row by row, which this module exposes directly.
"""

from .errors import StrayMonomial

# variable order is (y, x); exponent keys are (a, b) for y^a x^b


class XYPoly:
    """Finite linear combination of monomials y^a x^b with exact coefficients.

    ``terms`` maps (a, b) to the coefficient; zero coefficients are never
    stored, so equality is structural.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError("negative exponent in monomial")
            if c == 0:
                continue
            v = d.get((a, b), 0) + c
            if v:
                d[(a, b)] = v
            else:
                del d[(a, b)]
        object.__setattr__(self, "terms", d)

    def __setattr__(self, name, value):
        raise AttributeError("XYPoly is immutable")

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "XYPoly":
        return cls({(a, b): c})

    @classmethod
    def zero(cls) -> "XYPoly":
        return cls({})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, XYPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "XYPoly") -> "XYPoly":
        d = dict(self.terms)
        for key, c in other.terms.items():
            v = d.get(key, 0) + c
            if v:
                d[key] = v
            else:
                d.pop(key, None)
        return XYPoly(d)

    def __sub__(self, other: "XYPoly") -> "XYPoly":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, XYPoly):
            d = {}
            for (a1, b1), c1 in self.terms.items():
                for (a2, b2), c2 in other.terms.items():
                    key = (a1 + a2, b1 + b2)
                    d[key] = d.get(key, 0) + c1 * c2
            return XYPoly(d)
        return XYPoly({key: c * other for key, c in self.terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        if not self.terms:
            return "XYPoly(0)"
        bits = [
            "%r*y^%d*x^%d" % (c, a, b)
            for (a, b), c in sorted(self.terms.items())
        ]
        return "XYPoly(%s)" % " + ".join(bits)


class Grammar:
    """Substitution rules: one image per variable."""

    __slots__ = ("y_image", "x_image")

    def __init__(self, y_image: XYPoly, x_image: XYPoly):
        object.__setattr__(self, "y_image", y_image)
        object.__setattr__(self, "x_image", x_image)

    def __setattr__(self, name, value):
        raise AttributeError("Grammar is immutable")


def whitney_grammar(m: int) -> Grammar:
    """Rules y -> y x^m, x -> x."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    return Grammar(XYPoly.monomial(1, m), XYPoly.monomial(0, 1))


def stirling_grammar() -> Grammar:
    """Rules y -> x y, x -> x."""
    return Grammar(XYPoly.monomial(1, 1), XYPoly.monomial(0, 1))


def derive_once(g: Grammar, p: XYPoly) -> XYPoly:
    """One application of the derivative induced by the rules of g.

    On a monomial y^a x^b the result is
    a * y^(a-1) x^b * image(y)  +  b * y^a x^(b-1) * image(x),
    extended linearly.
    """
    d = {}
    for (a, b), c in p.terms.items():
        if a:
            for (da, db), e in g.y_image.terms.items():
                key = (a - 1 + da, b + db)
                d[key] = d.get(key, 0) + a * c * e
        if b:
            for (da, db), e in g.x_image.terms.items():
                key = (a + da, b - 1 + db)
                d[key] = d.get(key, 0) + b * c * e
    return XYPoly(d)


def derive_n(g: Grammar, p: XYPoly, n: int) -> XYPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    for _ in range(n):
        p = derive_once(g, p)
    return p


def row_from_derivative(p: XYPoly, m: int, r: int, n: int) -> list:
    """Read coefficients of y x^(mk+r) off a derived polynomial.

    Raises StrayMonomial if any term falls outside that shape; a stray
    term means the derivation engine itself is broken.
    """
    row = [0] * (n + 1)
    for (a, b), c in p.terms.items():
        k, rem = divmod(b - r, m) if b >= r else (-1, 1)
        if a != 1 or rem or not 0 <= k <= n:
            raise StrayMonomial("unexpected term y^%d x^%d for m=%d r=%d" % (a, b, m, r))
        row[k] = c
    return row


def whitney_row_from_grammar(m: int, r: int, n: int) -> list:
    """Row n of the second-kind triangle, grown by iterated derivation on y x^r."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    if r < 0 or n < 0:
        raise ValueError("r and n must be nonnegative")
    p = derive_n(whitney_grammar(m), XYPoly.monomial(1, r), n)
    return row_from_derivative(p, m, r, n)
