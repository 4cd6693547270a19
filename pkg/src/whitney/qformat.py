"""Rendering and parsing of exact rationals as "p/q" strings (integers as "p")."""

from fractions import Fraction


def rat_str(x) -> str:
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def parse_rat(s: str) -> Fraction:
    return Fraction(s.strip())
