"""Axis-aligned complex boxes with exact rational endpoints."""

from __future__ import annotations

from fractions import Fraction

from .poly_core import GaussRat, UniPoly


class Interval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        self.lo = Fraction(lo)
        self.hi = self.lo if hi is None else Fraction(hi)

    def __add__(self, o: "Interval") -> "Interval":
        return Interval(self.lo + o.lo, self.hi + o.hi)

    def __sub__(self, o: "Interval") -> "Interval":
        return Interval(self.lo - o.hi, self.hi - o.lo)

    def __mul__(self, o: "Interval") -> "Interval":
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(ps), max(ps))

    def sq(self) -> "Interval":
        a, b = self.lo, self.hi
        if a >= 0:
            return Interval(a * a, b * b)
        if b <= 0:
            return Interval(b * b, a * a)
        return Interval(0, max(a * a, b * b))

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"


class CBox:
    __slots__ = ("re", "im")

    def __init__(self, re: Interval, im: Interval):
        self.re = re
        self.im = im

    @classmethod
    def hull(cls, *pts: GaussRat) -> "CBox":
        return cls(Interval(min(p.re for p in pts), max(p.re for p in pts)),
                   Interval(min(p.im for p in pts), max(p.im for p in pts)))

    @classmethod
    def point(cls, c: GaussRat) -> "CBox":
        return cls(Interval(c.re), Interval(c.im))

    def __add__(self, o: "CBox") -> "CBox":
        return CBox(self.re + o.re, self.im + o.im)

    def __mul__(self, o: "CBox") -> "CBox":
        return CBox(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def abs_sq(self) -> Interval:
        """Enclosure of ``|z|^2`` over the box."""
        return self.re.sq() + self.im.sq()


def horner(p: UniPoly, box: CBox) -> CBox:
    """Interval Horner enclosure of ``p`` over ``box``."""
    if p.is_zero():
        return CBox(Interval(0), Interval(0))
    acc = CBox.point(p.coeffs[-1])
    for c in reversed(p.coeffs[:-1]):
        acc = acc * box + CBox.point(c)
    return acc
