"""Rational points exactly on the circle ``|t| = r``.

A point is addressed by ``(half, s)`` with ``s`` rational in ``[-1, 1]``:

* half 0: ``w = r((1 - s^2) + 2si)/(1 + s^2)``, angle ``2 atan(s)`` in ``[-pi/2, pi/2]``;
* half 1: ``-w``, angle ``pi + 2 atan(s)`` in ``[pi/2, 3pi/2]``.

Walking half 0 then half 1 with ``s`` increasing traverses the circle once
counterclockwise, starting and ending at ``-ri``.  Inside one half, ``s = 0``
is the only parameter where the point touches the real axis, so arcs whose
endpoints share a sign of ``s`` stay inside one quadrant.
"""

from __future__ import annotations

from fractions import Fraction

from .poly_core import GaussRat

DEFAULT_GRID = 64


def point(r: Fraction, half: int, s: Fraction) -> GaussRat:
    s2 = s * s
    den = 1 + s2
    w = GaussRat(r * (1 - s2) / den, r * 2 * s / den)
    return -w if half else w


def grid(n: int = DEFAULT_GRID) -> list:
    """``n`` parameter pairs (``n`` a multiple of 4) evenly spaced in ``s``, in circle order."""
    if n < 4 or n % 4:
        raise ValueError("grid size must be a positive multiple of 4")
    per_half = n // 2
    step = Fraction(2, per_half)
    return [(h, -1 + k * step) for h in (0, 1) for k in range(per_half)]


def arcs(n: int = DEFAULT_GRID) -> list:
    """Initial arcs ``(half, s_lo, s_hi)`` covering the circle, in order."""
    pts = grid(n)
    per_half = n // 2
    out = []
    for h in (0, 1):
        for k in range(per_half):
            s_lo = pts[h * per_half + k][1]
            out.append((h, s_lo, s_lo + Fraction(2, per_half)))
    return out
