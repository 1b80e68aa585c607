"""Certified zero counting on circles by exact argument tracking.

The circle is cut into arcs between rational circle points.  An arc
``a -> b`` is accepted when the Taylor bound

    sup_{|h| <= |b - a|} |p(a + h) - p(a)| <= sum_j |c_j| |b - a|^j  <  |p(a)|

holds, with ``c_j`` the exact Taylor coefficients of ``p`` at ``a``.  Then
``p`` maps the arc into a disc around ``p(a)`` that misses 0, so the
image of the arc may be replaced by the segment ``p(a) -> p(b)`` without
changing the winding number.  Winding is then an exact signed count of
segment crossings with the positive real axis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import circle
from .errors import StepBudgetExceeded, ZeroOnCircle
from .poly_core import GaussRat, UniPoly, abs_sq, abs_upper, sqrt_upper

INITIAL_STEPS = 64
STEP_BUDGET = 2 ** 16
MAX_DEPTH = 40


@dataclass(frozen=True)
class WindingResult:
    count: int
    steps: int
    # largest (bound / |p(a)|)**2 over accepted arcs; each arc turns the
    # argument by at most asin(sqrt(max_arg_step)) < pi/2
    max_arg_step: Fraction


def _crossing(u: GaussRat, v: GaussRat) -> int:
    """Signed crossing of segment ``u -> v`` with the ray ``(0, +inf)``.

    Half-open convention: ``y >= 0`` counts as above the axis.
    """
    up_u, up_v = u.im >= 0, v.im >= 0
    if up_u == up_v:
        return 0
    if u.re > 0 and v.re > 0:
        return 1 if up_v else -1
    if u.re <= 0 and v.re <= 0:
        return 0
    # x-coordinate of the crossing, sign only: x = (u.re*v.im - v.re*u.im)/(v.im - u.im)
    num = u.re * v.im - v.re * u.im
    den = v.im - u.im
    if (num > 0) == (den > 0) and num != 0:
        return 1 if up_v else -1
    return 0


def arc_step_bound(p: UniPoly, a: GaussRat, b: GaussRat):
    """Return ``(p(a), B)`` with ``B >= sup |p(t) - p(a)|`` over ``|t - a| <= |b - a|``."""
    cs = p.taylor_shift(a)
    delta = sqrt_upper(abs_sq(b - a))
    bound = Fraction(0)
    pw = Fraction(1)
    for c in cs[1:]:
        pw *= delta
        if c:
            bound += abs_upper(c, refine=True) * pw
    return cs[0], bound


def winding_number(p: UniPoly, r, initial_steps: int = INITIAL_STEPS,
                   budget: int = STEP_BUDGET, max_depth: int = MAX_DEPTH) -> WindingResult:
    """Number of zeros of ``p`` (with multiplicity) in ``|t| < r``.

    Raises ``ZeroOnCircle`` when some arc cannot be bounded away from zero
    after ``max_depth`` bisections and ``StepBudgetExceeded`` when more than
    ``budget`` arc tests are needed.
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    if p.is_zero():
        raise ZeroOnCircle("zero polynomial")
    if p.degree == 0:
        return WindingResult(0, 0, Fraction(0))

    stack = [(h, lo, hi, 0) for h, lo, hi in reversed(circle.arcs(initial_steps))]
    count = 0
    tests = 0
    accepted = 0
    worst = Fraction(0)
    while stack:
        h, lo, hi, depth = stack.pop()
        tests += 1
        if tests > budget:
            raise StepBudgetExceeded(f"more than {budget} arc tests at r={r}")
        a = circle.point(r, h, lo)
        b = circle.point(r, h, hi)
        va, bound = arc_step_bound(p, a, b)
        na = abs_sq(va)
        if not na:
            raise ZeroOnCircle(f"p vanishes exactly at the circle point {a}")
        if bound * bound < na:
            accepted += 1
            count += _crossing(va, p(b))
            ratio = bound * bound / na
            if ratio > worst:
                worst = ratio
            continue
        if depth >= max_depth:
            raise ZeroOnCircle(f"cannot bound p away from 0 near the circle point {a}")
        mid = (lo + hi) / 2
        stack.append((h, mid, hi, depth + 1))
        stack.append((h, lo, mid, depth + 1))
    return WindingResult(count, accepted, worst)
