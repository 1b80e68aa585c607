"""Good discs: a generic line and a radius on which both restrictions vanish only at 0."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, StepBudgetExceeded, ZeroOnCircle
from .germ import Direction, Germ, as_germ, is_generic
from .poly_core import UniPoly, abs_sq, abs_upper, restrict_to_line
from .winding import winding_number

DEFAULT_SAFETY = Fraction(1, 2)
DEFAULT_CAP = Fraction(1)
BISECTION_PRECISION = Fraction(1, 2 ** 20)

COEFFICIENT_BOUND = "coefficient_bound"
WINDING_ZERO = "winding_zero"


def deflate(p: UniPoly) -> tuple[int, UniPoly]:
    """Split ``p = t**k * u`` with ``u(0) != 0``."""
    if p.is_zero():
        raise ValueError("cannot deflate the zero polynomial")
    k = p.order()
    return k, UniPoly(p.coeffs[k:])


def dominates(u: UniPoly, r: Fraction) -> bool:
    """Exact test of ``|u_0| > sum_{k>=1} |u_k| r^k``; proves ``u`` zero-free on ``|t| <= r``."""
    tail = Fraction(0)
    pw = Fraction(1)
    for c in u.coeffs[1:]:
        pw *= r
        if c:
            tail += abs_upper(c, refine=True) * pw
    return tail * tail < abs_sq(u[0])


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator in the closed interval ``[lo, hi]`` (``0 <= lo``)."""
    if lo > hi:
        lo, hi = hi, lo
    fl = lo.numerator // lo.denominator
    if fl == lo:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    # lo and hi share the integer part; recurse on reciprocals of the fractional parts
    rest = simplest_between(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / rest


def dominance_radius(u: UniPoly, cap: Fraction = DEFAULT_CAP) -> tuple[Fraction, Fraction]:
    """Estimate the supremum ``r*`` of radii passing ``dominates``, clipped to ``cap``.

    Returns ``(r_star, lo)``: ``lo`` is certified, the true supremum lies in
    ``[lo, hi]`` with ``hi - lo <= 2**-20 * hi``, and ``r_star`` is the
    simplest rational in that bracket.
    """
    if not u[0]:
        raise ValueError("u(0) must be nonzero")
    cap = Fraction(cap)
    if dominates(u, cap):
        return cap, cap
    lo, hi = Fraction(0), cap
    while hi - lo > BISECTION_PRECISION * hi:
        mid = (lo + hi) / 2
        if dominates(u, mid):
            lo = mid
        else:
            hi = mid
    return simplest_between(lo, hi), lo


@dataclass(frozen=True)
class GoodDisc:
    direction: Direction
    radius: Fraction
    deflated_f: UniPoly
    deflated_g: UniPoly
    certificate_kind: str


@dataclass(frozen=True)
class DiscCheck:
    """Outcome of ``certify_disc``.

    ``status`` is ``certified``, ``zeros_inside`` (a winding count > 0
    proves a zero in the open disc) or ``inconclusive``.
    """

    ok: bool
    status: str
    method: str | None
    methods: tuple  # per deflated polynomial: method name or failure reason
    disc: GoodDisc | None


def _restrictions(f: Germ, g: Germ, d: Direction):
    if len(d) != f.nvars or len(d) != g.nvars:
        raise DimensionError("direction length does not match nvars")
    return restrict_to_line(f.poly, d.d), restrict_to_line(g.poly, d.d)


def good_radius(f, g, d: Direction, safety=DEFAULT_SAFETY, cap=DEFAULT_CAP) -> GoodDisc:
    """A coefficient-bound certified good disc of radius ``safety * r*``."""
    f, g = as_germ(f), as_germ(g)
    d = d if isinstance(d, Direction) else Direction(d)
    safety = Fraction(safety)
    if not 0 < safety < 1:
        raise ValueError("safety must lie in (0, 1)")
    if not is_generic(f, g, d):
        raise ValueError("direction lies in a tangent cone")
    pf, pg = _restrictions(f, g, d)
    _, uf = deflate(pf)
    _, ug = deflate(pg)
    rf, lof = dominance_radius(uf, cap)
    rg, log_ = dominance_radius(ug, cap)
    radius = safety * min(rf, rg)
    if not (dominates(uf, radius) and dominates(ug, radius)):
        radius = safety * min(lof, log_)
    return GoodDisc(d, radius, uf, ug, COEFFICIENT_BOUND)


def _certify_one(u: UniPoly, r: Fraction) -> str:
    if dominates(u, r):
        return COEFFICIENT_BOUND
    try:
        w = winding_number(u, r)
    except ZeroOnCircle:
        return "inconclusive"
    except StepBudgetExceeded:
        return "inconclusive"
    return WINDING_ZERO if w.count == 0 else "zeros_inside"


def certify_disc(f, g, d: Direction, r) -> DiscCheck:
    """Certify that the closed disc of radius ``r`` on the line ``d`` meets
    ``V_f`` and ``V_g`` only at the origin."""
    f, g = as_germ(f), as_germ(g)
    d = d if isinstance(d, Direction) else Direction(d)
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    pf, pg = _restrictions(f, g, d)
    if pf.order() != f.order or pg.order() != g.order:
        raise ValueError("direction lies in a tangent cone")
    _, uf = deflate(pf)
    _, ug = deflate(pg)
    methods = (_certify_one(uf, r), _certify_one(ug, r))
    if all(m in (COEFFICIENT_BOUND, WINDING_ZERO) for m in methods):
        kind = WINDING_ZERO if WINDING_ZERO in methods else COEFFICIENT_BOUND
        return DiscCheck(True, "certified", kind, methods, GoodDisc(d, r, uf, ug, kind))
    status = "zeros_inside" if "zeros_inside" in methods else "inconclusive"
    return DiscCheck(False, status, None, methods, None)
