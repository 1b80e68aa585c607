"""Certificates for the Rouché inequality ``|f - g| < |f|`` on a good circle.

``certify_satellite`` runs three stages on the restrictions ``p = f|L`` and
``q = g|L``:

1. global coefficient bounds ``sup|p - q| <= S < I <= inf|p|``;
2. exact evaluation at rational circle points, looking for a witness with
   ``|p - q| >= |p|`` (equality refutes, the inequality is strict);
3. arc subdivision with interval Horner enclosures, checking exact
   midpoints for witnesses on the way down.

A refutation only concerns the disc at hand: the satellite relation asks
for *some* good disc, so no search can prove its absence.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import circle
from .boxes import CBox, horner
from .disc import GoodDisc, certify_disc, good_radius
from .errors import BudgetExhausted
from .germ import as_germ, pick_generic_direction
from .poly_core import (
    UniPoly,
    abs_lower,
    abs_sq,
    abs_upper,
    restrict_to_line,
    sqrt_lower,
    sqrt_upper,
)

ARC_DEPTH = 12
ARC_BUDGET = 2 ** 14
WITNESS_GRID = 64
SEARCH_BUDGET = 4
SEARCH_SAFETIES = (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8))


class Verdict(str, Enum):
    PROVED = "Proved"
    REFUTED = "RefutedOnDisc"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


GLOBAL_BOUND = "global_bound"
ARC_SUBDIVISION = "arc_subdivision"
WITNESS = "witness"


@dataclass(frozen=True)
class SatelliteCertificate:
    """Evidence about ``g`` being a Rouché satellite of ``f`` on one disc.

    For ``global_bound`` proofs ``sup_bound_fg < inf_bound_f``.  For
    ``arc_subdivision`` proofs the inequality holds arc by arc (see
    ``arcs``); the recorded global sup and inf are valid bounds but need
    not be ordered.
    """

    disc: GoodDisc
    verdict: Verdict
    method: str | None
    orders: tuple
    sup_bound_fg: Fraction | None = None
    inf_bound_f: Fraction | None = None
    witness_point: tuple | None = None
    witness_param: object = None  # the value of t on the circle
    witness_count: int = 0
    arcs: tuple | None = None  # final partition (half, s_lo, s_hi)
    arcs_checked: int = 0

    @property
    def proved(self) -> bool:
        return self.verdict is Verdict.PROVED


def sup_bound_circle(p: UniPoly, r, refine: bool = False) -> Fraction:
    """``sum_k |p_k|_upper r^k``, an upper bound of ``|p|`` on ``|t| = r``."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    total = Fraction(0)
    pw = Fraction(1)
    for c in p.coeffs:
        if c:
            total += abs_upper(c, refine=refine) * pw
        pw *= r
    return total


def inf_bound_circle(p: UniPoly, r, m: int, refine: bool = False) -> Fraction:
    """``|p_m|_lower r^m - sum_{k != m} |p_k|_upper r^k``.

    A lower bound of ``|p|`` on ``|t| = r``; it may be ``<= 0`` (then useless
    but still sound).
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    if not p[m]:
        raise ValueError(f"coefficient of t^{m} is zero")
    total = Fraction(0)
    pw = Fraction(1)
    for k, c in enumerate(p.coeffs):
        if k == m:
            total += abs_lower(c) * pw
        elif c:
            total -= abs_upper(c, refine=refine) * pw
        pw *= r
    return total


def _witness_scan(p: UniPoly, diff: UniPoly, r: Fraction, n: int):
    first = None
    count = 0
    for h, s in circle.grid(n):
        t = circle.point(r, h, s)
        if abs_sq(diff(t)) >= abs_sq(p(t)):
            count += 1
            if first is None:
                first = t
    return first, count


def _arc_stage(p: UniPoly, diff: UniPoly, r: Fraction, n: int, depth_limit: int, budget: int):
    """Returns ``(status, payload, checked)``; status is proved, witness or unknown."""
    stack = [(h, lo, hi, 0) for h, lo, hi in reversed(circle.arcs(n))]
    passed = []
    sup_sq = Fraction(0)
    inf_sq = None
    checked = 0
    while stack:
        h, lo, hi, depth = stack.pop()
        checked += 1
        if checked > budget:
            return "unknown", None, checked
        box = CBox.hull(circle.point(r, h, lo), circle.point(r, h, hi))
        top = horner(diff, box).abs_sq().hi
        bottom = horner(p, box).abs_sq().lo
        if top < bottom:
            passed.append((h, lo, hi))
            sup_sq = max(sup_sq, top)
            inf_sq = bottom if inf_sq is None else min(inf_sq, bottom)
            continue
        mid = (lo + hi) / 2
        t = circle.point(r, h, mid)
        if abs_sq(diff(t)) >= abs_sq(p(t)):
            return "witness", t, checked
        if depth >= depth_limit:
            return "unknown", None, checked
        stack.append((h, mid, hi, depth + 1))
        stack.append((h, lo, mid, depth + 1))
    return "proved", (tuple(passed), sup_sq, inf_sq), checked


def certify_satellite(f, g, disc: GoodDisc, grid: int = WITNESS_GRID,
                      depth: int = ARC_DEPTH, arc_budget: int = ARC_BUDGET) -> SatelliteCertificate:
    """Decide ``|f - g| < |f|`` on the boundary of ``disc`` (Proved / RefutedOnDisc / Unknown)."""
    f, g = as_germ(f), as_germ(g)
    d = disc.direction
    r = Fraction(disc.radius)
    p = restrict_to_line(f.poly, d.d)
    q = restrict_to_line(g.poly, d.d)
    diff = p - q
    orders = (f.order, g.order)

    def witness_cert(t, count, method=WITNESS):
        return SatelliteCertificate(disc, Verdict.REFUTED, method, orders,
                                    witness_point=d.scaled(t), witness_param=t,
                                    witness_count=count)

    sup = sup_bound_circle(diff, r, refine=True)
    inf = inf_bound_circle(p, r, f.order, refine=True)
    if sup < inf:
        return SatelliteCertificate(disc, Verdict.PROVED, GLOBAL_BOUND, orders, sup, inf)

    t, count = _witness_scan(p, diff, r, grid)
    if t is not None:
        return witness_cert(t, count)

    status, payload, checked = _arc_stage(p, diff, r, grid, depth, arc_budget)
    if status == "witness":
        return witness_cert(payload, 1)
    if status == "unknown":
        return SatelliteCertificate(disc, Verdict.UNKNOWN, None, orders, arcs_checked=checked)
    arcs, sup_sq, inf_sq = payload
    return SatelliteCertificate(disc, Verdict.PROVED, ARC_SUBDIVISION, orders,
                                sqrt_upper(sup_sq), sqrt_lower(inf_sq),
                                arcs=arcs, arcs_checked=checked)


def search_satellite(f, g, budget: int = SEARCH_BUDGET, seed: int = 0,
                     safeties=SEARCH_SAFETIES) -> SatelliteCertificate:
    """Try seeded generic lines and several disc radii; return the best certificate.

    Preference: the first Proved certificate, else the refutation with the
    most witnesses, else the first Unknown.
    """
    f, g = as_germ(f), as_germ(g)
    best = None
    for attempt in range(budget):
        try:
            d = pick_generic_direction(f, g, seed + attempt)
        except BudgetExhausted:
            continue
        for safety in safeties:
            disc = good_radius(f, g, d, safety)
            cert = certify_satellite(f, g, disc)
            if cert.proved:
                return cert
            if best is None or _rank(cert) > _rank(best):
                best = cert
    if best is None:
        raise BudgetExhausted("no generic direction found", budget)
    return best


def _rank(cert: SatelliteCertificate):
    return (cert.verdict is Verdict.REFUTED, cert.witness_count)


def certify_on(f, g, direction, radius) -> tuple:
    """Check the disc, then certify on it.  Returns ``(DiscCheck, certificate or None)``."""
    check = certify_disc(f, g, direction, radius)
    if not check.ok:
        return check, None
    return check, certify_satellite(f, g, check.disc)

