"""Certified f-smallness of polynomial self-maps.

All sup bounds are taken over the polydisc ``|z_i| <= r``, which contains
the Euclidean ball of radius ``r``.  The continuity modulus is realized by
a Lipschitz bound ``L``: with ``eta = m / (L + 1)``, any two points of the
polydisc closer than ``eta`` have values closer than ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .disc import certify_disc
from .errors import BadRadius, DimensionError, NotAGermError
from .germ import Direction, as_germ, is_generic
from .poly_core import Poly, abs_upper, restrict_to_line
from .rouche import inf_bound_circle


def _poly_sup(p: Poly, r: Fraction) -> Fraction:
    total = Fraction(0)
    for e, c in p.terms.items():
        total += abs_upper(c) * r ** sum(e)
    return total


def lipschitz_bound(f: Poly, r) -> Fraction:
    """Sum over partials of ``sum |coef| r**deg``: a Lipschitz constant on the polydisc."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    return sum((_poly_sup(f.partial(i), r) for i in range(f.nvars)), Fraction(0))


def displacement_bound(phi: Sequence[Poly], r) -> Fraction:
    """Upper bound of ``sup |z - phi(z)|`` on the polydisc of radius ``r``."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    if not phi:
        raise DimensionError("empty map")
    n = phi[0].nvars
    if len(phi) != n or any(q.nvars != n for q in phi):
        raise DimensionError("phi must have one component per variable")
    if any(q.constant_term() for q in phi):
        raise NotAGermError("phi(0) != 0")
    return sum((_poly_sup(Poly.var(n, i) - phi[i], r) for i in range(n)), Fraction(0))


@dataclass(frozen=True)
class SmallMapReport:
    r: Fraction
    rho: Fraction
    m: Fraction | None
    L: Fraction
    eta: Fraction | None
    disp: Fraction
    passed: bool
    status: str  # pass, fail, unknown
    disc_ok: bool
    order_f: int
    order_g: int | None
    orders_match: bool | None
    homeomorphism_checked: bool = False


def check_f_small(f, phi: Sequence[Poly], r, d, rho) -> SmallMapReport:
    """Test one concrete triple ``(r, rho, eta)`` for f-smallness of ``phi``.

    A failing report does not show that ``phi`` is not f-small; another
    triple might work.  That ``phi`` is a homeomorphism is not checked.
    """
    f = as_germ(f)
    d = d if isinstance(d, Direction) else Direction(d)
    r, rho = Fraction(r), Fraction(rho)
    if r <= 0 or rho <= 0:
        raise BadRadius("radii must be positive")
    # the circle t*d, |t| = rho, must sit in the polydisc of radius r/2
    reach = rho * max(abs_upper(x, refine=True) for x in d)
    if reach > r / 2:
        raise BadRadius(f"rho * |d|_inf = {reach} exceeds r/2 = {r / 2}")
    if len(phi) != f.nvars:
        raise DimensionError("phi must have one component per variable")

    L = lipschitz_bound(f.poly, r)
    disp = displacement_bound(phi, r)
    g_poly = f.poly.compose(list(phi))

    def report(m, eta, passed, status, disc_ok, order_g):
        match = None if order_g is None else order_g == f.order
        return SmallMapReport(r, rho, m, L, eta, disp, passed, status, disc_ok,
                              f.order, order_g, match)

    try:
        g = as_germ(g_poly)
    except NotAGermError:
        return report(None, None, False, "unknown", False, None)
    check = certify_disc(f, g, d, rho) if is_generic(f, g, d) else None
    if check is None or not check.ok:
        return report(None, None, False, "unknown", False, g.order)
    m = inf_bound_circle(restrict_to_line(f.poly, d.d), rho, f.order, refine=True)
    if m <= 0:
        return report(m, None, False, "unknown", True, g.order)
    eta = m / (L + 1)
    passed = disp < min(eta, rho)
    return report(m, eta, passed, "pass" if passed else "fail", True, g.order)

