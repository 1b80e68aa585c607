"""Multiplicity, tangent cone, reducedness and generic lines of germs."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import BudgetExhausted, DimensionError, NotAGermError
from .poly_core import GaussRat, Poly, eval_exact

DEFAULT_HEIGHT = 8
DEFAULT_DIRECTION_BUDGET = 1000
_ATTEMPTS_PER_HEIGHT = 100


def order(p: Poly) -> int:
    """Lowest total degree of a term of ``p`` (the multiplicity at 0)."""
    if p.is_zero():
        raise NotAGermError("order of the zero polynomial is undefined")
    return p.min_degree()


def initial_form(p: Poly) -> Poly:
    """Homogeneous part of ``p`` of degree ``order(p)``."""
    return p.homogeneous_part(order(p))


def _to_sympy(p: Poly):
    import sympy
    from sympy.polys.domains import QQ, QQ_I

    gens = sympy.symbols(f"z1:{p.nvars + 1}")
    # integer gcd heuristics make QQ far faster than QQ_I for real input
    if all(c.is_real() for c in p.terms.values()):
        data = {e: QQ(c.re.numerator, c.re.denominator) for e, c in p.terms.items()}
        return sympy.Poly.from_dict(data, gens, domain=QQ)
    data = {
        e: QQ_I(QQ(c.re.numerator, c.re.denominator), QQ(c.im.numerator, c.im.denominator))
        for e, c in p.terms.items()
    }
    return sympy.Poly.from_dict(data, gens, domain=QQ_I)


def _uni_rem(a: list, b: list) -> list:
    a = list(a)
    lead = b[-1]
    while len(a) >= len(b):
        q = a[-1] / lead
        shift = len(a) - len(b)
        for k, c in enumerate(b):
            a[shift + k] = a[shift + k] - q * c
        a.pop()
        while a and not a[-1]:
            a.pop()
    return a


def _uni_squarefree(coeffs: Sequence[GaussRat]) -> bool:
    """``gcd(u, u') == 1`` for a univariate ``u`` given low-to-high."""
    a = list(coeffs)
    while a and not a[-1]:
        a.pop()
    if len(a) <= 2:
        return True
    b = [k * c for k, c in enumerate(a)][1:]
    while b:
        a, b = b, _uni_rem(a, b)
    return len(a) == 1


def _line_restriction_sqf(p: Poly, rng: random.Random) -> bool:
    """True when ``p`` restricted to a random affine line is squarefree.

    If ``p = q**2 * h`` with ``q`` nonconstant and the line direction does
    not kill the top form of ``p``, then ``q`` stays nonconstant on the line,
    so a squarefree restriction proves ``p`` squarefree.
    """
    n = p.nvars
    top = p.homogeneous_part(p.total_degree())
    b = tuple(GaussRat(rng.randint(-9, 9)) for _ in range(n))
    if not eval_exact(top, b):
        return False
    a = tuple(GaussRat(rng.randint(-9, 9)) for _ in range(n))
    t = Poly.var(1, 0)
    line = p.compose([Poly.const(1, a[i]) + t * b[i] for i in range(n)])
    deg = line.total_degree()
    return _uni_squarefree([line.coeff((k,)) for k in range(deg + 1)])


def is_reduced(p: Poly, tries: int = 4) -> bool:
    """Squarefreeness of ``p`` over Q(i).

    A squarefree polynomial has a reduced germ at the origin.  Non-squarefree
    input is rejected even in the rare case where its germ at 0 is reduced.
    Random line restrictions settle the common case; a full squarefree
    decomposition runs only when they are inconclusive.
    """
    if p.is_zero():
        raise NotAGermError("zero polynomial")
    if p.total_degree() <= 0:
        return True
    rng = random.Random(len(p))
    if any(_line_restriction_sqf(p, rng) for _ in range(tries)):
        return True
    return bool(_to_sympy(p).is_sqf)


@dataclass(frozen=True)
class Germ:
    """A polynomial representative of a hypersurface germ at the origin."""

    poly: Poly
    order: int = field(init=False)
    initial_form: Poly = field(init=False, repr=False)

    def __post_init__(self):
        p = self.poly
        if p.is_zero():
            raise NotAGermError("the zero polynomial does not define a hypersurface germ")
        if p.constant_term():
            raise NotAGermError("polynomial does not vanish at the origin")
        object.__setattr__(self, "order", order(p))
        object.__setattr__(self, "initial_form", initial_form(p))

    @property
    def nvars(self) -> int:
        return self.poly.nvars

    @cached_property
    def reduced(self) -> bool:
        return is_reduced(self.poly)


def as_germ(x) -> Germ:
    return x if isinstance(x, Germ) else Germ(x)


@dataclass(frozen=True)
class Direction:
    """Direction vector ``d`` of the line ``L = C*d`` through the origin."""

    d: tuple

    def __init__(self, d: Sequence):
        vec = tuple(GaussRat.coerce(x) for x in d)
        if not vec:
            raise DimensionError("empty direction")
        if not any(vec):
            raise ValueError("zero direction")
        object.__setattr__(self, "d", vec)

    def __len__(self):
        return len(self.d)

    def __iter__(self):
        return iter(self.d)

    def __getitem__(self, i):
        return self.d[i]

    def scaled(self, t) -> tuple:
        t = GaussRat.coerce(t)
        return tuple(t * x for x in self.d)


def is_generic(f: Germ, g: Germ, d: Direction | Sequence) -> bool:
    """True when the line through ``d`` avoids both tangent cones (except at 0)."""
    d = d if isinstance(d, Direction) else Direction(d)
    if len(d) != f.nvars or len(d) != g.nvars:
        raise DimensionError("direction length does not match nvars")
    return bool(eval_exact(f.initial_form, d.d)) and bool(eval_exact(g.initial_form, d.d))


def pick_generic_direction(f: Germ, g: Germ, seed: int = 0,
                           height: int = DEFAULT_HEIGHT,
                           budget: int = DEFAULT_DIRECTION_BUDGET) -> Direction:
    """Seeded search for an integer direction off both tangent cones.

    Vectors are drawn uniformly from ``[-H, H]**n``; ``H`` doubles after
    every hundred rejected draws.
    """
    if f.nvars != g.nvars:
        raise DimensionError(f"nvars mismatch: {f.nvars} vs {g.nvars}")
    rng = random.Random(seed)
    n = f.nvars
    h = height
    for attempt in range(1, budget + 1):
        vec = [rng.randint(-h, h) for _ in range(n)]
        if any(vec):
            d = Direction(vec)
            if is_generic(f, g, d):
                return d
        if attempt % _ATTEMPTS_PER_HEIGHT == 0:
            h *= 2
    raise BudgetExhausted(f"no generic direction found in {budget} attempts", budget)


@dataclass(frozen=True)
class FamilyReport:
    samples: tuple  # ((s, order), ...)
    equimultiple: bool


def family_orders(family: Poly, samples: Sequence) -> FamilyReport:
    """Orders of ``f_s`` for a family in variables ``(s, z1, ..., zn)``.

    Only the listed parameter values are examined; nothing is claimed about
    values in between.
    """
    if family.nvars < 2:
        raise DimensionError("a family needs the parameter s and at least one z variable")
    out = []
    for s in samples:
        s = s if isinstance(s, GaussRat) else GaussRat(Fraction(s))
        fs = family.specialize(0, s)
        if fs.is_zero():
            raise NotAGermError(f"specialization at s={s} is identically zero")
        if fs.constant_term():
            raise NotAGermError(f"specialization at s={s} does not vanish at the origin")
        out.append((s, order(fs)))
    orders = {k for _, k in out}
    return FamilyReport(tuple(out), len(orders) <= 1)
