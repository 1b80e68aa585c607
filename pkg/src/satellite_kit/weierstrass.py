"""Truncated Weierstrass preparation and the equal-multiplicity construction.

Given germs of equal order, a shared linear change of coordinates moves the
last axis off both tangent cones.  Each germ then factors, up to a chosen
total degree ``N``, as ``unit * w`` with ``w`` monic of degree ``nu`` in
the last variable.  Both ``w`` restrict to ``z_n**nu`` on the last axis, so
their difference vanishes there and the Rouché inequality on any axis
circle is immediate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .disc import good_radius
from .errors import NotAxisGeneric, OrderMismatch
from .germ import Direction, Germ, as_germ, is_generic, is_reduced, order, pick_generic_direction
from .poly_core import ONE, ZERO, GaussRat, Poly
from .rouche import SatelliteCertificate, certify_satellite


@dataclass(frozen=True)
class LinearChange:
    """Invertible matrix ``A``; a polynomial ``p`` is pulled back to ``p(A w)``."""

    matrix: tuple

    def __post_init__(self):
        rows = tuple(tuple(GaussRat.coerce(x) for x in row) for row in self.matrix)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "matrix", rows)
        if not self.determinant():
            raise ValueError("singular coordinate change")

    @classmethod
    def identity(cls, n: int) -> "LinearChange":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.matrix)

    def determinant(self) -> GaussRat:
        m = [list(row) for row in self.matrix]
        n = len(m)
        det = ONE
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col]), None)
            if piv is None:
                return ZERO
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = -det
            det = det * m[col][col]
            inv = ONE / m[col][col]
            for r in range(col + 1, n):
                if m[r][col]:
                    factor = m[r][col] * inv
                    for c in range(col, n):
                        m[r][c] = m[r][c] - factor * m[col][c]
        return det

    def is_identity(self) -> bool:
        return self == LinearChange.identity(self.n)

    def apply(self, p: Poly) -> Poly:
        n = self.n
        maps = []
        for i in range(n):
            terms = {}
            for k, a in enumerate(self.matrix[i]):
                if a:
                    e = [0] * n
                    e[k] = 1
                    terms[tuple(e)] = a
            maps.append(Poly(n, terms))
        return p.compose(maps)


def _axis(n: int) -> tuple:
    return tuple(ONE if i == n - 1 else ZERO for i in range(n))


def change_for_direction(d: Direction) -> LinearChange:
    """Matrix whose last column is ``d``; the other columns are standard basis vectors."""
    n = len(d)
    j = n - 1 if d[n - 1] else max(i for i in range(n) if d[i])
    cols = [tuple(ONE if r == i else ZERO for r in range(n)) for i in range(n) if i != j]
    cols.append(tuple(d))
    return LinearChange(tuple(tuple(cols[c][r] for c in range(n)) for r in range(n)))


def axis_normalize(f, g, seed: int = 0):
    """Return ``(A, f o A, g o A)`` with the last axis off both tangent cones."""
    f, g = as_germ(f), as_germ(g)
    n = f.nvars
    if is_generic(f, g, _axis(n)):
        a = LinearChange.identity(n)
        return a, f, g
    d = pick_generic_direction(f, g, seed)
    a = change_for_direction(d)
    return a, Germ(a.apply(f.poly)), Germ(a.apply(g.poly))


@dataclass(frozen=True)
class WeierstrassFactorization:
    original: Poly
    w: Poly
    u: Poly
    nu: int
    trunc_order: int
    residual_checked: bool

    def coefficients(self) -> list:
        """``[f_1, ..., f_nu]`` with ``w = z_n**nu + sum_i f_i z_n**(nu - i)``.

        Each ``f_i`` is returned as a polynomial in all variables whose
        exponent of the last variable is zero.
        """
        n = self.w.nvars
        out = [dict() for _ in range(self.nu)]
        for e, c in self.w.terms.items():
            j = e[-1]
            if j < self.nu:
                out[self.nu - j - 1][e[:-1] + (0,)] = c
        return [Poly(n, t) for t in out]

    def residual(self) -> Poly:
        n = self.trunc_order
        return (self.original - self.u.mul_truncated(self.w, n)).truncate(n)


def _divide_monic_last(r: Poly, h: Poly, nu: int):
    """Divide ``r`` by ``h`` (monic of degree ``nu`` in the last variable)."""
    n = r.nvars
    quot: dict = {}
    rem = dict(r.terms)
    lead = (0,) * (n - 1) + (nu,)
    tail = [(e, c) for e, c in h.terms.items() if e != lead]
    while True:
        high = [e for e in rem if e[-1] >= nu]
        if not high:
            break
        e = max(high, key=lambda x: x[-1])
        c = rem.pop(e)
        qe = e[:-1] + (e[-1] - nu,)
        quot[qe] = quot.get(qe, ZERO) + c
        for he, hc in tail:
            te = tuple(a + b for a, b in zip(qe, he))
            v = rem.get(te, ZERO) - c * hc
            if v:
                rem[te] = v
            else:
                rem.pop(te, None)
    return Poly(n, quot), Poly(n, rem)


def prepare(p: Poly, N: int) -> WeierstrassFactorization:
    """Solve ``p = u * w`` modulo terms of total degree > ``N``.

    Works slice by slice in the total-degree grading: the degree ``nu + k``
    slice is one division of a homogeneous polynomial by the monic leading
    slice of ``p``.
    """
    nu = order(p)
    n = p.nvars
    if N < nu:
        raise ValueError(f"truncation order {N} is below the multiplicity {nu}")
    axis_exp = (0,) * (n - 1) + (nu,)
    c = p.coeff(axis_exp)
    if not c:
        raise NotAxisGeneric("the last axis lies in the tangent cone; apply axis_normalize first")
    zn = Poly.monomial(axis_exp)
    slices = {k: p.homogeneous_part(k) for k in range(nu, N + 1)}
    h = slices[nu] / c
    units = {0: Poly.const(n, c)}
    ws = {nu: h - zn}
    for k in range(1, N - nu + 1):
        r = slices[nu + k]
        for a in range(1, k):
            r = r - units[a] * ws[nu + k - a]
        q, rem = _divide_monic_last(r, h, nu)
        units[k] = q
        ws[nu + k] = rem / c
    w = zn
    for part in ws.values():
        w = w + part
    u = Poly.zero(n)
    for part in units.values():
        u = u + part
    fact = WeierstrassFactorization(p, w, u, nu, N, False)
    ok = fact.residual().is_zero()
    return WeierstrassFactorization(p, w, u, nu, N, ok)


@dataclass(frozen=True)
class WeierstrassPair:
    change: LinearChange
    f_factorization: WeierstrassFactorization
    g_factorization: WeierstrassFactorization
    certificate: SatelliteCertificate
    f_prime_reduced: bool
    g_prime_reduced: bool

    @property
    def f_prime(self) -> Poly:
        return self.f_factorization.w

    @property
    def g_prime(self) -> Poly:
        return self.g_factorization.w


def default_trunc(nu: int) -> int:
    return 2 * nu + 4


def construct_pair(f, g, N: int | None = None, seed: int = 0,
                   safety=Fraction(1, 2)) -> WeierstrassPair:
    """Weierstrass representatives ``f', g'`` of equal-order germs, with the
    axis-disc certificate that ``g'`` is a Rouché satellite of ``f'``."""
    f, g = as_germ(f), as_germ(g)
    if f.order != g.order:
        raise OrderMismatch(f"orders differ: {f.order} vs {g.order}")
    nu = f.order
    N = default_trunc(nu) if N is None else N
    a, fa, ga = axis_normalize(f, g, seed)
    ff = prepare(fa.poly, N)
    fg = prepare(ga.poly, N)
    fp, gp = Germ(ff.w), Germ(fg.w)
    disc = good_radius(fp, gp, Direction(_axis(f.nvars)), safety)
    cert = certify_satellite(fp, gp, disc)
    return WeierstrassPair(a, ff, fg, cert, is_reduced(ff.w), is_reduced(fg.w))
