"""Exact sparse polynomials over the Gaussian rationals Q(i).

Everything here is exact.  Moduli are never computed as floats: comparisons
go through squared moduli (``abs_sq``) and sums of moduli are bounded from
above with ``abs_upper``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError

Rational = Fraction


class GaussRat:
    """A Gaussian rational ``re + im*i`` with Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("floats are not accepted; pass int, Fraction or str")
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussRat":
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, (float, complex)):
            raise TypeError("floating values are not accepted; use GaussRat")
        return cls(x)

    def __add__(self, other):
        other = _gr(other)
        if other is NotImplemented:
            return other
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _gr(other)
        if other is NotImplemented:
            return other
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _gr(other)
        if other is NotImplemented:
            return other
        return GaussRat(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        if isinstance(other, GaussRat):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return GaussRat(a * c)
            return GaussRat(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return GaussRat(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _gr(other)
        if other is NotImplemented:
            return other
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussRat(other.re / n, -other.im / n)

    def __rtruediv__(self, other):
        return GaussRat.coerce(other) / self

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return GaussRat(1) / (self ** -k)
        out = GaussRat(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"GaussRat({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __complex__(self):
        return complex(float(self.re), float(self.im))


def _gr(x):
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRat(x)
    return NotImplemented


ZERO = GaussRat(0)
ONE = GaussRat(1)
I = GaussRat(0, 1)


# --------------------------------------------------------------------------
# modulus primitives

_SQRT_BITS = 40


def abs_sq(c: GaussRat) -> Fraction:
    """Exact squared modulus ``re**2 + im**2``."""
    c = GaussRat.coerce(c)
    return c.re * c.re + c.im * c.im


def _exact_sqrt(q: Fraction) -> Fraction | None:
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sqrt_scale(q: Fraction, bits: int) -> int:
    # choose j with q * 4**j >= 2**(2*bits), so the integer root carries ~bits bits
    log2 = q.numerator.bit_length() - q.denominator.bit_length()
    return max(0, (2 * bits - log2 + 2) // 2)


def sqrt_upper(q: Fraction, bits: int = _SQRT_BITS) -> Fraction:
    """Dyadic rational ``u >= sqrt(q)``; exact when ``q`` is a rational square."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("sqrt of a negative rational")
    exact = _exact_sqrt(q)
    if exact is not None:
        return exact
    j = _sqrt_scale(q, bits)
    n = -((-q.numerator << (2 * j)) // q.denominator)  # ceil(q * 4**j)
    return Fraction(math.isqrt(n) + 1, 1 << j)


def sqrt_lower(q: Fraction, bits: int = _SQRT_BITS) -> Fraction:
    """Dyadic rational ``l <= sqrt(q)``; exact when ``q`` is a rational square."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("sqrt of a negative rational")
    exact = _exact_sqrt(q)
    if exact is not None:
        return exact
    j = _sqrt_scale(q, bits)
    n = (q.numerator << (2 * j)) // q.denominator
    return Fraction(math.isqrt(n), 1 << j)


def abs_upper(c: GaussRat, refine: bool = False) -> Fraction:
    """Rational upper bound of ``|c|``.

    The default is ``|re| + |im|``, which is exact for real and purely
    imaginary values.  With ``refine`` the bound is tightened by a dyadic
    square-root enclosure of ``abs_sq(c)``.
    """
    c = GaussRat.coerce(c)
    u = abs(c.re) + abs(c.im)
    if refine and c.re and c.im:
        u = min(u, sqrt_upper(abs_sq(c)))
    return u


def abs_lower(c: GaussRat) -> Fraction:
    """Rational lower bound of ``|c|`` (exact for real values)."""
    c = GaussRat.coerce(c)
    if not c.im:
        return abs(c.re)
    if not c.re:
        return abs(c.im)
    return sqrt_lower(abs_sq(c))


# --------------------------------------------------------------------------
# multivariate polynomials

Exponent = tuple


class Poly:
    """Sparse polynomial in ``nvars`` variables with GaussRat coefficients.

    ``terms`` maps exponent tuples to nonzero coefficients.  Instances are
    treated as immutable; never mutate ``terms`` in place.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != nvars:
                    raise DimensionError(f"exponent {exp} has length != {nvars}")
                if any(e < 0 for e in exp):
                    raise ValueError(f"negative exponent in {exp}")
                c = GaussRat.coerce(c)
                if c:
                    clean[exp] = clean.get(exp, ZERO) + c
                    if not clean[exp]:
                        del clean[exp]
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Poly":
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c) -> "Poly":
        c = GaussRat.coerce(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        """The coordinate ``z_{i+1}`` (0-based index ``i``)."""
        if not 0 <= i < nvars:
            raise DimensionError(f"variable index {i} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): ONE})

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> "Poly":
        return cls(len(exp), {tuple(exp): c})

    # -- structure
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def coeff(self, exp: Sequence[int]) -> GaussRat:
        return self.terms.get(tuple(exp), ZERO)

    def constant_term(self) -> GaussRat:
        return self.terms.get((0,) * self.nvars, ZERO)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            return -1
        return min(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def homogeneous_part(self, k: int) -> "Poly":
        return Poly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == k})

    def truncate(self, n: int) -> "Poly":
        """Drop every term of total degree > n."""
        return Poly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) <= n})

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    # -- ring operations
    def _check(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise DimensionError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, GaussRat)):
            return Poly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            other = GaussRat.coerce(other)
            if not other:
                return Poly.zero(self.nvars)
            return Poly._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            inv = ONE / GaussRat.coerce(other)
            return self * inv
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def mul_truncated(self, other: "Poly", n: int) -> "Poly":
        """Product with every term of total degree > n discarded."""
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            if d1 > n:
                continue
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > n:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c})

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussRat)):
            return self == Poly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- calculus / substitution
    def partial(self, i: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return Poly._raw(self.nvars, out)

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return eval_exact(self, point)

    def compose(self, maps: Sequence["Poly"]) -> "Poly":
        """Substitute ``z_i -> maps[i]``; the result lives in ``maps[0].nvars`` variables."""
        if len(maps) != self.nvars:
            raise DimensionError(f"need {self.nvars} substitutions, got {len(maps)}")
        m = maps[0].nvars
        for q in maps:
            if q.nvars != m:
                raise DimensionError("substitutions disagree on nvars")
        powers: list[dict[int, Poly]] = [{0: Poly.const(m, 1)} for _ in maps]

        def power(i: int, k: int) -> Poly:
            cache = powers[i]
            if k not in cache:
                top = max(j for j in cache if j < k)
                acc = cache[top]
                for j in range(top + 1, k + 1):
                    acc = acc * maps[i]
                    cache[j] = acc
            return cache[k]

        out = Poly.zero(m)
        for e, c in self.terms.items():
            t = Poly.const(m, c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            out = out + t
        return out

    def specialize(self, i: int, value) -> "Poly":
        """Set variable ``i`` to ``value`` and drop it (nvars decreases by one)."""
        if self.nvars < 2:
            raise DimensionError("cannot drop the only variable")
        value = GaussRat.coerce(value)
        out: dict = {}
        for e, c in self.terms.items():
            e2 = e[:i] + e[i + 1:]
            c2 = c * value ** e[i] if e[i] else c
            s = out.get(e2)
            out[e2] = c2 if s is None else s + c2
        return Poly._raw(self.nvars - 1, {e: c for e, c in out.items() if c})

    def sorted_terms(self):
        """Terms in a canonical order: total degree, then reverse-lex exponents."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))

    def __repr__(self):
        from .parser import render

        return f"Poly({self.nvars}, {render(self)!r})"


def arith(p: Poly, q: Poly, kind: str) -> Poly:
    """Exact ``add``/``sub``/``mul`` of two polynomials in the same variables."""
    p._check(q)
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def _as_point(point: Iterable, n: int) -> list[GaussRat]:
    pt = [GaussRat.coerce(x) for x in point]
    if len(pt) != n:
        raise DimensionError(f"point has length {len(pt)}, expected {n}")
    return pt


def eval_exact(p: Poly, point: Sequence) -> GaussRat:
    """Exact value of ``p`` at ``point``."""
    pt = _as_point(point, p.nvars)
    pows: list[dict[int, GaussRat]] = [{0: ONE, 1: x} for x in pt]
    total = ZERO
    for e, c in p.terms.items():
        t = c
        for i, k in enumerate(e):
            if k:
                cache = pows[i]
                v = cache.get(k)
                if v is None:
                    v = cache[k] = pt[i] ** k
                t = t * v
        total = total + t
    return total


def restrict_to_line(p: Poly, d: Sequence) -> "UniPoly":
    """The univariate polynomial ``t -> p(t*d)``."""
    dv = _as_point(d, p.nvars)
    if not any(dv):
        raise ValueError("zero direction")
    coeffs: dict[int, GaussRat] = {}
    pows: list[dict[int, GaussRat]] = [{0: ONE, 1: x} for x in dv]
    for e, c in p.terms.items():
        t = c
        for i, k in enumerate(e):
            if k:
                cache = pows[i]
                v = cache.get(k)
                if v is None:
                    v = cache[k] = dv[i] ** k
                t = t * v
        k = sum(e)
        coeffs[k] = coeffs.get(k, ZERO) + t
    if not coeffs:
        return UniPoly(())
    out = [ZERO] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return UniPoly(out)


# --------------------------------------------------------------------------
# univariate polynomials


class UniPoly:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies ``t**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [GaussRat.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> GaussRat:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[k] + other[k] for k in range(n))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[k] - other[k] for k in range(n))

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            other = GaussRat.coerce(other)
            return UniPoly(c * other for c in self.coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly(())
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def order(self) -> int:
        """Index of the lowest nonzero coefficient."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise ValueError("order of the zero polynomial")

    def __call__(self, t) -> GaussRat:
        t = GaussRat.coerce(t)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def taylor_shift(self, a) -> list[GaussRat]:
        """Coefficients ``c_j`` with ``p(a + h) = sum c_j h**j``."""
        a = GaussRat.coerce(a)
        cs = list(self.coeffs)
        n = len(cs)
        # repeated synthetic division by (t - a)
        for i in range(n):
            for k in range(n - 2, i - 1, -1):
                cs[k] = cs[k] + a * cs[k + 1]
        return cs

    def scale_arg(self, lam) -> "UniPoly":
        """``t -> p(lam * t)``."""
        lam = GaussRat.coerce(lam)
        out, pw = [], ONE
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * lam
        return UniPoly(out)

    def __repr__(self):
        from .parser import render_uni

        return f"UniPoly({render_uni(self)!r})"
