"""Recursive-descent parser and canonical renderer for polynomial text.

Grammar::

    expr   := [sign] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' nat)?
    base   := rational | rational 'i' | ident | '(' expr ')'

Rationals are ``a`` or ``a/b``; ``3i`` and ``1/2i`` are imaginary literals
(``1/2i`` means ``(1/2)*i``), and a bare ``i`` is the imaginary unit.
Multiplication is always explicit.  Variables are ``z1 .. zn``; ``x``,
``y``, ``z`` alias ``z1``, ``z2``, ``z3``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .errors import ParseError
from .poly_core import I, GaussRat, Poly, UniPoly

MAX_EXPONENT = 10_000

_TOKEN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<num>\d+(?:/\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^()])"
)
_ALIASES = {"x": 0, "y": 1, "z": 2}
_ZVAR = re.compile(r"z([1-9]\d*)\Z")


def default_index(name: str) -> int | None:
    """0-based variable index of ``name`` in the default ``z1..zn`` naming."""
    if name in _ALIASES:
        return _ALIASES[name]
    m = _ZVAR.match(name)
    return int(m.group(1)) - 1 if m else None


def family_index(name: str) -> int | None:
    """Indices for a family in ``(s, z1, ..., zn)``: ``s`` is 0, ``zk`` is ``k``."""
    if name == "s":
        return 0
    k = default_index(name)
    return None if k is None else k + 1


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos + 1)
        kind = m.lastgroup
        val = m.group()
        if kind == "num":
            end = m.end()
            # imaginary literal: digits immediately followed by a standalone 'i'
            if end < len(text) and text[end] == "i" and not (
                end + 1 < len(text) and (text[end + 1].isalnum() or text[end + 1] == "_")
            ):
                toks.append(("imag", val, pos))
                pos = end + 1
                continue
            toks.append(("num", val, pos))
        elif kind != "ws":
            toks.append((kind, val, pos))
        pos = m.end()
    toks.append(("eof", "", len(text)))
    return toks


def required_nvars(text: str, index=default_index) -> int:
    """Smallest ``nvars`` in which every identifier of ``text`` is defined."""
    top = 0
    for kind, val, pos in _tokenize(text):
        if kind == "ident" and val != "i":
            k = index(val)
            if k is None:
                raise ParseError(f"unknown identifier {val!r}", text, pos + 1)
            top = max(top, k + 1)
    return max(top, 1)


class _Parser:
    def __init__(self, text: str, nvars: int, index):
        self.text = text
        self.nvars = nvars
        self.index = index
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2] + 1)

    def parse(self) -> Poly:
        p = self.expr()
        if self.peek()[0] != "eof":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self) -> Poly:
        sign = 1
        if self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        base = self.base()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "num" or "/" in tok[1]:
                self.fail("expected a natural-number exponent")
            self.take()
            k = int(tok[1])
            if k > MAX_EXPONENT:
                self.fail(f"exponent {k} exceeds {MAX_EXPONENT}", tok)
            base = base ** k
        return base

    def base(self) -> Poly:
        tok = self.peek()
        kind, val = tok[0], tok[1]
        if kind == "num":
            self.take()
            return Poly.const(self.nvars, Fraction(val))
        if kind == "imag":
            self.take()
            return Poly.const(self.nvars, GaussRat(0, Fraction(val)))
        if kind == "ident":
            self.take()
            if val == "i":
                return Poly.const(self.nvars, I)
            k = self.index(val)
            if k is None or k >= self.nvars:
                self.fail(f"unknown identifier {val!r}", tok)
            return Poly.var(self.nvars, k)
        if kind == "op" and val == "(":
            self.take()
            inner = self.expr()
            if self.peek()[1] != ")" or self.peek()[0] != "op":
                self.fail("expected ')'")
            self.take()
            return inner
        if kind == "eof":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {val!r}")


def parse_poly(text: str, nvars: int | None = None, index=default_index) -> Poly:
    """Parse ``text`` into a Poly.  ``nvars`` defaults to the largest index used."""
    if nvars is None:
        nvars = required_nvars(text, index)
    return _Parser(text, nvars, index).parse()


# --------------------------------------------------------------------------
# rendering


def _fmt_coeff(c: GaussRat) -> tuple[int, str, bool]:
    """Return ``(sign, body, is_one)`` for writing ``c`` in front of a monomial."""
    if not c.im:
        sign = -1 if c.re < 0 else 1
        mag = abs(c.re)
        return sign, str(mag), mag == 1
    if not c.re:
        sign = -1 if c.im < 0 else 1
        mag = abs(c.im)
        return sign, ("i" if mag == 1 else f"{mag}i"), False
    im = f"{abs(c.im)}i" if abs(c.im) != 1 else "i"
    return 1, f"({c.re} {'+' if c.im > 0 else '-'} {im})", False


def _default_names(nvars: int) -> list:
    return [f"z{k + 1}" for k in range(nvars)]


def render(p: Poly, names: Mapping | list | None = None) -> str:
    """Canonical text for ``p``; ``parse_poly(render(p)) == p``."""
    names = list(names) if names is not None else _default_names(p.nvars)
    if p.is_zero():
        return "0"
    parts = []
    for exp, c in p.sorted_terms():
        mono = "*".join(
            names[k] if e == 1 else f"{names[k]}^{e}" for k, e in enumerate(exp) if e
        )
        sign, body, is_one = _fmt_coeff(c)
        if not mono:
            text = body
        elif is_one:
            text = mono
        else:
            text = f"{body}*{mono}"
        parts.append((sign, text))
    out = ("-" if parts[0][0] < 0 else "") + parts[0][1]
    for sign, text in parts[1:]:
        out += (" - " if sign < 0 else " + ") + text
    return out


def render_uni(u: UniPoly, var: str = "t") -> str:
    p = Poly(1, {(k,): c for k, c in enumerate(u.coeffs)})
    return render(p, [var])


def parse_uni(text: str, var: str = "t") -> UniPoly:
    p = parse_poly(text, 1, lambda name: 0 if name == var else None)
    if p.is_zero():
        return UniPoly(())
    deg = p.total_degree()
    return UniPoly(p.coeff((k,)) for k in range(deg + 1))


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}", text) from exc


def parse_gaussrat(text: str) -> GaussRat:
    """A Gaussian rational written as a constant expression, e.g. ``1/2 - 3i``."""
    p = parse_poly(text, 1, lambda name: None)
    return p.constant_term()


def parse_vector(text: str) -> tuple:
    """Comma-separated Gaussian rationals, e.g. ``1,0,1`` or ``1/2,i``."""
    parts = [s for s in text.split(",")]
    if not parts or any(not s.strip() for s in parts):
        raise ParseError(f"bad vector {text!r}", text)
    return tuple(parse_gaussrat(s) for s in parts)


def render_gaussrat(c: GaussRat) -> str:
    if not c.im:
        return str(c.re)
    return render(Poly.const(1, c))
