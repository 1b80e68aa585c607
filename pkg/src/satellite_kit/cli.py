"""Command line entry point: ``satellite-kit <verb> ...``.

Exit codes: 0 proved / success, 2 refuted on the disc or checked false,
3 unknown or budget exhausted, 4 input error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction

from . import __version__
from . import report as rp
from .disc import DEFAULT_SAFETY, certify_disc, good_radius
from .errors import (
    BadRadius,
    BudgetExhausted,
    DimensionError,
    NotAGermError,
    OrderMismatch,
    ParseError,
    StepBudgetExceeded,
    ZeroOnCircle,
)
from .germ import Direction, Germ, family_orders, initial_form, is_generic, is_reduced, order, pick_generic_direction
from .parser import default_index, family_index, parse_poly, parse_rational, parse_vector, render, required_nvars
from .poly_core import restrict_to_line
from .rouche import SEARCH_BUDGET, Verdict, certify_satellite, search_satellite
from .small_map import check_f_small
from .weierstrass import axis_normalize, construct_pair, default_trunc, prepare
from .winding import winding_number

BUDGET_ENV = "SATELLITE_KIT_BUDGET"

EXIT_OK = 0
EXIT_FALSE = 2
EXIT_UNKNOWN = 3
EXIT_INPUT = 4

_VERDICT_EXIT = {Verdict.PROVED: EXIT_OK, Verdict.REFUTED: EXIT_FALSE, Verdict.UNKNOWN: EXIT_UNKNOWN}


class InputError(Exception):
    pass


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return SEARCH_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{BUDGET_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise InputError(f"{BUDGET_ENV} must be positive")
    return value


class _Inputs:
    """Resolves polynomial arguments, reading ``-`` from stdin once."""

    def __init__(self, stdin=None):
        self._stdin = stdin
        self._lines = None

    def text(self, arg: str) -> str:
        if arg != "-":
            return arg
        if self._lines is None:
            src = self._stdin if self._stdin is not None else sys.stdin
            self._lines = [ln.strip() for ln in src.read().splitlines() if ln.strip()]
        if not self._lines:
            raise InputError("stdin exhausted: not enough polynomial lines")
        return self._lines.pop(0)


def _parse_all(texts, nvars=None, index=default_index):
    n = nvars or max(required_nvars(t, index) for t in texts)
    return [parse_poly(t, n, index) for t in texts]


def _direction(text, n) -> Direction:
    d = Direction(parse_vector(text))
    if len(d) != n:
        raise DimensionError(f"--line has {len(d)} components, expected {n}")
    return d


def _positive(text, name) -> Fraction:
    v = parse_rational(text)
    if v <= 0:
        raise InputError(f"{name} must be positive")
    return v


# --------------------------------------------------------------------------
# verbs; each returns (payload dict, exit code)


def _cmd_order(args, inp):
    (p,) = _parse_all([inp.text(args.poly)], args.nvars)
    k = order(p)
    return {"verdict": "ok", "inputs": {"f": render(p)}, "orders": {"f": k}, "result": {"order": k}}, EXIT_OK


def _cmd_tangent_cone(args, inp):
    (p,) = _parse_all([inp.text(args.poly)], args.nvars)
    k = order(p)
    return {
        "verdict": "ok",
        "inputs": {"f": render(p)},
        "orders": {"f": k},
        "result": {"order": k, "initial_form": render(initial_form(p))},
    }, EXIT_OK


def _cmd_reduced(args, inp):
    (p,) = _parse_all([inp.text(args.poly)], args.nvars)
    ok = is_reduced(p)
    return {"verdict": str(ok).lower(), "inputs": {"f": render(p)}, "result": {"reduced": ok}}, (
        EXIT_OK if ok else EXIT_FALSE)


def _germ_pair(args, inp):
    f, g = _parse_all([inp.text(args.f), inp.text(args.g)], args.nvars)
    return Germ(f), Germ(g)


def _cmd_good_disc(args, inp):
    f, g = _germ_pair(args, inp)
    base = {"inputs": {"f": render(f.poly), "g": render(g.poly)}, "orders": {"f": f.order, "g": g.order}}
    d = _direction(args.line, f.nvars) if args.line else pick_generic_direction(f, g, args.seed)
    if not is_generic(f, g, d):
        raise InputError("--line lies in a tangent cone")
    if args.radius:
        check = certify_disc(f, g, d, _positive(args.radius, "--radius"))
        code = EXIT_OK if check.ok else (EXIT_FALSE if check.status == "zeros_inside" else EXIT_UNKNOWN)
        verdict = "certified" if check.ok else check.status
        return {**base, "verdict": verdict, "disc": rp.disc_check_payload(check)}, code
    safety = parse_rational(args.safety) if args.safety else DEFAULT_SAFETY
    disc = good_radius(f, g, d, safety)
    return {**base, "verdict": "certified", "disc": rp.disc_payload(disc)}, EXIT_OK


def _winding_cross_check(f, g, cert) -> dict:
    d, r = cert.disc.direction, cert.disc.radius
    out = {}
    for name, germ in (("f", f), ("g", g)):
        try:
            out[name] = winding_number(restrict_to_line(germ.poly, d.d), r).count
        except (ZeroOnCircle, StepBudgetExceeded) as exc:
            out[name] = f"error: {type(exc).__name__}"
    return out


def _certify(f, g, args):
    """Shared by certify and zariski-demo.  Returns (payload, exit code)."""
    budget = args.budget if args.budget else _default_budget()
    if args.line or args.radius:
        if args.line:
            d = _direction(args.line, f.nvars)
            if not is_generic(f, g, d):
                raise InputError("--line lies in a tangent cone")
        else:
            d = pick_generic_direction(f, g, args.seed)
        if args.radius:
            check = certify_disc(f, g, d, _positive(args.radius, "--radius"))
            if not check.ok:
                code = EXIT_FALSE if check.status == "zeros_inside" else EXIT_UNKNOWN
                return {"verdict": Verdict.UNKNOWN.value,
                        "disc": rp.disc_check_payload(check),
                        "note": "the requested disc is not certified good"}, code
            disc = check.disc
        else:
            safety = parse_rational(args.safety) if args.safety else DEFAULT_SAFETY
            disc = good_radius(f, g, d, safety)
        cert = certify_satellite(f, g, disc)
    else:
        cert = search_satellite(f, g, budget=budget, seed=args.seed)
    payload = rp.certificate_payload(cert)
    if cert.proved:
        payload["winding"] = _winding_cross_check(f, g, cert)
        payload["implies_equal_multiplicity"] = True
    return payload, _VERDICT_EXIT[cert.verdict]


def _cmd_certify(args, inp):
    f, g = _germ_pair(args, inp)
    payload, code = _certify(f, g, args)
    payload["inputs"] = {"f": render(f.poly), "g": render(g.poly)}
    payload.setdefault("orders", {"f": f.order, "g": g.order})
    return payload, code


def _cmd_zariski_demo(args, inp):
    f, g = _germ_pair(args, inp)
    payload, _ = _certify(f, g, args)
    out = {"inputs": {"f": render(f.poly), "g": render(g.poly)},
           "orders": {"f": f.order, "g": g.order},
           "satellite": payload}
    if f.order != g.order:
        out["verdict"] = "orders_differ"
        out["note"] = "unequal multiplicities: no analytically equivalent satellite pair exists"
        return out, EXIT_FALSE
    pair = construct_pair(f, g, args.trunc, args.seed)
    out["weierstrass"] = rp.pair_payload(pair)
    out["construction"] = rp.certificate_payload(pair.certificate)
    out["verdict"] = pair.certificate.verdict.value
    return out, _VERDICT_EXIT[pair.certificate.verdict]


def _cmd_count_zeros(args, inp):
    text = inp.text(args.poly)
    r = _positive(args.radius, "--radius")
    if args.line:
        (p,) = _parse_all([text], args.nvars)
        d = _direction(args.line, p.nvars)
        u = restrict_to_line(p, d.d)
        inputs = {"f": render(p), "line": rp.vec(d)}
    else:
        index = lambda name: 0 if name == "t" else default_index(name)  # noqa: E731
        p = parse_poly(text, None, index)
        if p.nvars != 1:
            raise InputError("multivariate input needs --line")
        u = restrict_to_line(p, (1,))
        inputs = {"f": render(p, ["t"])}
    try:
        w = winding_number(u, r)
    except ZeroOnCircle as exc:
        return {"verdict": Verdict.UNKNOWN.value, "inputs": inputs, "error": str(exc)}, EXIT_UNKNOWN
    except StepBudgetExceeded as exc:
        return {"verdict": Verdict.UNKNOWN.value, "inputs": inputs, "error": str(exc)}, EXIT_UNKNOWN
    return {"verdict": "ok", "inputs": inputs,
            "result": {"count": w.count, "steps": w.steps, "radius": rp.q(r)}}, EXIT_OK


def _cmd_prepare(args, inp):
    (p,) = _parse_all([inp.text(args.poly)], args.nvars)
    f = Germ(p)
    n_trunc = args.trunc if args.trunc is not None else default_trunc(f.order)
    a, fa, _ = axis_normalize(f, f, args.seed)
    fact = prepare(fa.poly, n_trunc)
    payload = rp.factorization_payload(fact)
    return {
        "verdict": "ok" if fact.residual_checked else "residual_nonzero",
        "inputs": {"f": render(p)},
        "orders": {"f": f.order},
        "weierstrass": {**payload, "change": rp.change_payload(a), "w_reduced": is_reduced(fact.w)},
    }, EXIT_OK if fact.residual_checked else EXIT_FALSE


def _cmd_small_map(args, inp):
    texts = [inp.text(args.f)] + [inp.text(t) for t in args.phi]
    polys = _parse_all(texts, args.nvars)
    f, phi = Germ(polys[0]), polys[1:]
    if len(phi) != f.nvars:
        raise InputError(f"need {f.nvars} --phi components, got {len(phi)}")
    d = _direction(args.line, f.nvars) if args.line else Direction(
        [1 if i == 0 else 0 for i in range(f.nvars)])
    rep = check_f_small(f, phi, _positive(args.r, "--r"), d, _positive(args.rho, "--rho"))
    code = {"pass": EXIT_OK, "fail": EXIT_FALSE}.get(rep.status, EXIT_UNKNOWN)
    return {
        "verdict": rep.status,
        "inputs": {"f": render(f.poly), "phi": [render(x) for x in phi], "line": rp.vec(d)},
        "orders": {"f": rep.order_f, "g": rep.order_g},
        "small_map": rp.small_map_payload(rep),
    }, code


def _cmd_family(args, inp):
    fam = parse_poly(inp.text(args.family), args.nvars, family_index)
    samples = [parse_rational(s) for s in args.samples.split(",")]
    rep = family_orders(fam, samples)
    names = ["s"] + [f"z{k}" for k in range(1, fam.nvars)]
    return {
        "verdict": "equimultiple" if rep.equimultiple else "not_equimultiple",
        "inputs": {"family": render(fam, names), "samples": [rp.q(s) for s in samples]},
        "result": {"orders": [[rp.q(s), k] for s, k in rep.samples], "equimultiple": rep.equimultiple},
    }, EXIT_OK if rep.equimultiple else EXIT_FALSE


# --------------------------------------------------------------------------


class _ArgParser(argparse.ArgumentParser):
    """Usage errors are input errors: exit 4 instead of argparse's 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--nvars", type=int, default=None, help="number of variables (default: inferred)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--no-timing", action="store_true", help="omit the timing field")

    ap = _ArgParser(prog="satellite-kit", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="verb", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    for name, func, help_ in (("order", _cmd_order, "multiplicity at the origin"),
                              ("tangent-cone", _cmd_tangent_cone, "initial form"),
                              ("reduced", _cmd_reduced, "squarefreeness check")):
        add(name, func, help_).add_argument("poly")

    def pair_opts(sp):
        sp.add_argument("f")
        sp.add_argument("g")
        sp.add_argument("--line", help="direction, e.g. 1,0,1")
        sp.add_argument("--radius", help="disc radius, e.g. 1/4")
        sp.add_argument("--safety", help="fraction of the dominance radius (default 1/2)")

    pair_opts(add("good-disc", _cmd_good_disc, "find or certify a good disc"))
    for name, func, help_ in (("certify", _cmd_certify, "certify that g is a satellite of f"),
                              ("zariski-demo", _cmd_zariski_demo, "certify, then the Weierstrass construction")):
        sp = add(name, func, help_)
        pair_opts(sp)
        sp.add_argument("--budget", type=int, default=None, help=f"search directions (env {BUDGET_ENV})")
        sp.add_argument("--trunc", type=int, default=None, help="truncation order N (default 2*nu+4)")

    sp = add("count-zeros", _cmd_count_zeros, "zeros inside |t| < r")
    sp.add_argument("poly")
    sp.add_argument("--radius", required=True)
    sp.add_argument("--line")

    sp = add("prepare", _cmd_prepare, "truncated Weierstrass preparation")
    sp.add_argument("poly")
    sp.add_argument("--trunc", type=int, default=None)

    sp = add("small-map", _cmd_small_map, "check that phi is f-small")
    sp.add_argument("f")
    sp.add_argument("--phi", action="append", required=True, help="one component per variable, in order")
    sp.add_argument("--r", required=True)
    sp.add_argument("--rho", required=True)
    sp.add_argument("--line")

    sp = add("family", _cmd_family, "orders of f_s at sample values of s")
    sp.add_argument("family", help="polynomial in s, z1, ..., zn")
    sp.add_argument("--samples", required=True, help="comma-separated rationals")
    return ap


_INPUT_ERRORS = (ParseError, InputError, DimensionError, NotAGermError, BadRadius,
                 OrderMismatch, ValueError)


def run(argv, stdin=None) -> tuple[dict, int]:
    """Parse ``argv`` and execute it; returns ``(report, exit code)``."""
    return execute(_parse_args(argv), stdin)


def _parse_args(argv):
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.nvars is not None and args.nvars < 1:
        ap.error("--nvars must be positive")
    return args


def execute(args, stdin=None) -> tuple[dict, int]:
    started = time.perf_counter()
    base = {
        "schema": rp.SCHEMA,
        "verb": args.verb,
        "seed": args.seed,
        "version": __version__,
        "options": {k: v for k, v in sorted(vars(args).items())
                    if k not in ("func", "verb", "format", "no_timing") and v is not None},
    }
    try:
        payload, code = args.func(args, _Inputs(stdin))
    except BudgetExhausted as exc:
        payload, code = {"verdict": Verdict.UNKNOWN.value, "error": str(exc)}, EXIT_UNKNOWN
    except _INPUT_ERRORS as exc:
        payload, code = {"verdict": "InputError", "error": f"{type(exc).__name__}: {exc}"}, EXIT_INPUT
    report = {**base, **payload}
    if not args.no_timing:
        report["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
    return report, code


def _text(report: dict) -> str:
    lines = [f"{report['verb']}: {report.get('verdict')}"]
    for key in ("orders", "result", "bounds", "witness", "small_map", "error"):
        if key in report:
            lines.append(f"  {key}: {report[key]}")
    return "\n".join(lines)


def main(argv=None) -> int:
    args = _parse_args(sys.argv[1:] if argv is None else argv)
    report, code = execute(args)
    print(_text(report) if args.format == "text" else rp.dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
