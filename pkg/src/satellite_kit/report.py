"""JSON payloads for certificates.  Rationals are always strings ``p/q``."""

from __future__ import annotations

import json
from fractions import Fraction

from .disc import DiscCheck, GoodDisc
from .parser import render, render_gaussrat, render_uni
from .poly_core import GaussRat
from .rouche import SatelliteCertificate
from .small_map import SmallMapReport
from .weierstrass import LinearChange, WeierstrassFactorization, WeierstrassPair

SCHEMA = "satellite-kit/1"


def q(x) -> str | None:
    """Exact string form of a rational or Gaussian rational."""
    if x is None:
        return None
    if isinstance(x, GaussRat):
        return render_gaussrat(x)
    return str(Fraction(x))


def vec(v) -> list:
    return [q(x) for x in v]


def disc_payload(disc: GoodDisc) -> dict:
    return {
        "direction": vec(disc.direction),
        "radius": q(disc.radius),
        "method": disc.certificate_kind,
        "deflated_f": render_uni(disc.deflated_f),
        "deflated_g": render_uni(disc.deflated_g),
    }


def disc_check_payload(check: DiscCheck) -> dict:
    out = {"certified": check.ok, "status": check.status, "methods": list(check.methods)}
    if check.disc is not None:
        out.update(disc_payload(check.disc))
    return out


def certificate_payload(cert: SatelliteCertificate) -> dict:
    out = {
        "verdict": cert.verdict.value,
        "method": cert.method,
        "disc": disc_payload(cert.disc),
        "orders": {"f": cert.orders[0], "g": cert.orders[1]},
        "bounds": {"sup_fg": q(cert.sup_bound_fg), "inf_f": q(cert.inf_bound_f)},
    }
    if cert.witness_point is not None:
        out["witness"] = {
            "point": vec(cert.witness_point),
            "t": q(cert.witness_param),
            "count": cert.witness_count,
        }
    if cert.arcs is not None:
        out["arcs"] = [[h, q(lo), q(hi)] for h, lo, hi in cert.arcs]
    if cert.arcs_checked:
        out["arcs_checked"] = cert.arcs_checked
    return out


def change_payload(a: LinearChange) -> list:
    return [vec(row) for row in a.matrix]


def factorization_payload(fact: WeierstrassFactorization) -> dict:
    return {
        "N": fact.trunc_order,
        "nu": fact.nu,
        "residual_ok": fact.residual_checked,
        "original": render(fact.original),
        "w": render(fact.w),
        "u": render(fact.u),
    }


def pair_payload(pair: WeierstrassPair) -> dict:
    return {
        "N": pair.f_factorization.trunc_order,
        "residual_ok": pair.f_factorization.residual_checked and pair.g_factorization.residual_checked,
        "change": change_payload(pair.change),
        "f": factorization_payload(pair.f_factorization),
        "g": factorization_payload(pair.g_factorization),
        "f_prime_reduced": pair.f_prime_reduced,
        "g_prime_reduced": pair.g_prime_reduced,
    }


def small_map_payload(rep: SmallMapReport) -> dict:
    return {
        "r": q(rep.r),
        "rho": q(rep.rho),
        "m": q(rep.m),
        "L": q(rep.L),
        "eta": q(rep.eta),
        "disp": q(rep.disp),
        "pass": rep.passed,
        "status": rep.status,
        "disc_ok": rep.disc_ok,
        "orders": {"f": rep.order_f, "g": rep.order_g},
        "homeomorphism_checked": rep.homeomorphism_checked,
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False)


def strip_timing(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timing"}
