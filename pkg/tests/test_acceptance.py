"""Acceptance criteria, one marked test (or group) per criterion.

The terminal summary prints one PASS/FAIL line per criterion.
"""

import random
import time
from fractions import Fraction
from functools import lru_cache

import pytest

from satellite_kit import (
    Germ,
    Poly,
    UniPoly,
    Verdict,
    certify_satellite,
    check_f_small,
    construct_pair,
    good_radius,
    order,
    parse_poly,
    restrict_to_line,
    search_satellite,
    winding_number,
)
from satellite_kit import cli
from satellite_kit.poly_core import abs_sq, eval_exact
from satellite_kit.report import certificate_payload, dumps, small_map_payload, strip_timing

from conftest import F_EX, G_EX
from randpoly import random_coeff, random_exponent, random_germ, random_pair

F = Fraction
LINE = (1, 0, 1)
SOUNDNESS_PAIRS = 200
SOUNDNESS_SEED = 2024
CONSTRUCTION_PAIRS = 50
SMALL_MAP_CASES = 60


def example_pair():
    return Germ(parse_poly(F_EX, 3)), Germ(parse_poly(G_EX, 3))


# ---- 1 -------------------------------------------------------------------


@pytest.mark.criterion(1, "worked example bit-exact (5/256, 1/32, 11/256, both directions Proved) < 1 s")
def test_example_bit_exact():
    start = time.perf_counter()
    f, g = example_pair()
    assert f.order == g.order == 2
    fwd = certify_satellite(f, g, good_radius(f, g, LINE))
    back = certify_satellite(g, f, good_radius(g, f, LINE))
    elapsed = time.perf_counter() - start
    assert fwd.disc.radius == back.disc.radius == F(1, 4)
    assert fwd.verdict is Verdict.PROVED and back.verdict is Verdict.PROVED
    assert fwd.sup_bound_fg == F(5, 256) and back.sup_bound_fg == F(5, 256)
    assert fwd.inf_bound_f == F(1, 32) == F(2, 4 ** 3)
    assert back.inf_bound_f == F(11, 256)
    assert elapsed < 1.0


# ---- 2 -------------------------------------------------------------------


@pytest.mark.criterion(2, "good_radius on the worked example returns 1/4, deflations 1+2t and 1+t+t^2")
def test_good_disc_reproduction():
    f, g = example_pair()
    disc = good_radius(f, g, LINE, F(1, 2))
    assert disc.radius == F(1, 4)
    assert disc.deflated_f == UniPoly([1, 2])
    assert disc.deflated_g == UniPoly([1, 1, 1])
    # the deflated roots: -1/2 and a, conj(a) with a^2 + a + 1 = 0
    assert disc.deflated_f(F(-1, 2)) == 0
    assert restrict_to_line(f.poly, LINE) == UniPoly([0, 0, 1, 2])
    assert restrict_to_line(g.poly, LINE) == UniPoly([0, 0, 1, 1, 1])


# ---- 3 -------------------------------------------------------------------


def _assert_exact_witness(cert, f, g):
    assert cert.verdict is Verdict.REFUTED
    w = cert.witness_point
    assert abs_sq(cert.witness_param) == cert.disc.radius ** 2
    fw, gw = eval_exact(f.poly, w), eval_exact(g.poly, w)
    assert abs_sq(fw - gw) >= abs_sq(fw)


@pytest.mark.criterion(3, "(f, -f) refuted with exact witness on every disc; f/2 one-sided; < 1 s each")
def test_negation_refuted_on_every_disc():
    f, _ = example_pair()
    neg = Germ(-f.poly)
    from satellite_kit import pick_generic_direction
    directions = [LINE] + [pick_generic_direction(f, neg, s).d for s in range(3)]
    for d in directions:
        for safety in (F(1, 2), F(1, 4), F(1, 8)):
            start = time.perf_counter()
            cert = certify_satellite(f, neg, good_radius(f, neg, d, safety))
            assert time.perf_counter() - start < 1.0
            _assert_exact_witness(cert, f, neg)


@pytest.mark.criterion(3, "(f, -f) refuted with exact witness on every disc; f/2 one-sided; < 1 s each")
def test_half_is_one_sided():
    f, _ = example_pair()
    half = Germ(f.poly / 2)
    disc = good_radius(f, half, LINE)
    start = time.perf_counter()
    fwd = certify_satellite(f, half, disc)
    assert time.perf_counter() - start < 1.0
    start = time.perf_counter()
    rev = certify_satellite(half, f, disc)
    assert time.perf_counter() - start < 1.0
    assert fwd.verdict is Verdict.PROVED
    _assert_exact_witness(rev, half, f)


# ---- 4 and 5 -------------------------------------------------------------


@lru_cache(maxsize=None)
def soundness_run():
    rng = random.Random(SOUNDNESS_SEED)
    start = time.perf_counter()
    out = []
    for i in range(SOUNDNESS_PAIRS):
        f, g = random_pair(rng)
        out.append((f, g, search_satellite(f, g, seed=i)))
    return out, time.perf_counter() - start


@pytest.mark.criterion(4, f"{SOUNDNESS_PAIRS} random pairs: every Proved certificate has equal orders, < 60 s")
def test_soundness_suite():
    results, elapsed = soundness_run()
    assert len(results) >= 200
    violations = []
    for f, g, cert in results:
        assert f.nvars in (2, 3) and f.total_degree() <= 6 and g.total_degree() <= 6
        assert len(f) <= 8 and len(g) <= 8
        if cert.proved and order(f) != order(g):
            violations.append((f, g))
    proved = sum(cert.proved for _, _, cert in results)
    refuted = sum(cert.verdict is Verdict.REFUTED for _, _, cert in results)
    print(f"soundness: {proved} proved, {refuted} refuted, {len(results) - proved - refuted} unknown, "
          f"{elapsed:.1f} s")
    assert not violations
    assert proved >= 50 and refuted >= 20
    assert elapsed < 60


@pytest.mark.criterion(5, "winding counts of both restrictions agree and equal the orders for every Proved case")
def test_winding_cross_check():
    results, _ = soundness_run()
    checked = 0
    for f, g, cert in results:
        if not cert.proved:
            continue
        d, r = cert.disc.direction, cert.disc.radius
        wf = winding_number(restrict_to_line(f, d.d), r).count
        wg = winding_number(restrict_to_line(g, d.d), r).count
        assert wf == wg == order(f) == order(g)
        checked += 1
    assert checked >= 50


# ---- 6 -------------------------------------------------------------------


def _germ_of_order(rng, n, nu):
    p = random_germ(rng, n, nu, 6, 7)
    return p + Poly(n, {random_exponent(rng, n, nu): random_coeff(rng)})


@pytest.mark.criterion(6, f"{CONSTRUCTION_PAIRS} Weierstrass constructions: axis z_n^nu, zero residual, bounds (0, r^nu), < 120 s")
def test_weierstrass_construction():
    rng = random.Random(7)
    start = time.perf_counter()
    done = 0
    attempt = 0
    while done < CONSTRUCTION_PAIRS:
        attempt += 1
        nu = rng.randint(1, 4)
        n = rng.choice([2, 3])
        f, g = _germ_of_order(rng, n, nu), _germ_of_order(rng, n, nu)
        if order(f) != nu or order(g) != nu:
            continue
        pair = construct_pair(f, g, seed=attempt)
        big_n = 2 * nu + 4
        axis = Poly.monomial((0,) * (n - 1) + (nu,))
        for fact in (pair.f_factorization, pair.g_factorization):
            assert fact.trunc_order == big_n
            on_axis = Poly(n, {e: c for e, c in fact.w.terms.items() if not any(e[:-1])})
            assert on_axis == axis
            assert fact.residual_checked
            assert all(sum(e) > big_n for e in (fact.original - fact.u * fact.w).terms)
        cert = pair.certificate
        assert cert.verdict is Verdict.PROVED
        assert cert.sup_bound_fg == 0
        assert cert.inf_bound_f == cert.disc.radius ** nu
        done += 1
    assert time.perf_counter() - start < 120


# ---- 7 -------------------------------------------------------------------


def _perturbed(eps, n=2):
    return [Poly.var(n, i) + Poly.var(n, i) ** 2 * eps for i in range(n)]


@pytest.mark.criterion(7, "small-map checker: eps=1/100 passes, eps=1/2 fails, every randomized pass keeps the order")
def test_small_map_thresholds():
    f = parse_poly("z1^2 + z2^2", 2)
    good = check_f_small(f, _perturbed(F(1, 100)), F(1, 2), (1, 0), F(1, 4))
    bad = check_f_small(f, _perturbed(F(1, 2)), F(1, 2), (1, 0), F(1, 4))
    assert good.passed and good.order_f == good.order_g == 2
    assert not bad.passed


@pytest.mark.criterion(7, "small-map checker: eps=1/100 passes, eps=1/2 fails, every randomized pass keeps the order")
def test_small_map_randomized():
    rng = random.Random(33)
    cases = passes = 0
    while cases < SMALL_MAP_CASES:
        n = rng.choice([2, 3])
        f = Germ(random_germ(rng, n, 1, 4, 5))
        eps = F(rng.choice([1, -1, 2, 5]), rng.choice([8, 64, 512, 4096]))
        phi = [Poly.var(n, i) + random_germ(rng, n, 2, 3, 2) * eps for i in range(n)]
        d = tuple(rng.choice([1, -1]) if i == 0 else rng.choice([0, 1, -1]) for i in range(n))
        rep = check_f_small(f, phi, F(1, 2), d, F(1, 4))
        cases += 1
        if rep.passed:
            passes += 1
            assert order(f.poly.compose(phi)) == f.order
            assert rep.orders_match
    assert passes >= 10


# ---- 8 -------------------------------------------------------------------


CLI_RUNS = [
    ["certify", F_EX, G_EX, "--line", "1,0,1", "--radius", "1/4"],
    ["certify", F_EX, f"-1*({F_EX})", "--line", "1,0,1", "--radius", "1/4"],
    ["certify", F_EX, G_EX, "--seed", "5"],
    ["good-disc", F_EX, G_EX, "--line", "1,0,1"],
    ["zariski-demo", F_EX, G_EX, "--seed", "2"],
    ["small-map", "z1^2 + z2^2", "--phi", "z1 + 1/100*z1^2", "--phi", "z2 + 1/100*z2^2",
     "--r", "1/2", "--rho", "1/4"],
    ["count-zeros", "t^2 + 2*t^3", "--radius", "1"],
]


@pytest.mark.criterion(8, "repeated runs with the same seed give byte-identical JSON (timing excluded)")
@pytest.mark.parametrize("argv", CLI_RUNS, ids=lambda a: a[0])
def test_cli_determinism(argv):
    first = dumps(strip_timing(cli.run(argv)[0]))
    second = dumps(strip_timing(cli.run(argv)[0]))
    assert first == second


@pytest.mark.criterion(8, "repeated runs with the same seed give byte-identical JSON (timing excluded)")
def test_library_determinism():
    def batch():
        rng = random.Random(SOUNDNESS_SEED)
        out = []
        for i in range(40):
            f, g = random_pair(rng)
            out.append(certificate_payload(search_satellite(f, g, seed=i)))
        f = parse_poly("z1^2 + z2^2", 2)
        out.append(small_map_payload(check_f_small(f, _perturbed(F(1, 100)), F(1, 2), (1, 0), F(1, 4))))
        return dumps({"runs": out})

    assert batch() == batch()
