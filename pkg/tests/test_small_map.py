import random
from fractions import Fraction

import pytest

from satellite_kit import (
    Germ,
    Poly,
    Verdict,
    certify_satellite,
    check_f_small,
    displacement_bound,
    lipschitz_bound,
    order,
    parse_poly,
)
from satellite_kit.disc import certify_disc
from satellite_kit.errors import BadRadius, NotAGermError

from randpoly import random_germ

F = Fraction


def P(text, n=2):
    return parse_poly(text, n)


def identity(n):
    return [Poly.var(n, i) for i in range(n)]


def quadratic_perturbation(eps, n=2):
    return [Poly.var(n, i) + Poly.var(n, i) ** 2 * eps for i in range(n)]


def test_lipschitz_examples(f_ex):
    assert lipschitz_bound(P("z1^2 + z2^2"), F(1, 2)) == 2
    lin = P("3*z1 - 1/2*z2")
    assert lipschitz_bound(lin, F(1, 10)) == lipschitz_bound(lin, 5) == F(7, 2)
    r = F(1, 4)
    expected = (2 * r + 3 * r ** 2) + (3 * r ** 2 + 4 * r ** 3) + 3 * r ** 2
    assert lipschitz_bound(f_ex, r) == expected


def test_displacement_examples():
    assert displacement_bound(identity(3), F(1, 2)) == 0
    assert displacement_bound(quadratic_perturbation(F(1, 10)), F(1, 2)) == F(2, 10) / 4
    shear = [P("z1 + z2"), P("z2")]
    assert displacement_bound(shear, F(1, 2)) == F(1, 2)
    a = [P("2*z1 - z2"), P("1/2*z1 + z2")]
    # rows of A - I: (1, -1) and (1/2, 0)
    assert displacement_bound(a, F(1, 3)) == F(5, 2) * F(1, 3)


def test_displacement_rejects_moving_origin():
    with pytest.raises(NotAGermError):
        displacement_bound([P("z1 + 1"), P("z2")], F(1, 2))


def test_displacement_monotone_in_r():
    phi = [P("z1 + z1*z2 - 2*z2^3"), P("z2 - 1/3*z1^2")]
    values = [displacement_bound(phi, F(k, 8)) for k in range(1, 9)]
    assert values == sorted(values)


def test_identity_passes():
    rep = check_f_small(P("z1^2 + z2^2"), identity(2), F(1, 2), (1, 0), F(1, 4))
    assert (rep.m, rep.L, rep.eta, rep.disp) == (F(1, 16), 2, F(1, 48), 0)
    assert rep.passed and rep.order_f == rep.order_g == 2
    assert rep.homeomorphism_checked is False


@pytest.mark.parametrize("eps, passes", [
    (F(1, 100), True), (F(1, 25), True), (F(1, 24), False), (F(1, 2), False), (F(-1, 30), True),
])
def test_quadratic_threshold(eps, passes):
    # disp = |eps|/2 against eta = 1/48: pass iff |eps| < 1/24
    rep = check_f_small(P("z1^2 + z2^2"), quadratic_perturbation(eps), F(1, 2), (1, 0), F(1, 4))
    assert rep.passed is passes
    assert rep.status == ("pass" if passes else "fail")


def test_shear_fails():
    rep = check_f_small(P("z1^2 + z2^2"), [P("z1 + z2"), P("z2")], F(1, 2), (1, 0), F(1, 4))
    assert rep.disp == F(1, 2) and not rep.passed


def test_bad_radius():
    with pytest.raises(BadRadius):
        check_f_small(P("z1^2 + z2^2"), identity(2), F(1, 2), (1, 0), F(1, 3))
    with pytest.raises(BadRadius):
        check_f_small(P("z1^2 + z2^2"), identity(2), F(1, 2), (2, 0), F(1, 4))


def test_eta_identity_and_consistency():
    rng = random.Random(6)
    passed = 0
    for _ in range(60):
        n = rng.choice([2, 3])
        f = Germ(random_germ(rng, n, 1, 4, 4))
        eps = F(rng.choice([1, -1, 1, 3]), rng.choice([10, 100, 1000, 10000]))
        phi = [Poly.var(n, i) + random_germ(rng, n, 2, 3, 2) * eps for i in range(n)]
        d = tuple(rng.choice([1, 1, 2, -1]) if i == 0 else rng.choice([0, 1]) for i in range(n))
        try:
            rep = check_f_small(f, phi, F(1, 2), d, F(1, 8))
        except BadRadius:
            continue
        if rep.m is not None and rep.eta is not None:
            assert rep.eta * (rep.L + 1) == rep.m
        if rep.passed:
            passed += 1
            g = Germ(f.poly.compose(phi))
            assert order(g.poly) == f.order
            disc = certify_disc(f, g, d, F(1, 8)).disc
            assert certify_satellite(f, g, disc).verdict is not Verdict.REFUTED
    assert passed >= 5
