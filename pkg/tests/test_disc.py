import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from satellite_kit import Germ, UniPoly, certify_disc, deflate, good_radius, parse_poly, pick_generic_direction
from satellite_kit.circle import grid, point
from satellite_kit.disc import dominance_radius, dominates, simplest_between
from satellite_kit.poly_core import restrict_to_line

from randpoly import random_germ
from strategies import gaussrats

F = Fraction


def test_deflate_examples():
    assert deflate(UniPoly([0, 0, 1, 2])) == (2, UniPoly([1, 2]))
    assert deflate(UniPoly([0, 0, 1, 1, 1])) == (2, UniPoly([1, 1, 1]))
    assert deflate(UniPoly([1, 1])) == (0, UniPoly([1, 1]))
    with pytest.raises(ValueError):
        deflate(UniPoly([]))


@given(st.lists(gaussrats, min_size=1, max_size=6).filter(any))
def test_deflate_reconstructs(coeffs):
    p = UniPoly(coeffs)
    k, u = deflate(p)
    assert u[0] and UniPoly([0] * k + list(u.coeffs)) == p


def test_simplest_between():
    assert simplest_between(F(3, 7), F(5, 9)) == F(1, 2)
    assert simplest_between(F(0), F(1, 3)) == 0
    assert simplest_between(F(7, 10) - F(1, 10 ** 6), F(7, 10) + F(1, 10 ** 6)) == F(7, 10)


def test_dominance_radius_examples():
    assert dominance_radius(UniPoly([1, 2]))[0] == F(1, 2)
    assert dominance_radius(UniPoly([1, 10]))[0] == F(1, 10)
    r, lo = dominance_radius(UniPoly([1, 1, 1]))
    # supremum is the golden ratio conjugate (sqrt(5) - 1) / 2
    assert abs(float(r) - 0.6180339887) < 1e-5
    assert dominates(UniPoly([1, 1, 1]), lo)
    assert dominance_radius(UniPoly([3]))[0] == 1


def test_good_radius_example(f_ex, g_ex):
    disc = good_radius(Germ(f_ex), Germ(g_ex), (1, 0, 1))
    assert disc.radius == F(1, 4)
    assert disc.deflated_f == UniPoly([1, 2])
    assert disc.deflated_g == UniPoly([1, 1, 1])
    assert disc.certificate_kind == "coefficient_bound"


def test_good_radius_other_examples():
    f = Germ(parse_poly("z1^2", 2))
    assert good_radius(f, f, (1, 0)).radius == F(1, 2)
    h = Germ(parse_poly("z1 + 10*z1^2", 1))
    assert good_radius(h, h, (1,)).radius == F(1, 20)


def test_good_radius_rejects_tangent_direction(f_ex, g_ex):
    with pytest.raises(ValueError):
        good_radius(Germ(f_ex), Germ(g_ex), (0, 1, 0))


def test_certify_disc_examples(f_ex, g_ex):
    f, g = Germ(f_ex), Germ(g_ex)
    check = certify_disc(f, g, (1, 0, 1), F(1, 4))
    assert check.ok and check.method == "coefficient_bound"
    # the roots of 1 + t + t^2 lie on |t| = 1 and -1/2 lies inside
    far = certify_disc(f, g, (1, 0, 1), 1)
    assert not far.ok
    z = Germ(parse_poly("z1^3", 2))
    assert certify_disc(z, z, (1, 1), 1000).ok


def test_winding_fallback_widens_radius():
    # u = 1 + 3t/2 + t^2/2 = (1 + t)(1 + t/2): dominance fails at 9/10, the zeros lie at -1, -2
    f = Germ(parse_poly("z1 + 3/2*z1^2 + 1/2*z1^3", 1))
    check = certify_disc(f, f, (1,), F(9, 10))
    assert check.ok and check.method == "winding_zero"
    assert certify_disc(f, f, (1,), F(3, 2)).status == "zeros_inside"


def _no_zero_on_samples(u, r):
    for k in (1, 2, 3, 4):
        rr = r * k / 4
        for half, s in grid(32):
            if not u(point(rr, half, s)):
                return False
    return u[0] != 0


def test_certified_discs_are_sound_and_monotone():
    rng = random.Random(2)
    for _ in range(40):
        n = rng.choice([2, 3])
        f = Germ(random_germ(rng, n, 1, 4, 5))
        g = Germ(random_germ(rng, n, 1, 4, 5))
        d = pick_generic_direction(f, g, rng.randrange(100))
        disc = good_radius(f, g, d)
        check = certify_disc(f, g, d, disc.radius)
        assert check.ok
        for u in (disc.deflated_f, disc.deflated_g):
            assert _no_zero_on_samples(u, disc.radius)
        if check.method == "coefficient_bound":
            for frac in (F(1, 3), F(7, 8)):
                assert certify_disc(f, g, d, disc.radius * frac).ok


def test_certified_disc_against_float_roots():
    import sympy
    t = sympy.Symbol("t")
    rng = random.Random(9)
    for _ in range(30):
        f = Germ(random_germ(rng, 2, 1, 5, 6))
        d = pick_generic_direction(f, f, rng.randrange(100))
        _, u = deflate(restrict_to_line(f.poly, d.d))
        expr = sum(sympy.Rational(c.re.numerator, c.re.denominator) * t ** k for k, c in enumerate(u))
        roots = sympy.Poly(expr, t).nroots() if u.degree > 0 else []
        smallest = min((abs(complex(z)) for z in roots), default=float("inf"))
        for r in (F(1, 8), F(1, 2), F(1), F(2)):
            check = certify_disc(f, f, d, r)
            if check.ok:
                assert smallest > float(r) * (1 - 1e-9)
            elif check.status == "zeros_inside":
                assert smallest < float(r) * (1 + 1e-9)
