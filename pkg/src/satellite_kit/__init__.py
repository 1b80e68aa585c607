"""Multiplicity and Rouché-satellite certificates for polynomial hypersurface germs."""

from .disc import GoodDisc, certify_disc, deflate, good_radius
from .germ import Direction, Germ, family_orders, initial_form, is_reduced, order, pick_generic_direction
from .parser import parse_poly, render
from .poly_core import GaussRat, Poly, UniPoly, abs_sq, abs_upper, arith, eval_exact, restrict_to_line
from .rouche import SatelliteCertificate, Verdict, certify_satellite, search_satellite
from .small_map import check_f_small, displacement_bound, lipschitz_bound
from .weierstrass import axis_normalize, construct_pair, prepare
from .winding import winding_number

__version__ = "0.1.0"

__all__ = [
    "Direction", "GaussRat", "Germ", "GoodDisc", "Poly", "SatelliteCertificate", "UniPoly", "Verdict",
    "abs_sq", "abs_upper", "arith", "axis_normalize", "certify_disc", "certify_satellite",
    "check_f_small", "construct_pair", "deflate", "displacement_bound", "eval_exact", "family_orders",
    "good_radius", "initial_form", "is_reduced", "lipschitz_bound", "order", "parse_poly",
    "pick_generic_direction", "prepare", "render", "restrict_to_line", "search_satellite",
    "winding_number",
]
