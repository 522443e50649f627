"""Exact computation with virtual-variable presentations of central elements
of U(gl(n)) and their eigenvalue polynomials."""

from .central import H, I, J, K, S, CentralSpec, build_program, eigenvalue_action, eigenvalue_closed, parse_spec
from .enveloping import UElement, devirtualize, e, pbw_normal_form
from .partitions import Partition, conjugate, horizontal_strips, hook_number, vertical_strips
from .shifted import ShiftedPolynomial, chi, olshanski_project, omega_involution, s_star_poly
from .superalgebra import Polarization, SuperPolynomial, alpha, beta, x
from .tableaux import Tableau, bitableau_value, straighten

__version__ = "0.1.0"

__all__ = [
    "CentralSpec",
    "H",
    "I",
    "J",
    "K",
    "S",
    "Partition",
    "Polarization",
    "ShiftedPolynomial",
    "SuperPolynomial",
    "Tableau",
    "UElement",
    "alpha",
    "beta",
    "bitableau_value",
    "build_program",
    "chi",
    "conjugate",
    "devirtualize",
    "e",
    "eigenvalue_action",
    "eigenvalue_closed",
    "hook_number",
    "horizontal_strips",
    "olshanski_project",
    "omega_involution",
    "parse_spec",
    "pbw_normal_form",
    "s_star_poly",
    "straighten",
    "vertical_strips",
    "x",
]
