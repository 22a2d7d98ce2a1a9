"""Linear determinantal representations of smooth plane cubics over finite fields."""

from .census import census_run, verify_representatives
from .curve import (Divisor, NormalizedCubic, ProjectivePoint, SmoothCubic, divisor_of_form,
                    is_smooth, make_cubic, normalize, ord_at, parse_point, rational_points)
from .detrep import (DetRep, WeierstrassCurve, detrep_algorithm, detrep_all, detrep_formula,
                     detrep_galinat, detrep_transport, detrep_verify)
from .equiv import brute_force_equivalent, equivalent, recover_point
from .errors import CubicDetError, UsageError
from .field import GF, QQ, parse_field_spec
from .forms import LinearMatrix, TernaryForm, parse_form, print_form
from .linsys import forms_vanishing, multiplication_kernel, rr_space

__all__ = [
    "census_run", "verify_representatives",
    "Divisor", "NormalizedCubic", "ProjectivePoint", "SmoothCubic", "divisor_of_form",
    "is_smooth", "make_cubic", "normalize", "ord_at", "parse_point", "rational_points",
    "DetRep", "WeierstrassCurve", "detrep_algorithm", "detrep_all", "detrep_formula",
    "detrep_galinat", "detrep_transport", "detrep_verify",
    "brute_force_equivalent", "equivalent", "recover_point",
    "CubicDetError", "UsageError", "GF", "QQ", "parse_field_spec",
    "LinearMatrix", "TernaryForm", "parse_form", "print_form",
    "forms_vanishing", "multiplication_kernel", "rr_space",
]
