"""Exact cohomology and homotopy computations separating oriented
Grassmannians of 2-planes from complex projective spaces."""

__version__ = "0.1.0"

from .abelian import (FGAbelianGroup, IntMatrix, PresentedHom, cokernel, extensions, image,
                      invariant_factors, is_exact_at, kernel, smith_normal_form)
from .catalog import (additive_groups, homotopy_table_of, orientation_of, presentation_of, ring_of,
                      space_data)
from .distinguish import full_report, groups_equal, invariants_of, isomorphism_search
from .grading import (GradedRing, RingPresentation, compute, cup, integrate, normal_form,
                      parse_presentation, validate_homogeneous)
from .gysin import (assemble_total, build_e2, d2_from_euler, gysin_pipeline, required_d2_profile,
                    take_limit, verify_total)
from .homotopy import PiTable, first_difference, grass_fibration, hopf, les_base
from .spaces import (CP, GrassEven, GrassOdd, S2xS2, SpaceId, Sphere, StiefelEven, StiefelOdd,
                     parse_space)
from .suite import ReportDocument, reproduction_suite

__all__ = [
    "FGAbelianGroup", "IntMatrix", "PresentedHom", "cokernel", "extensions", "image",
    "invariant_factors", "is_exact_at", "kernel", "smith_normal_form", "additive_groups",
    "homotopy_table_of", "orientation_of", "presentation_of", "ring_of", "space_data",
    "full_report", "groups_equal", "invariants_of", "isomorphism_search", "GradedRing",
    "RingPresentation", "compute", "cup", "integrate", "normal_form", "parse_presentation",
    "validate_homogeneous", "assemble_total", "build_e2", "d2_from_euler", "gysin_pipeline",
    "required_d2_profile", "take_limit", "verify_total", "PiTable", "first_difference",
    "grass_fibration", "hopf", "les_base", "CP", "GrassEven", "GrassOdd", "S2xS2", "SpaceId",
    "Sphere", "StiefelEven", "StiefelOdd", "parse_space", "ReportDocument", "reproduction_suite",
]
