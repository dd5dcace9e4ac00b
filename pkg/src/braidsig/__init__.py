"""
Classical invariants of positive braid closures.

Signature and signature defect from the Seifert form of the fibre surface,
twist number, the volume intervals that follow from them, and a checkable
certificate for the linear bound of the twist number by the defect.
"""

from .braid import (
    BraidParseError,
    BraidWord,
    Permutation,
    SyllableWord,
    components,
    hyperbolicity_criterion,
    is_sufficiently_complicated,
    normalize_far_commutation,
    parse_braid,
    permutation,
    syllables,
    twist_number,
)
from .inertia import SignatureTriple, inertia, signature
from .seifert import Brick, SeifertMatrix, SurfaceData, bricks, link_signature, seifert_matrix, surface_data
from .bounds import (
    PRINTED,
    VOLUMES,
    Constants,
    cut_bound_check,
    cut_decomposition,
    signature_defect,
    thm1_bounds,
    thm2_bounds,
    thm3_check,
)
from .certificates import best_class, certificate_check, extract_subwords, place_dots, three_braid_bound
from .report import InvariantReport, invariant_report

__version__ = "0.1.0"
