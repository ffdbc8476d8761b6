"""Knot invariants from Seifert matrices and obstructions to untwisting moves."""

from .catalog import KnotRecord, bundled_catalog, load_catalog, parse_catalog
from .invariants import (
    KnotInvariants,
    SeifertMatrix,
    alexander_polynomial,
    double_cover_homology,
    knot_invariants,
    signed_determinant,
    symmetrized_form,
    validate_seifert,
)
from .laurent import LaurentPoly, parse as parse_laurent
from .obstruction import (
    NOT_OBSTRUCTED,
    OBSTRUCTED,
    ObstructionReport,
    evaluate,
    scan,
)

__version__ = "0.1.0"
