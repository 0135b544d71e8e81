"""Knot Floer homology of satellite knots from bordered box tensor products."""
from .cfk import (CfkModel, LaurentPoly, LspaceSpec, ModelError, alexander_polynomial,
                  build_lspace_model, build_thin_model, load_model, model_from_json, validate)
from .csc import CscVerdict, check_csc
from .homology import HfkTable, homology, symmetrize
from .invariants import InvariantReport, derive_invariants
from .pipeline import pattern_alexander, satellite_complex, satellite_hfk

__all__ = [
    "CfkModel", "LaurentPoly", "LspaceSpec", "ModelError", "alexander_polynomial",
    "build_lspace_model", "build_thin_model", "load_model", "model_from_json", "validate",
    "CscVerdict", "check_csc", "HfkTable", "homology", "symmetrize",
    "InvariantReport", "derive_invariants", "pattern_alexander", "satellite_complex", "satellite_hfk",
]
