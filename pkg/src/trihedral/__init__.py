"""Crepant resolutions of trihedral singularities C^3/G and their Euler numbers."""

from .errors import InvariantViolation, SpecError, TrihedralError
from .groups import (
    DiagonalElement,
    DiagonalGroup,
    GroupType,
    TrihedralElement,
    classify_type,
    compose,
    conjugacy_classes_enum,
    conjugacy_count_formula,
    enumerate_group,
    generate_diagonal_group,
    make_diagonal,
    orbifold_euler,
)
from .resolution import ResolutionReport, build_report
from .triangulation import Triangulation, build_symmetric_triangulation

__version__ = "0.1.0"

__all__ = [
    "DiagonalElement",
    "DiagonalGroup",
    "GroupType",
    "InvariantViolation",
    "ResolutionReport",
    "SpecError",
    "Triangulation",
    "TrihedralElement",
    "TrihedralError",
    "build_report",
    "build_symmetric_triangulation",
    "classify_type",
    "compose",
    "conjugacy_classes_enum",
    "conjugacy_count_formula",
    "enumerate_group",
    "generate_diagonal_group",
    "make_diagonal",
    "orbifold_euler",
]
