"""Exact-arithmetic toolkit for ADE root systems in Picard lattices of
blown-up planes, their Chevalley/loop/affine brackets, negative-curve
classes, graded deformation systems, and plane general-position checks."""

from .picard import (
    DivisorClass,
    SurfaceLattice,
    canonical_class,
    class_kind,
    euler_characteristic,
    intersect,
)
from .roots import (
    AffineCurveConfig,
    AffineRootSystem,
    DynkinReport,
    RootSystem,
    change_extended_root,
    classify_diagram,
    enumerate_affine_real_roots,
    enumerate_en_roots,
    find_base,
    height,
    standard_root_system,
)

__all__ = [
    "DivisorClass",
    "SurfaceLattice",
    "canonical_class",
    "class_kind",
    "euler_characteristic",
    "intersect",
    "AffineCurveConfig",
    "AffineRootSystem",
    "DynkinReport",
    "RootSystem",
    "change_extended_root",
    "classify_diagram",
    "enumerate_affine_real_roots",
    "enumerate_en_roots",
    "find_base",
    "height",
    "standard_root_system",
]

__version__ = "0.1.0"
