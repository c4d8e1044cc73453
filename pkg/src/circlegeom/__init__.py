"""Convex geometries on small ground sets and their representation by circles.

The library enumerates all non-isomorphic convex geometries on up to five
elements, computes implication bases and convex dimension, decides whether a
planar arrangement of circles represents a given geometry, and detects the
two tight-implication patterns that rule out any circle representation.
"""

from circlegeom.sets import (
    GroundSet,
    ConvexGeometry,
    subset_encode,
    subset_decode,
    family_encode,
    family_decode,
    closure,
    is_convex_geometry,
    anti_exchange_holds,
    is_antimatroid,
    complement_family,
    apply_permutation,
    canonical_form,
    canonical_permutation,
    enumerate_geometries,
)
from circlegeom.implications import (
    Implication,
    ImplicationBasis,
    implication_holds,
    generate_basis,
    reduce_pairwise,
    alignment_from_implications,
    is_tight,
    tight_implications,
)
from circlegeom.dimension import (
    upper_covers,
    meet_irreducibles,
    max_antichain_size,
    max_antichain_size_bruteforce,
    convex_dimension,
)
from circlegeom.disks import (
    Circle,
    Configuration,
    Arc,
    Segment,
    HullBoundary,
    Containment,
    MarginalPair,
    MarginalGeometryError,
    DegenerateGeometryError,
    support_value,
    span,
    point_on,
    orient2d,
    hull_boundary,
    classify_triple,
    disk_in_hull,
    ch_c,
    ch_c_detailed,
    induced_alignment,
    induced_alignment_detailed,
)
from circlegeom.representation import (
    VerificationReport,
    ObstructionCertificate,
    verify_full,
    verify_by_propositions,
    triangle_property_check,
    centers_hull_check,
    detect_obstructions,
    derive_representation,
    relabel_configuration,
)
from circlegeom.catalog import (
    CatalogRecord,
    build_catalog,
    build_record,
    attach_representation,
    search,
    save_catalog,
    load_catalog,
    save_configuration,
    load_configuration,
)
from circlegeom.tikz import export_tikz

__all__ = [
    "GroundSet",
    "ConvexGeometry",
    "subset_encode",
    "subset_decode",
    "family_encode",
    "family_decode",
    "closure",
    "is_convex_geometry",
    "anti_exchange_holds",
    "is_antimatroid",
    "complement_family",
    "apply_permutation",
    "canonical_form",
    "canonical_permutation",
    "enumerate_geometries",
    "Implication",
    "ImplicationBasis",
    "implication_holds",
    "generate_basis",
    "reduce_pairwise",
    "alignment_from_implications",
    "is_tight",
    "tight_implications",
    "upper_covers",
    "meet_irreducibles",
    "max_antichain_size",
    "max_antichain_size_bruteforce",
    "convex_dimension",
    "Circle",
    "Configuration",
    "Arc",
    "Segment",
    "HullBoundary",
    "Containment",
    "MarginalPair",
    "MarginalGeometryError",
    "DegenerateGeometryError",
    "support_value",
    "span",
    "point_on",
    "orient2d",
    "hull_boundary",
    "classify_triple",
    "disk_in_hull",
    "ch_c",
    "ch_c_detailed",
    "induced_alignment",
    "induced_alignment_detailed",
    "VerificationReport",
    "ObstructionCertificate",
    "verify_full",
    "verify_by_propositions",
    "triangle_property_check",
    "centers_hull_check",
    "detect_obstructions",
    "derive_representation",
    "relabel_configuration",
    "CatalogRecord",
    "build_catalog",
    "build_record",
    "attach_representation",
    "search",
    "save_catalog",
    "load_catalog",
    "save_configuration",
    "load_configuration",
    "export_tikz",
]
