"""Moebius iterated function systems on the closed unit disc.

Construct certified disc contractions from image-disc parameters, check
arbitrary coefficient quadruples, compute attractors by Hutchinson iteration
or chaos game, and render them to portable pixmaps.
"""

from .attractor import (
    canonicalize,
    chaos_game,
    hausdorff_distance,
    hutchinson_step,
    iterate_attractor,
    unit_circle_points,
)
from .circles import Circle, DegenerateImage, GeneralizedCircle, Line, image_of_circle, image_of_unit_disc
from .contraction import (
    ContractionCertificate,
    ContractionFailure,
    NotContractive,
    certify_contraction,
    check_maps_into_disc,
)
from .generator import (
    DiscImageSpec,
    InvalidRange,
    InvalidSpec,
    MoebiusIFS,
    make_contraction,
    recover_disc_image,
    recover_spec,
    sample_random_mifs,
    transform_from_spec,
)
from .moebius import (
    IDENTITY,
    INFINITY,
    DegenerateMap,
    ExtendedComplex,
    MoebiusTransform,
    PoleEvaluation,
    is_finite_point,
)
from .raster import IoFailure, Raster, draw_circles, rasterize, write_pnm

__all__ = [
    "Circle",
    "ContractionCertificate",
    "ContractionFailure",
    "DegenerateImage",
    "DegenerateMap",
    "DiscImageSpec",
    "ExtendedComplex",
    "GeneralizedCircle",
    "IDENTITY",
    "INFINITY",
    "InvalidRange",
    "InvalidSpec",
    "IoFailure",
    "Line",
    "MoebiusIFS",
    "MoebiusTransform",
    "NotContractive",
    "PoleEvaluation",
    "Raster",
    "canonicalize",
    "certify_contraction",
    "chaos_game",
    "check_maps_into_disc",
    "draw_circles",
    "hausdorff_distance",
    "hutchinson_step",
    "image_of_circle",
    "image_of_unit_disc",
    "is_finite_point",
    "iterate_attractor",
    "make_contraction",
    "rasterize",
    "recover_disc_image",
    "recover_spec",
    "sample_random_mifs",
    "transform_from_spec",
    "unit_circle_points",
    "write_pnm",
]

__version__ = "0.1.0"
