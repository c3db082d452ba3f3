"""Disc-invariance and contractivity tests for Moebius maps.

A normalized map sends the closed unit disc into itself iff |c| < |d| and
|a*conj(c) - b*conj(d)| + 1 <= |d|^2 - |c|^2; it does so contractively iff
the first condition sharpens to |d| - |c| > 1.  Both predicates are raw
floating-point comparisons with no tolerance slack.  A successful
certification carries the sharp Lipschitz constant 1 / (|d| - |c|)^2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .circles import Circle, image_of_unit_disc
from .moebius import MoebiusTransform


class ContractionFailure(enum.Enum):
    """Which contractivity inequality a rejected map violates."""

    #: fails |d| - |c| > 1 (denominator not bounded away from 1 on the disc)
    DENOMINATOR_GAP = "fails |d| - |c| > 1"
    #: fails |a*conj(c) - b*conj(d)| + 1 <= |d|^2 - |c|^2 (image disc not inside the unit disc)
    IMAGE_CONTAINMENT = "fails |a*conj(c) - b*conj(d)| + 1 <= |d|^2 - |c|^2"


class NotContractive(ValueError):
    """Raised when certification fails; ``reason`` names the violated inequality."""

    def __init__(self, reason: ContractionFailure):
        super().__init__(f"map does not contract the unit disc: {reason.value}")
        self.reason = reason


@dataclass(frozen=True)
class ContractionCertificate:
    """Proof object for a certified disc contraction.

    ``lipschitz`` is the sharp bound on |phi(z) - phi(w)| / |z - w| over the
    disc, ``min_denominator`` the minimum of |cz + d| there, and ``image``
    the boundary circle of the image disc.
    """

    transform: MoebiusTransform
    lipschitz: float
    min_denominator: float
    image: Circle

    def __post_init__(self):
        if not self.min_denominator > 1.0:
            raise ValueError(f"min_denominator must exceed 1, got {self.min_denominator!r}")
        if not 0.0 < self.lipschitz < 1.0:
            raise ValueError(f"lipschitz must lie in (0, 1), got {self.lipschitz!r}")
        if abs(self.lipschitz - 1.0 / self.min_denominator**2) > 1e-12:
            raise ValueError("lipschitz does not match 1 / min_denominator^2")
        if self.image.radius + abs(self.image.center) > 1.0 + 1e-9:
            raise ValueError("image disc is not contained in the unit disc")


def check_maps_into_disc(t: MoebiusTransform) -> bool:
    """True iff the map sends the closed unit disc into itself."""
    ac, bd = abs(t.c), abs(t.d)
    if not ac < bd:
        return False
    return abs(t.a * t.c.conjugate() - t.b * t.d.conjugate()) + 1.0 <= bd * bd - ac * ac


def certify_contraction(t: MoebiusTransform) -> ContractionCertificate:
    """Certificate that the map contracts the disc, or NotContractive."""
    gap = abs(t.d) - abs(t.c)
    if not gap > 1.0:
        raise NotContractive(ContractionFailure.DENOMINATOR_GAP)
    lhs = abs(t.a * t.c.conjugate() - t.b * t.d.conjugate()) + 1.0
    rhs = abs(t.d) ** 2 - abs(t.c) ** 2
    if not lhs <= rhs:
        raise NotContractive(ContractionFailure.IMAGE_CONTAINMENT)
    return ContractionCertificate(
        transform=t,
        lipschitz=1.0 / (gap * gap),
        min_denominator=gap,
        image=image_of_unit_disc(t),
    )
