"""Images of circles under Moebius maps.

A circle maps to a circle unless it passes through the pole of the map,
in which case the image is a line; the closed forms for the image center
and radius are evaluated directly.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Union

from .moebius import MoebiusTransform

#: below this denominator magnitude the image circle degenerates to a line
LINE_THRESHOLD = 1e-10


class DegenerateImage(ValueError):
    """The unit circle maps to a line (|c| = |d|), so no image disc exists."""


@dataclass(frozen=True)
class Circle:
    """Circle with complex center and positive radius."""

    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not cmath.isfinite(self.center):
            raise ValueError(f"circle center must be finite, got {self.center!r}")
        if not 0.0 < self.radius < float("inf"):
            raise ValueError(f"circle radius must be positive and finite, got {self.radius!r}")


@dataclass(frozen=True)
class Line:
    """Line through two distinct points, both lying on the image set."""

    p: complex
    q: complex

    def __post_init__(self):
        object.__setattr__(self, "p", complex(self.p))
        object.__setattr__(self, "q", complex(self.q))
        if abs(self.p - self.q) < 1e-12:
            raise ValueError(f"line points must be distinct, got {self.p!r}, {self.q!r}")


GeneralizedCircle = Union[Circle, Line]

UNIT_CIRCLE = Circle(0.0, 1.0)


def image_of_circle(t: MoebiusTransform, s: Circle) -> GeneralizedCircle:
    """Image of circle ``s`` under ``t``: a Circle, or a Line if ``s`` hits the pole."""
    M, R = s.center, s.radius
    w = t.c * M + t.d
    denominator = abs(w) ** 2 - R * R * abs(t.c) ** 2
    if abs(denominator) > LINE_THRESHOLD:
        center = ((t.a * M + t.b) * w.conjugate() - R * R * t.a * t.c.conjugate()) / denominator
        return Circle(center, R / abs(denominator))
    # s passes through the pole; pick two sample points well away from it
    if t.c != 0:
        pole_angle = cmath.phase(-t.d / t.c - M)
    else:
        # affine map with vanishing |d|: no pole on s, any two points do
        pole_angle = 0.0
    p = t.apply(M + R * cmath.exp(1j * (pole_angle + 2.0 * cmath.pi / 3.0)))
    q = t.apply(M + R * cmath.exp(1j * (pole_angle - 2.0 * cmath.pi / 3.0)))
    return Line(p, q)


def image_of_unit_disc(t: MoebiusTransform) -> Circle:
    """Boundary circle of the image of the closed unit disc under ``t``."""
    gap = abs(t.d) ** 2 - abs(t.c) ** 2
    if abs(gap) <= LINE_THRESHOLD:
        raise DegenerateImage(f"|d|^2 - |c|^2 = {gap!r}; unit circle maps to a line")
    center = (t.b * t.d.conjugate() - t.a * t.c.conjugate()) / gap
    return Circle(center, 1.0 / abs(gap))
