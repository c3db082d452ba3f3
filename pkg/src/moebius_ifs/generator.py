"""Build disc contractions from image-disc parameters, and invert the recipe.

Any contraction of the unit disc is pinned down by the radius r and center m
of its image disc plus a free coefficient c with |c| < (1 - r) / (2r) and the
phase of d (the modulus of d is forced by |d|^2 = |c|^2 + 1/r).  The
coefficients are then a = mc + r*conj(d), b = md + r*conj(c), and the reverse
direction reads r and m straight off a certified map.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .contraction import ContractionCertificate, certify_contraction
from .moebius import MoebiusTransform

TWO_PI = 2.0 * math.pi

#: safety factor keeping random |c| off the open bound (1 - r) / (2r)
C_SAFETY = 0.95
#: absolute cap on random |c| (the bound diverges as r -> 0)
C_CAP = 5.0
#: largest member count accepted by the random sampler
MAX_MAPS = 64


class InvalidSpec(ValueError):
    """Disc-image parameters violating the admissibility constraints."""


class InvalidRange(ValueError):
    """Out-of-range arguments to the random system sampler."""


@dataclass(frozen=True)
class DiscImageSpec:
    """Parameters (r, m, c, d_phase) of a disc contraction.

    ``r`` and ``m`` are the radius and center of the image disc; ``c`` is the
    free lower-left coefficient; ``d_phase`` is the argument of d (taken
    mod 2*pi; the modulus of d is derived).
    """

    r: float
    m: complex
    c: complex
    d_phase: float

    def __post_init__(self):
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "m", complex(self.m))
        object.__setattr__(self, "c", complex(self.c))
        object.__setattr__(self, "d_phase", float(self.d_phase) % TWO_PI)
        if not 0.0 < self.r < 1.0:
            raise InvalidSpec(f"image radius r must lie in (0, 1), got {self.r!r}")
        if abs(self.m) > 1.0 - self.r:
            raise InvalidSpec(
                f"image center m must satisfy |m| <= 1 - r, got |m| = {abs(self.m)!r} "
                f"with 1 - r = {1.0 - self.r!r}"
            )
        if abs(self.c) >= (1.0 - self.r) / (2.0 * self.r):
            raise InvalidSpec(
                f"coefficient c must satisfy |c| < (1 - r) / (2r), got |c| = {abs(self.c)!r} "
                f"with bound {(1.0 - self.r) / (2.0 * self.r)!r}"
            )


def transform_from_spec(spec: DiscImageSpec) -> MoebiusTransform:
    """Coefficients (a, b, c, d) realizing the spec; determinant is 1 by construction."""
    d = math.sqrt(abs(spec.c) ** 2 + 1.0 / spec.r) * cmath.exp(1j * spec.d_phase)
    a = spec.m * spec.c + spec.r * d.conjugate()
    b = spec.m * d + spec.r * spec.c.conjugate()
    return MoebiusTransform(a, b, spec.c, d)


def make_contraction(spec: DiscImageSpec) -> ContractionCertificate:
    """Certified disc contraction whose image disc is Circle(spec.m, spec.r)."""
    return certify_contraction(transform_from_spec(spec))


def recover_disc_image(t: MoebiusTransform) -> tuple[float, complex]:
    """Image-disc radius r and center m of a certified contraction."""
    certify_contraction(t)
    r = 1.0 / (abs(t.d) ** 2 - abs(t.c) ** 2)
    m = r * (t.b * t.d.conjugate() - t.a * t.c.conjugate())
    return r, m


def recover_spec(t: MoebiusTransform) -> DiscImageSpec:
    """Full parameter tuple (r, m, c, d_phase) reproducing a certified contraction."""
    r, m = recover_disc_image(t)
    return DiscImageSpec(r, m, t.c, cmath.phase(t.d))


@dataclass(frozen=True)
class MoebiusIFS:
    """Finite ordered family of certified disc contractions."""

    maps: tuple[ContractionCertificate, ...]

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))
        if not self.maps:
            raise ValueError("an iterated function system needs at least one map")

    def __len__(self):
        return len(self.maps)

    @property
    def max_lipschitz(self) -> float:
        return max(member.lipschitz for member in self.maps)


def sample_random_mifs(n: int, seed: int, r_min: float, r_max: float) -> MoebiusIFS:
    """Random certified system of ``n`` maps, deterministic for fixed ``seed``.

    Uses the Philox 64-bit counter-based generator keyed with ``seed``.  Per
    map, six uniforms u0..u5 in [0, 1) are drawn in order and mapped to
      r       = r_min + (r_max - r_min) * u0
      |m|     = (1 - r) * sqrt(u1)        (area-uniform in the admissible disc)
      arg(m)  = 2*pi * u2
      |c|     = min(0.95 * (1 - r) / (2r), 5.0) * u3
      arg(c)  = 2*pi * u4
      d_phase = 2*pi * u5
    """
    if not 1 <= n <= MAX_MAPS:
        raise InvalidRange(f"member count must lie in [1, {MAX_MAPS}], got {n!r}")
    if not 0.0 < r_min <= r_max < 1.0:
        raise InvalidRange(f"need 0 < r_min <= r_max < 1, got ({r_min!r}, {r_max!r})")
    rng = np.random.Generator(np.random.Philox(seed))
    members = []
    for _ in range(n):
        u = rng.random(6)
        r = r_min + (r_max - r_min) * u[0]
        m = (1.0 - r) * math.sqrt(u[1]) * cmath.exp(1j * TWO_PI * u[2])
        c_bound = min(C_SAFETY * (1.0 - r) / (2.0 * r), C_CAP)
        c = c_bound * u[3] * cmath.exp(1j * TWO_PI * u[4])
        members.append(make_contraction(DiscImageSpec(r, m, c, TWO_PI * u[5])))
    return MoebiusIFS(tuple(members))
