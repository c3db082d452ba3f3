"""Moebius transformation algebra on the extended complex plane.

All maps are kept in normalized form (determinant 1, double precision).
The point at infinity is an explicit singleton value, never a large
floating-point sentinel.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Union

import numpy as np

#: determinant deviation accepted on a normalized transform
DET_TOLERANCE = 1e-9
#: below this determinant magnitude a coefficient quadruple is constant, not Moebius
DEGENERACY_TOLERANCE = 1e-12
#: |cz+d| at or below this counts as evaluating the derivative at the pole
POLE_TOLERANCE = 1e-300


class DegenerateMap(ValueError):
    """Coefficient quadruple with (near-)zero determinant."""


class PoleEvaluation(ValueError):
    """Derivative requested at the pole of the transform."""


class _Infinity:
    """The point at infinity of the extended complex plane (singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()

ExtendedComplex = Union[complex, _Infinity]


def is_finite_point(z: ExtendedComplex) -> bool:
    """True for finite points with finite components, False for INFINITY."""
    if z is INFINITY:
        return False
    z = complex(z)
    return cmath.isfinite(z)


def _as_finite_complex(value, name: str) -> complex:
    z = complex(value)
    if not cmath.isfinite(z):
        raise ValueError(f"coefficient {name} must have finite components, got {z!r}")
    return z


@dataclass(frozen=True)
class MoebiusTransform:
    """Normalized Moebius map z -> (az + b) / (cz + d) with ad - bc = 1."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _as_finite_complex(getattr(self, name), name))
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > DET_TOLERANCE:
            raise ValueError(
                f"coefficients are not normalized: ad - bc = {det!r}; "
                "use MoebiusTransform.normalize()"
            )

    @classmethod
    def normalize(cls, a, b, c, d) -> "MoebiusTransform":
        """Scale an arbitrary quadruple to determinant 1 (principal square root)."""
        a, b, c, d = (_as_finite_complex(v, n) for v, n in zip((a, b, c, d), "abcd"))
        det = a * d - b * c
        if abs(det) <= DEGENERACY_TOLERANCE:
            raise DegenerateMap(f"ad - bc = {det!r} is (near-)zero; map is constant")
        root = cmath.sqrt(det)
        return cls(a / root, b / root, c / root, d / root)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def pole(self) -> ExtendedComplex:
        """The unique input mapped to INFINITY."""
        if self.c == 0:
            return INFINITY
        return -self.d / self.c

    def __call__(self, z: ExtendedComplex) -> ExtendedComplex:
        return self.apply(z)

    def apply(self, z: ExtendedComplex) -> ExtendedComplex:
        """Evaluate the map; total on C u {INFINITY}."""
        if z is INFINITY:
            if self.c == 0:
                return INFINITY
            return self.a / self.c
        z = complex(z)
        den = self.c * z + self.d
        if den == 0:
            return INFINITY
        w = (self.a * z + self.b) / den
        if not cmath.isfinite(w):
            # component overflow near the pole collapses to the explicit point
            return INFINITY
        return w

    def apply_array(self, z: np.ndarray) -> np.ndarray:
        """Vectorized evaluation for finite points away from the pole."""
        z = np.asarray(z, dtype=np.complex128)
        return (self.a * z + self.b) / (self.c * z + self.d)

    def compose(self, other: "MoebiusTransform") -> "MoebiusTransform":
        """Map applying ``other`` first, then ``self`` (matrix product, renormalized)."""
        return MoebiusTransform.normalize(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MoebiusTransform":
        """Inverse map (d, -b, -c, a); same determinant."""
        return MoebiusTransform(self.d, -self.b, -self.c, self.a)

    def derivative_modulus(self, z) -> float:
        """|phi'(z)| = 1 / |cz + d|**2 at a finite non-pole point."""
        z = complex(z)
        den = abs(self.c * z + self.d)
        if den <= POLE_TOLERANCE:
            raise PoleEvaluation(f"|cz + d| = {den!r} at z = {z!r}")
        return 1.0 / (den * den)

    def __neg__(self) -> "MoebiusTransform":
        """Global sign flip; represents the same map."""
        return MoebiusTransform(-self.a, -self.b, -self.c, -self.d)


IDENTITY = MoebiusTransform(1.0, 0.0, 0.0, 1.0)
