"""Rasterize point clouds and circle overlays to binary PPM (P6) images.

Pixel conventions: the viewport (x_min, x_max, y_min, y_max) maps affinely
onto the pixel grid with x increasing rightward, y increasing upward, and
pixel row 0 at the top.  A point lands in the pixel whose half-open cell
contains it: col = floor((x - x_min) / (x_max - x_min) * width) and
row = floor((y_max - y) / (y_max - y_min) * height); anything outside the
grid is dropped.  Rendering is black points on a white background.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .circles import Circle

#: default square viewport showing the unit circle with margin
DEFAULT_VIEWPORT = (-1.1, 1.1, -1.1, 1.1)
#: default raster edge length in pixels
DEFAULT_SIZE = 1024


class IoFailure(RuntimeError):
    """Image file could not be written."""


@dataclass
class Raster:
    """RGB pixel grid (uint8, row-major, row 0 on top) plus its viewport."""

    width: int
    height: int
    viewport: tuple[float, float, float, float]
    pixels: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        self.width = int(self.width)
        self.height = int(self.height)
        if self.width < 1 or self.height < 1:
            raise ValueError(f"raster must be at least 1x1, got {self.width}x{self.height}")
        x_min, x_max, y_min, y_max = (float(v) for v in self.viewport)
        if not (x_max > x_min and y_max > y_min):
            raise ValueError(f"viewport must have positive extent, got {self.viewport!r}")
        self.viewport = (x_min, x_max, y_min, y_max)
        if self.pixels is None:
            self.pixels = np.full((self.height, self.width, 3), 255, dtype=np.uint8)
        else:
            self.pixels = np.asarray(self.pixels, dtype=np.uint8)
            if self.pixels.shape != (self.height, self.width, 3):
                raise ValueError(f"pixel grid shape {self.pixels.shape} does not match raster")

    def to_pixel(self, z: complex) -> tuple[float, float]:
        """Continuous pixel coordinates (col, row) of a complex point."""
        x_min, x_max, y_min, y_max = self.viewport
        col = (z.real - x_min) / (x_max - x_min) * self.width
        row = (y_max - z.imag) / (y_max - y_min) * self.height
        return col, row


def rasterize(cloud, width: int, height: int, viewport=DEFAULT_VIEWPORT) -> Raster:
    """Plot a point cloud: each point blackens the pixel cell containing it."""
    raster = Raster(width, height, viewport)
    z = np.atleast_1d(np.asarray(cloud, dtype=np.complex128)).ravel()
    if z.size == 0:
        return raster
    x_min, x_max, y_min, y_max = raster.viewport
    cols = np.floor((z.real - x_min) / (x_max - x_min) * raster.width).astype(np.int64)
    rows = np.floor((y_max - z.imag) / (y_max - y_min) * raster.height).astype(np.int64)
    keep = (cols >= 0) & (cols < raster.width) & (rows >= 0) & (rows < raster.height)
    raster.pixels[rows[keep], cols[keep]] = 0
    return raster


def _paint(raster: Raster, rows: np.ndarray, cols: np.ndarray, value: int) -> None:
    keep = (cols >= 0) & (cols < raster.width) & (rows >= 0) & (rows < raster.height)
    raster.pixels[rows[keep], cols[keep]] = value


def draw_circles(raster: Raster, circles, stroke: int = 0) -> Raster:
    """Stroke 1-pixel circle outlines plus a 3x3 dot at each center, in place.

    Outlines are scanned along both axes (two pixels per row and per column
    crossing the curve), which keeps them connected at any aspect ratio.
    Returns the mutated raster; repeated identical calls are no-ops.
    """
    stroke = int(stroke)
    x_min, x_max, y_min, y_max = raster.viewport
    for circle in circles:
        if not isinstance(circle, Circle):
            raise TypeError(f"draw_circles expects Circle instances, got {circle!r}")
        cx, cy = raster.to_pixel(circle.center)
        rx = circle.radius / (x_max - x_min) * raster.width
        ry = circle.radius / (y_max - y_min) * raster.height

        cols = np.arange(int(np.floor(cx - rx)) - 1, int(np.ceil(cx + rx)) + 2)
        t = ((cols + 0.5) - cx) / rx
        inside = np.abs(t) <= 1.0
        cols, t = cols[inside], t[inside]
        dy = ry * np.sqrt(1.0 - t * t)
        for sign in (-1.0, 1.0):
            rows = np.rint(cy + sign * dy - 0.5).astype(np.int64)
            _paint(raster, rows, cols, stroke)

        rows = np.arange(int(np.floor(cy - ry)) - 1, int(np.ceil(cy + ry)) + 2)
        t = ((rows + 0.5) - cy) / ry
        inside = np.abs(t) <= 1.0
        rows, t = rows[inside], t[inside]
        dx = rx * np.sqrt(1.0 - t * t)
        for sign in (-1.0, 1.0):
            cols = np.rint(cx + sign * dx - 0.5).astype(np.int64)
            _paint(raster, rows, cols, stroke)

        dot_row = int(np.rint(cy - 0.5))
        dot_col = int(np.rint(cx - 0.5))
        offsets = np.arange(-1, 2)
        dot_rows = np.repeat(dot_row + offsets, 3)
        dot_cols = np.tile(dot_col + offsets, 3)
        _paint(raster, dot_rows, dot_cols, stroke)
    return raster


def write_pnm(raster: Raster, path) -> None:
    """Write the raster as binary PPM: 'P6\\n<w> <h>\\n255\\n' + RGB bytes."""
    header = f"P6\n{raster.width} {raster.height}\n255\n".encode("ascii")
    try:
        with open(path, "wb") as handle:
            handle.write(header)
            handle.write(raster.pixels.tobytes())
    except OSError as exc:
        raise IoFailure(f"cannot write PPM to {path!r}: {exc}") from exc
