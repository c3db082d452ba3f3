"""Attractor computation: Hutchinson iteration, chaos game, Hausdorff metric.

Point clouds are 1-D numpy arrays of complex128.  Deterministic outputs are
canonically ordered (lexicographic by real part, then imaginary part) after
snapping to a fixed dedupe grid, so results do not depend on evaluation
order.  The chaos game returns its orbit in generation order instead.
"""

from __future__ import annotations

import numpy as np
from scipy.spatial import cKDTree

try:
    import numba
except ImportError:  # pragma: no cover - numba is an optional accelerator
    numba = None

from .generator import MoebiusIFS

#: dedupe grid pitch for canonical clouds
DEDUPE_RESOLUTION = 1e-12
#: default cap on cloud size during iteration (thinning keeps geometry intact)
DEFAULT_BUDGET = 2**20
#: orbit prefix discarded by the chaos game
DEFAULT_BURN_IN = 100


def as_cloud(points) -> np.ndarray:
    """Validate and return a non-empty finite complex128 cloud."""
    z = np.atleast_1d(np.asarray(points, dtype=np.complex128)).ravel()
    if z.size == 0:
        raise ValueError("point cloud must be non-empty")
    if not (np.isfinite(z.real).all() and np.isfinite(z.imag).all()):
        raise ValueError("point cloud contains non-finite components")
    return z


def canonicalize(points) -> np.ndarray:
    """Snap to the dedupe grid, drop duplicates, sort lexicographically."""
    z = as_cloud(points)
    re = np.rint(z.real / DEDUPE_RESOLUTION) * DEDUPE_RESOLUTION
    im = np.rint(z.imag / DEDUPE_RESOLUTION) * DEDUPE_RESOLUTION
    return np.unique(re + 1j * im)


def unit_circle_points(n: int) -> np.ndarray:
    """n equally spaced points on the unit circle (a standard seed cloud)."""
    return np.exp(2j * np.pi * np.arange(n) / n)


def hutchinson_step(system: MoebiusIFS, cloud) -> np.ndarray:
    """One application of the set map Y -> union of member images of Y."""
    z = as_cloud(cloud)
    images = np.concatenate([member.transform.apply_array(z) for member in system.maps])
    return canonicalize(images)


def hausdorff_distance(a, b) -> float:
    """Hausdorff distance between two finite clouds (exact, KD-tree backed)."""
    za, zb = as_cloud(a), as_cloud(b)
    pa = np.column_stack((za.real, za.imag))
    pb = np.column_stack((zb.real, zb.imag))
    d_ab = cKDTree(pb).query(pa, k=1)[0].max()
    d_ba = cKDTree(pa).query(pb, k=1)[0].max()
    return float(max(d_ab, d_ba))


if numba is not None:

    @numba.njit(cache=True)
    def _directed_below(qx, qy, keys, order, px, py, cx_min, cy_min, width, height, tol):
        """True iff every (qx, qy) point has a (px, py) point strictly within tol.

        ``keys`` is the sorted cell index of each p point at grid pitch tol
        (key = (cx - cx_min + 1) * (height + 2) + (cy - cy_min + 1)), ``order``
        the matching argsort; a neighbor within tol must lie in one of the
        nine cells around the query's cell.  Aborts on the first miss.
        """
        tol_sq = tol * tol
        stride = height + 2
        n = len(qx)
        for i in range(n):
            cx = np.int64(np.floor(qx[i] / tol)) - cx_min + 1
            cy = np.int64(np.floor(qy[i] / tol)) - cy_min + 1
            found = False
            for dx in range(-1, 2):
                gx = cx + dx
                if gx < 0 or gx > width + 1:
                    continue
                for dy in range(-1, 2):
                    gy = cy + dy
                    if gy < 0 or gy > stride - 1:
                        continue
                    key = gx * stride + gy
                    lo = np.searchsorted(keys, key, side="left")
                    hi = np.searchsorted(keys, key, side="right")
                    for j in range(lo, hi):
                        k = order[j]
                        ddx = qx[i] - px[k]
                        ddy = qy[i] - py[k]
                        if ddx * ddx + ddy * ddy < tol_sq:
                            found = True
                            break
                    if found:
                        break
                if found:
                    break
            if not found:
                return False
        return True


def _cell_index(x, y, tol):
    cx = np.floor(x / tol).astype(np.int64)
    cy = np.floor(y / tol).astype(np.int64)
    return cx, cy


def _successive_below(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    """Exact decision hausdorff_distance(a, b) < tol, with early abort.

    Equivalent to comparing the true Hausdorff distance against tol (all
    point-to-set distances are evaluated exactly); a bucket grid at pitch
    tol makes the usual non-converged case abort after a handful of points.
    Falls back to the KD-tree distance when numba is unavailable or the
    grid would overflow.
    """
    ax, ay = a.real.copy(), a.imag.copy()
    bx, by = b.real.copy(), b.imag.copy()
    if numba is not None:
        acx, acy = _cell_index(ax, ay, tol)
        bcx, bcy = _cell_index(bx, by, tol)
        cx_min = min(acx.min(), bcx.min())
        cx_max = max(acx.max(), bcx.max())
        cy_min = min(acy.min(), bcy.min())
        cy_max = max(acy.max(), bcy.max())
        width = cx_max - cx_min + 1
        height = cy_max - cy_min + 1
        if (width + 2) * (height + 2) < 2**62:
            a_keys = (acx - cx_min + 1) * (height + 2) + (acy - cy_min + 1)
            b_keys = (bcx - cx_min + 1) * (height + 2) + (bcy - cy_min + 1)
            a_order = np.argsort(a_keys, kind="stable")
            b_order = np.argsort(b_keys, kind="stable")
            return bool(
                _directed_below(
                    ax, ay, b_keys[b_order], b_order, bx, by, cx_min, cy_min, width, height, tol
                )
                and _directed_below(
                    bx, by, a_keys[a_order], a_order, ax, ay, cx_min, cy_min, width, height, tol
                )
            )
    return hausdorff_distance(a, b) < tol


def iterate_attractor(
    system: MoebiusIFS,
    seed_cloud,
    max_iter: int,
    tol: float,
    *,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
) -> tuple[np.ndarray, int]:
    """Iterate the Hutchinson map until successive clouds are ``tol``-close.

    Stops early once the Hausdorff distance between consecutive iterates
    drops below ``tol``; always stops at ``max_iter``.  Clouds larger than
    ``budget`` are thinned by seeded uniform sampling without replacement.
    Returns the final cloud and the number of steps taken.
    """
    if max_iter < 1:
        raise ValueError(f"max_iter must be at least 1, got {max_iter!r}")
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    cloud = canonicalize(seed_cloud)
    if np.abs(cloud).max() > 1.0 + 1e-9:
        raise ValueError("seed cloud must lie in the closed unit disc")
    rng = np.random.Generator(np.random.Philox(seed))
    iterations = 0
    for _ in range(max_iter):
        nxt = hutchinson_step(system, cloud)
        if nxt.size > budget:
            keep = rng.choice(nxt.size, size=budget, replace=False)
            keep.sort()
            nxt = nxt[keep]
        step_distance = hausdorff_distance(cloud, nxt)
        cloud = nxt
        iterations += 1
        if step_distance < tol:
            break
    return cloud, iterations


def chaos_game(
    system: MoebiusIFS,
    n_points: int,
    burn_in: int = DEFAULT_BURN_IN,
    seed: int = 0,
    weights=None,
) -> np.ndarray:
    """Random-orbit attractor sample: n_points after a discarded burn_in prefix.

    Starts at 0, applies a map chosen per step by the seeded Philox generator
    (uniformly unless ``weights`` gives per-map probabilities), and returns
    the orbit in generation order.
    """
    if n_points < 1:
        raise ValueError(f"n_points must be at least 1, got {n_points!r}")
    if burn_in < 0:
        raise ValueError(f"burn_in must be non-negative, got {burn_in!r}")
    rng = np.random.Generator(np.random.Philox(seed))
    total = burn_in + n_points
    if weights is None:
        choices = rng.integers(0, len(system), size=total)
    else:
        weights = np.asarray(weights, dtype=float)
        if weights.shape != (len(system),) or (weights < 0).any() or weights.sum() <= 0:
            raise ValueError("weights must be a non-negative probability vector per map")
        choices = rng.choice(len(system), size=total, p=weights / weights.sum())
    coeffs = [
        (member.transform.a, member.transform.b, member.transform.c, member.transform.d)
        for member in system.maps
    ]
    z = 0j
    orbit = np.empty(n_points, dtype=np.complex128)
    for step, index in enumerate(choices):
        a, b, c, d = coeffs[index]
        z = (a * z + b) / (c * z + d)
        if step >= burn_in:
            orbit[step - burn_in] = z
    return orbit
