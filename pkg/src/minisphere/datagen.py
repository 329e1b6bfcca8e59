"""Seeded point-cloud generators for tests and benchmarks.

Every generator is deterministic for a fixed (kind, n, seed, params) tuple
and returns an (n, 3) float64 array. Degenerate kinds satisfy their
defining constraint exactly in double precision: collinear and coplanar
clouds are built on a dyadic coordinate grid with small integer frame
vectors, so every product and sum in ``base + s * direction`` is exact and
cross products of point differences cancel to literal 0.0.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidParamsError, UnknownKindError

# Snap grids. Direction vectors use 2**-20 so that (2**-26 parameter) *
# (2**-20 coordinate) products stay inside the 53-bit mantissa.
_PARAM_SNAP = 2.0 ** 26
_DIR_SNAP = 2.0 ** 20


def _snap(x, grid):
    return np.round(np.asarray(x, dtype=np.float64) * grid) / grid


def _unit_rows(rng, n):
    v = rng.normal(size=(n, 3))
    norm = np.linalg.norm(v, axis=1)
    norm = np.maximum(norm, 1e-300)
    return v / norm[:, None]


def _uniform_ball(rng, n, radius=1.0):
    if radius <= 0:
        raise InvalidParamsError("radius must be positive")
    dirs = _unit_rows(rng, n)
    radii = radius * rng.uniform(0.0, 1.0, n) ** (1.0 / 3.0)
    return dirs * radii[:, None]


def _uniform_cube(rng, n, side=1.0):
    if side <= 0:
        raise InvalidParamsError("side must be positive")
    return rng.uniform(0.0, side, (n, 3))


def _distinct_snapped(rng, n, low, high, grid):
    """n distinct snapped uniform draws, kept in draw order."""
    seen: dict[float, None] = {}
    while len(seen) < n:
        batch = _snap(rng.uniform(low, high, max(n - len(seen), 64)), grid)
        for v in batch.tolist():
            if v not in seen:
                seen[v] = None
            if len(seen) == n:
                break
    return np.fromiter(seen.keys(), dtype=np.float64, count=n)


def _collinear(rng, n):
    if n > 2 ** 25:
        raise InvalidParamsError("collinear supports at most 2**25 points (exact parameter grid)")
    base = _snap(rng.uniform(-1.0, 1.0, 3), _PARAM_SNAP)
    d = rng.normal(size=3)
    d = _snap(d / np.linalg.norm(d), _DIR_SNAP)
    t = _distinct_snapped(rng, n, 0.0, 1.0, _PARAM_SNAP)
    # every term lands on a dyadic grid, so the sums below are exact
    return base[None, :] + t[:, None] * d[None, :]


def _integer_plane_frame(rng):
    """Small integer normal plus two exactly orthogonal integer axes."""
    while True:
        nvec = rng.integers(-8, 9, 3)
        if nvec[0] or nvec[1] or nvec[2]:
            break
    if nvec[0] == 0 and nvec[1] == 0:
        u = np.array([1, 0, 0], dtype=np.int64)
    else:
        u = np.array([nvec[1], -nvec[0], 0], dtype=np.int64)
    v = np.cross(nvec, u)
    return nvec.astype(np.int64), u, v


def _coplanar_disk(rng, n, radius=1.0):
    if radius <= 0:
        raise InvalidParamsError("radius must be positive")
    nvec, u, v = _integer_plane_frame(rng)
    base = _snap(rng.uniform(-1.0, 1.0, 3), _PARAM_SNAP)
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, n))
    theta = rng.uniform(0.0, 2.0 * np.pi, n)
    alpha = _snap(r * np.cos(theta) / np.linalg.norm(u), _PARAM_SNAP)
    beta = _snap(r * np.sin(theta) / np.linalg.norm(v), _PARAM_SNAP)
    U = u.astype(np.float64)
    V = v.astype(np.float64)
    return base[None, :] + alpha[:, None] * U[None, :] + beta[:, None] * V[None, :]


def _co_spherical(rng, n, radius=1.0, center=(0.0, 0.0, 0.0)):
    if radius <= 0:
        raise InvalidParamsError("radius must be positive")
    c = np.asarray(center, dtype=np.float64)
    if c.shape != (3,):
        raise InvalidParamsError("center must be a 3-vector")
    return c[None, :] + radius * _unit_rows(rng, n)


def _clustered(rng, n, clusters=5, spread=0.05):
    clusters = int(clusters)
    if clusters < 1:
        raise InvalidParamsError("clusters must be >= 1")
    if spread < 0:
        raise InvalidParamsError("spread must be non-negative")
    centers = rng.uniform(-0.7, 0.7, (clusters, 3))
    assign = rng.integers(0, clusters, n)
    return centers[assign] + rng.normal(0.0, spread, (n, 3))


def _near_degenerate(rng, n, sigma=1e-8, radius=1.0):
    if sigma < 0:
        raise InvalidParamsError("sigma must be non-negative")
    flat = _coplanar_disk(rng, n, radius=radius)
    return flat + rng.normal(0.0, sigma, (n, 3))


_KINDS = {
    "uniform-ball": _uniform_ball,
    "uniform-cube": _uniform_cube,
    "collinear": _collinear,
    "coplanar-disk": _coplanar_disk,
    "co-spherical": _co_spherical,
    "clustered": _clustered,
    "near-degenerate": _near_degenerate,
}


def kinds() -> tuple[str, ...]:
    """Names of the available generators."""
    return tuple(_KINDS)


def generate(kind: str, n: int, seed: int = 0, **params) -> np.ndarray:
    """Generate ``n`` points of the given kind.

    Parameters
    ----------
    kind : one of ``kinds()``.
    n : number of points, >= 1.
    seed : any non-negative integer; same arguments give bit-identical output.
    params : per-kind options (radius, side, sigma, clusters, spread, center).
    """
    try:
        fn = _KINDS[kind]
    except KeyError:
        raise UnknownKindError(f"unknown generator kind {kind!r}; expected one of {', '.join(_KINDS)}") from None
    n = int(n)
    if n < 1:
        raise InvalidParamsError("n must be >= 1")
    if int(seed) < 0:
        raise InvalidParamsError("seed must be non-negative")
    rng = np.random.default_rng(int(seed))
    try:
        return fn(rng, n, **params)
    except TypeError as exc:
        raise InvalidParamsError(f"bad parameters for {kind}: {exc}") from None
