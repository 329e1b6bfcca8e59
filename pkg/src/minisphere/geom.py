"""Primitive sphere constructions and tolerance-aware predicates in 3D.

Points are plain sequences or numpy arrays of three floats; point clouds
are (N, 3) float64 arrays. All comparisons against a radius happen on
squared distances, and degeneracy thresholds are relative to the local
extent of the points involved, so behavior does not depend on units.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import (
    DegenerateCollinear,
    DegenerateCoplanar,
    EmptyInputError,
    InvalidGeometryError,
)


class Sphere(NamedTuple):
    """Center point (ndarray of shape (3,)) and non-negative radius."""

    center: np.ndarray
    radius: float


class Tolerance(NamedTuple):
    """Relative epsilon plus the length scale it applies to.

    ``scale`` is normally the bounding-box diagonal of the cloud being
    processed, computed once at ingestion. The absolute tolerance used in
    containment checks is ``eps_rel * max(scale, 1)``.
    """

    eps_rel: float = 1e-9
    scale: float = 0.0

    @property
    def abs_eps(self) -> float:
        return self.eps_rel * max(self.scale, 1.0)


_DEFAULT_TOL = Tolerance()


def as_cloud(points, allow_empty: bool = False) -> np.ndarray:
    """Validate and normalize a point cloud to a C-contiguous (N, 3) float64 array."""
    P = np.asarray(points, dtype=np.float64)
    if P.ndim == 1 and P.size == 0:
        P = P.reshape(0, 3)
    if P.ndim != 2 or P.shape[1] != 3:
        raise InvalidGeometryError(f"expected an (N, 3) point array, got shape {P.shape}")
    if P.shape[0] == 0:
        if allow_empty:
            return np.ascontiguousarray(P)
        raise EmptyInputError("point cloud is empty")
    if not np.isfinite(P).all():
        raise InvalidGeometryError("point cloud contains non-finite coordinates")
    return np.ascontiguousarray(P)


def tolerance_for(points, eps_rel: float = 1e-9) -> Tolerance:
    """Tolerance whose scale is the bounding-box diagonal of ``points``."""
    P = as_cloud(points)
    span = P.max(axis=0) - P.min(axis=0)
    return Tolerance(eps_rel, float(math.sqrt(float(span[0]) ** 2 + float(span[1]) ** 2 + float(span[2]) ** 2)))


def _p3(p) -> tuple[float, float, float]:
    t = (float(p[0]), float(p[1]), float(p[2]))
    if not (math.isfinite(t[0]) and math.isfinite(t[1]) and math.isfinite(t[2])):
        raise InvalidGeometryError("point has non-finite coordinates")
    return t


def sphere_from_two(a, b) -> Sphere:
    """Smallest sphere through two points: midpoint center, half-distance radius."""
    ax, ay, az = _p3(a)
    bx, by, bz = _p3(b)
    cx = 0.5 * (ax + bx)
    cy = 0.5 * (ay + by)
    cz = 0.5 * (az + bz)
    dx, dy, dz = bx - ax, by - ay, bz - az
    r = 0.5 * math.sqrt(dx * dx + dy * dy + dz * dz)
    return Sphere(np.array((cx, cy, cz)), r)


def _circum3(pa, pb, pc, eps: float):
    """Circumcircle core on bare float triples: (ox, oy, oz, r2).

    No input validation, no square root; the hot path of the incremental
    solver runs through here. Collinearity test in squared form:
    ``|cross(b - a, c - a)|^2 <= (eps * L^2)^2`` with L^2 the largest
    squared pairwise distance of the triple.
    """
    ax, ay, az = pa
    bx, by, bz = pb
    cx, cy, cz = pc
    bax, bay, baz = bx - ax, by - ay, bz - az
    cax, cay, caz = cx - ax, cy - ay, cz - az
    d11 = bax * bax + bay * bay + baz * baz
    d22 = cax * cax + cay * cay + caz * caz
    d12 = bax * cax + bay * cay + baz * caz
    bcx, bcy, bcz = cx - bx, cy - by, cz - bz
    l2 = max(d11, d22, bcx * bcx + bcy * bcy + bcz * bcz)
    det = d11 * d22 - d12 * d12  # == |cross(b-a, c-a)|**2
    if det <= (eps * l2) ** 2:
        raise DegenerateCollinear("three points are collinear within tolerance")
    alpha = d22 * (d11 - d12) / (2.0 * det)
    beta = d11 * (d22 - d12) / (2.0 * det)
    return (
        ax + alpha * bax + beta * cax,
        ay + alpha * bay + beta * cay,
        az + alpha * baz + beta * caz,
        alpha * alpha * d11 + 2.0 * alpha * beta * d12 + beta * beta * d22,
    )


def _circum4(pa, pb, pc, pd, eps: float):
    """Circumsphere core on bare float triples: (ox, oy, oz, r2).

    Solves the 3x3 equidistance system by elimination with partial
    pivoting. Coplanarity test kept in squared form to avoid square roots:
    ``det^2 <= (eps * L^3)^2``.
    """
    pts = (pa, pb, pc, pd)
    # rows of the system: (p_i - a) . x = |p_i - a|^2 / 2, center = a + x
    m = []
    rhs = []
    for i in (1, 2, 3):
        rx = pts[i][0] - pa[0]
        ry = pts[i][1] - pa[1]
        rz = pts[i][2] - pa[2]
        m.append([rx, ry, rz])
        rhs.append(0.5 * (rx * rx + ry * ry + rz * rz))
    l2 = 0.0
    for i in range(4):
        for j in range(i + 1, 4):
            dx = pts[i][0] - pts[j][0]
            dy = pts[i][1] - pts[j][1]
            dz = pts[i][2] - pts[j][2]
            l2 = max(l2, dx * dx + dy * dy + dz * dz)
    det2 = _eliminate3(m, rhs)
    if det2 <= (eps * eps) * l2 ** 3:
        raise DegenerateCoplanar("four points are coplanar within tolerance")
    x, y, z = rhs
    return pa[0] + x, pa[1] + y, pa[2] + z, x * x + y * y + z * z


def sphere_from_three(a, b, c, tol: Tolerance | None = None) -> Sphere:
    """Smallest sphere through three points (the circumcircle in their plane).

    Raises DegenerateCollinear when the triangle is flat within tolerance:
    ``|cross(b - a, c - a)| <= eps_rel * L**2`` with L the largest pairwise
    distance of the triple.
    """
    eps = (_DEFAULT_TOL if tol is None else tol).eps_rel
    ox, oy, oz, r2 = _circum3(_p3(a), _p3(b), _p3(c), eps)
    return Sphere(np.array((ox, oy, oz)), math.sqrt(r2))


def sphere_from_four(a, b, c, d, tol: Tolerance | None = None) -> Sphere:
    """Unique sphere through four points (circumsphere).

    Raises DegenerateCoplanar when the tetrahedron is flat within
    tolerance: ``|det| <= eps_rel * L**3`` with L the largest pairwise
    distance of the quadruple.
    """
    eps = (_DEFAULT_TOL if tol is None else tol).eps_rel
    ox, oy, oz, r2 = _circum4(_p3(a), _p3(b), _p3(c), _p3(d), eps)
    return Sphere(np.array((ox, oy, oz)), math.sqrt(r2))


def _eliminate3(m, rhs) -> float:
    """In-place 3x3 Gaussian elimination with partial pivoting.

    On return ``rhs`` holds the solution. Returns the squared determinant
    magnitude (0.0 when a pivot vanishes).
    """
    idx = [0, 1, 2]
    det = 1.0
    for col in range(3):
        piv = max(range(col, 3), key=lambda r: abs(m[idx[r]][col]))
        if piv != col:
            idx[col], idx[piv] = idx[piv], idx[col]
        p = m[idx[col]][col]
        if p == 0.0:
            return 0.0
        det *= p
        for r in range(col + 1, 3):
            f = m[idx[r]][col] / p
            if f != 0.0:
                for cc in range(col, 3):
                    m[idx[r]][cc] -= f * m[idx[col]][cc]
                rhs[idx[r]] -= f * rhs[idx[col]]
    # back substitution
    sol = [0.0, 0.0, 0.0]
    for col in (2, 1, 0):
        s = rhs[idx[col]]
        for cc in range(col + 1, 3):
            s -= m[idx[col]][cc] * sol[cc]
        sol[col] = s / m[idx[col]][col]
    rhs[0], rhs[1], rhs[2] = sol
    return det * det


def contains(sphere: Sphere, p, tol: Tolerance | None = None) -> bool:
    """True iff ``|p - center| <= radius + effective tolerance``.

    The comparison runs on squared distances to avoid a square root.
    """
    t = _DEFAULT_TOL if tol is None else tol
    px, py, pz = _p3(p)
    cx, cy, cz = float(sphere.center[0]), float(sphere.center[1]), float(sphere.center[2])
    dx, dy, dz = px - cx, py - cy, pz - cz
    lim = sphere.radius + t.abs_eps
    return dx * dx + dy * dy + dz * dz <= lim * lim
