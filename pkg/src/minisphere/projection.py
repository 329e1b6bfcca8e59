"""Projection-based point reduction and the combined solve pipeline.

The cloud is projected onto K planes; per plane, the four points extreme
along the in-plane axes are kept. Extremes of a linear functional are
convex-hull vertices, so the union across planes is a small certificate
set. Its enclosing sphere is then verified against the full cloud and
repaired with any escapees until enclosure holds.
"""

from __future__ import annotations

import math
import operator
import time
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InvalidGeometryError, InvalidKError, InvalidParamsError, ZeroNormalError
from .geom import Sphere, Tolerance, as_cloud, tolerance_for
from .welzl import welzl_solve

_GOLDEN = math.pi * (3.0 - math.sqrt(5.0))
_SQ2 = 1.0 / math.sqrt(2.0)
_CANONICAL6 = np.array(
    [
        (0.0, 0.0, 1.0),
        (0.0, 1.0, 0.0),
        (1.0, 0.0, 0.0),
        (_SQ2, _SQ2, 0.0),
        (0.0, _SQ2, _SQ2),
        (_SQ2, 0.0, _SQ2),
    ]
)
_FRAME_BLOCK = 8
_MAX_REPAIR = 16
_VERIFY_CHUNK = 262144


class ProjectionFrame(NamedTuple):
    """Right-handed orthonormal basis attached to a projection plane."""

    normal: np.ndarray
    u: np.ndarray
    v: np.ndarray


class KSelection(NamedTuple):
    """Plane-count choice. ``symmetric-6`` pins the canonical six planes."""

    mode: str
    k: int
    c1: float = 2.0
    c2: float = 1.0


class ReducedSet(NamedTuple):
    """Indices forming P_s plus the per-plane picks that produced them.

    ``indices`` keeps first-seen order (frame-major, then +u, -u, +v, -v
    within a frame). ``per_plane[i]`` is the 4-tuple chosen by frame i.
    """

    indices: np.ndarray
    per_plane: list


@dataclass
class SolveReport:
    sphere: Sphere
    support_indices: tuple
    strategy: str
    k: int | None
    reduced_size: int | None
    repair_rounds: int
    timings: dict
    input_count: int
    seed: int
    fallback_full_solve: bool = False

    def to_dict(self) -> dict:
        return {
            "sphere": {
                "center": [float(c) for c in self.sphere.center],
                "radius": float(self.sphere.radius),
            },
            "support_indices": [int(i) for i in self.support_indices],
            "strategy": self.strategy,
            "k": self.k,
            "reduced_size": self.reduced_size,
            "repair_rounds": self.repair_rounds,
            "timings": {key: float(val) for key, val in self.timings.items()},
            "input_count": self.input_count,
            "seed": self.seed,
            "fallback_full_solve": self.fallback_full_solve,
        }


def _radical_inverse(i: int) -> float:
    # bit-reversed binary fraction; injective, so spiral z values never collide
    f = 0.0
    w = 0.5
    while i:
        if i & 1:
            f += w
        w *= 0.5
        i >>= 1
    return f


def _spiral_direction(i: int) -> np.ndarray:
    z = 1.0 - _radical_inverse(i)
    rho = math.sqrt(max(0.0, 1.0 - z * z))
    phi = i * _GOLDEN
    return np.array([rho * math.cos(phi), rho * math.sin(phi), z])


def make_frame(n) -> ProjectionFrame:
    """Deterministic right-handed frame for a plane with normal ``n``.

    The in-plane axis u is the canonical axis of smallest |component| in n
    (first such axis on ties), made orthogonal to n and normalized; v
    completes the right-handed triple. Raises ZeroNormalError when |n| is
    at or below 1e-12.
    """
    arr = np.asarray(n, dtype=np.float64).reshape(3)
    if not np.isfinite(arr).all():
        raise InvalidGeometryError("plane normal must be finite")
    norm = float(np.linalg.norm(arr))
    if norm <= 1e-12:
        raise ZeroNormalError(f"normal too small to orient a plane (|n| = {norm:g})")
    normal = arr / norm
    e = np.zeros(3)
    e[int(np.argmin(np.abs(normal)))] = 1.0
    u = e - float(e @ normal) * normal
    u /= np.linalg.norm(u)
    v = np.cross(normal, u)
    return ProjectionFrame(normal, u, v)


def generate_orientations(k) -> list[ProjectionFrame]:
    """K deterministic projection frames.

    k = 6 yields the canonical set: the three principal-plane normals and
    the three diagonal normals. Any other k walks a Fibonacci spiral on the
    unit upper hemisphere (antipodal normals would duplicate projections);
    the sequence is prefix-nested, so frame i is the same for every k > i.
    """
    try:
        k = operator.index(k)
    except TypeError:
        raise InvalidKError(f"plane count must be an integer, got {k!r}") from None
    if k < 1:
        raise InvalidKError(f"need at least one projection plane, got k = {k}")
    if k == 6:
        normals = _CANONICAL6
    else:
        normals = [_spiral_direction(i) for i in range(k)]
    return [make_frame(n) for n in normals]


def project(p, frame: ProjectionFrame) -> tuple[float, float]:
    """In-plane coordinates (p·u, p·v) of the projection of p."""
    q = np.asarray(p, dtype=np.float64).reshape(3)
    if not np.isfinite(q).all():
        raise InvalidGeometryError("point must be finite")
    return float(q @ frame.u), float(q @ frame.v)


def _pick(primary: np.ndarray, secondary: np.ndarray, minimize: bool) -> int:
    """Arg-extreme with the documented tie rule.

    Exact ties on the primary coordinate go to the larger secondary
    coordinate (biases toward corners of a tied hull edge); remaining ties
    go to the lowest index.
    """
    n = len(primary)
    if minimize:
        first = int(np.argmin(primary))
        last = n - 1 - int(np.argmin(primary[::-1]))
    else:
        first = int(np.argmax(primary))
        last = n - 1 - int(np.argmax(primary[::-1]))
    if first == last:
        return first
    ties = np.flatnonzero(primary == primary[first])
    return int(ties[np.argmax(secondary[ties])])


def extreme4(points, frame: ProjectionFrame) -> tuple[int, int, int, int]:
    """Indices extreme along (+u, -u, +v, -v) in one O(N) pass per axis."""
    P = as_cloud(points)
    a = P @ frame.u
    b = P @ frame.v
    return (_pick(a, b, False), _pick(a, b, True), _pick(b, a, False), _pick(b, a, True))


def _batch_pick(A: np.ndarray, S: np.ndarray, minimize: bool) -> np.ndarray:
    """Column-wise _pick over a block of frames; slow path only on ties."""
    n = A.shape[0]
    if minimize:
        first = np.argmin(A, axis=0)
        last = n - 1 - np.argmin(A[::-1], axis=0)
    else:
        first = np.argmax(A, axis=0)
        last = n - 1 - np.argmax(A[::-1], axis=0)
    out = first.astype(np.intp)
    for c in np.flatnonzero(first != last):
        out[c] = _pick(A[:, c], S[:, c], minimize)
    return out


def _plane_count(sel) -> int:
    if isinstance(sel, KSelection):
        if sel.mode == "symmetric-6" and sel.k != 6:
            raise InvalidKError(f"symmetric-6 selection requires k = 6, got {sel.k}")
        return sel.k
    return sel


def reduce(points, sel) -> ReducedSet:
    """Union of per-plane extreme quadruples: the reduced set P_s.

    ``sel`` is a KSelection or a bare plane count. Output order is stable
    (first-seen) so downstream solves are deterministic. |indices| is at
    most min(N, 4k).
    """
    P = as_cloud(points)
    k = _plane_count(sel)
    frames = generate_orientations(k)
    U = np.stack([f.u for f in frames])
    V = np.stack([f.v for f in frames])
    per_plane = []
    seen: dict[int, None] = {}
    for lo in range(0, k, _FRAME_BLOCK):
        A = P @ U[lo:lo + _FRAME_BLOCK].T
        B = P @ V[lo:lo + _FRAME_BLOCK].T
        amax = _batch_pick(A, B, False)
        amin = _batch_pick(A, B, True)
        bmax = _batch_pick(B, A, False)
        bmin = _batch_pick(B, A, True)
        for c in range(A.shape[1]):
            quad = (int(amax[c]), int(amin[c]), int(bmax[c]), int(bmin[c]))
            per_plane.append(quad)
            for idx in quad:
                seen.setdefault(idx)
    indices = np.fromiter(seen.keys(), dtype=np.intp, count=len(seen))
    return ReducedSet(indices, per_plane)


def select_k(n, mode: str = "general", c1: float = 2.0, c2: float = 1.0) -> KSelection:
    """Plane-count heuristic.

    symmetric-6 mode always answers 6. General mode takes ceil(c1 * n^(1/4))
    clamped below by 6 and above by ceil(c2 * sqrt(n)); the upper clamp is
    waived when it would sit under the floor of 6.
    """
    n = operator.index(n)
    if n < 1:
        raise InvalidParamsError(f"point count must be at least 1, got {n}")
    if mode == "symmetric-6":
        return KSelection("symmetric-6", 6, c1, c2)
    if mode != "general":
        raise InvalidParamsError(f"unknown selection mode {mode!r}")
    k = max(math.ceil(c1 * n ** 0.25), 6)
    hi = math.ceil(c2 * math.sqrt(n))
    if hi >= 6:
        k = min(k, hi)
    return KSelection("general", k, c1, c2)


def _violators(P: np.ndarray, sphere: Sphere, band: float, mask: np.ndarray) -> np.ndarray:
    lim = sphere.radius + band
    lim2 = lim * lim
    cx, cy, cz = sphere.center
    found = []
    for lo in range(0, len(P), _VERIFY_CHUNK):
        Q = P[lo:lo + _VERIFY_CHUNK]
        d2 = np.square(Q[:, 0] - cx)
        d2 += np.square(Q[:, 1] - cy)
        d2 += np.square(Q[:, 2] - cz)
        bad = d2 > lim2
        if bad.any():
            rows = np.flatnonzero(bad) + lo
            rows = rows[~mask[rows]]
            if rows.size:
                found.append(rows)
    if not found:
        return np.empty(0, dtype=np.intp)
    return np.concatenate(found)


def solve(points, sel=None, seed: int = 0, tol: Tolerance | None = None) -> SolveReport:
    """Reduce, solve the reduced set, verify against the full cloud, repair.

    Parameters
    ----------
    points : (N, 3) array-like, N >= 1.
    sel : KSelection, bare plane count, "auto", or None (auto). Auto picks
        select_k(N) in general mode.
    seed : shuffle seed handed to the incremental solver.
    tol : optional Tolerance for degeneracy predicates.

    Returns
    -------
    SolveReport. Points outside the candidate sphere (beyond a verification
    band far tighter than user tolerance) are appended to the reduced set
    and the solve repeats; after 16 repair rounds the solver falls back to
    the full cloud and says so in ``fallback_full_solve``.
    """
    t0 = time.perf_counter()
    P = as_cloud(points)
    n = len(P)
    if tol is None:
        tol = tolerance_for(P)
    if sel is None or (isinstance(sel, str) and sel == "auto"):
        ksel = select_k(n)
    elif isinstance(sel, KSelection):
        ksel = sel
    else:
        ksel = KSelection("general", operator.index(sel))

    rset = reduce(P, ksel)
    reduce_s = time.perf_counter() - t0  # ingestion counts toward the reduce stage

    band = 1e-12 * max(tol.scale, 1.0)
    mask = np.zeros(n, dtype=bool)
    mask[rset.indices] = True
    subset = rset.indices.copy()
    solve_s = 0.0
    verify_s = 0.0
    repair_rounds = 0
    fallback = False
    while True:
        t1 = time.perf_counter()
        sphere, sup = welzl_solve(P[subset], seed=seed, tol=tol)
        solve_s += time.perf_counter() - t1
        t2 = time.perf_counter()
        viol = _violators(P, sphere, band, mask)
        if viol.size == 0:
            verify_s += time.perf_counter() - t2
            support = tuple(sorted(int(subset[i]) for i in sup.indices))
            break
        if repair_rounds >= _MAX_REPAIR:
            verify_s += time.perf_counter() - t2
            t1 = time.perf_counter()
            sphere, sup = welzl_solve(P, seed=seed, tol=tol)
            solve_s += time.perf_counter() - t1
            support = tuple(sorted(int(i) for i in sup.indices))
            fallback = True
            break
        repair_rounds += 1
        mask[viol] = True
        subset = np.concatenate([subset, viol])
        verify_s += time.perf_counter() - t2

    return SolveReport(
        sphere=sphere,
        support_indices=support,
        strategy="projection",
        k=ksel.k,
        reduced_size=int(len(rset.indices)),
        repair_rounds=repair_rounds,
        timings={
            "reduce_ms": reduce_s * 1000.0,
            "solve_ms": solve_s * 1000.0,
            "verify_ms": verify_s * 1000.0,
        },
        input_count=n,
        seed=int(seed),
        fallback_full_solve=fallback,
    )
