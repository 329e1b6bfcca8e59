"""Smallest enclosing sphere for 3D point clouds.

The production path reduces a cloud to its per-plane extreme points before
running a randomized incremental solver, then verifies and repairs the
result against the full cloud. Desk-scale oracles, seeded data generators,
and benchmark drivers live alongside for validation.
"""

from . import errors
from .bench import run_convergence, run_scaling
from .cloudio import load_points, save_points
from .datagen import generate, kinds
from .geom import (
    Sphere,
    Tolerance,
    as_cloud,
    contains,
    sphere_from_four,
    sphere_from_three,
    sphere_from_two,
    tolerance_for,
)
from .oracle import brute_force_ses, enclosing_circle_2d, is_hull_vertex
from .projection import (
    KSelection,
    ProjectionFrame,
    ReducedSet,
    SolveReport,
    extreme4,
    generate_orientations,
    make_frame,
    project,
    reduce,
    select_k,
    solve,
)
from .welzl import SupportSet, min_sphere_with_boundary, welzl_solve

__version__ = "0.1.0"

__all__ = [
    "errors",
    "Sphere",
    "Tolerance",
    "as_cloud",
    "contains",
    "tolerance_for",
    "sphere_from_two",
    "sphere_from_three",
    "sphere_from_four",
    "welzl_solve",
    "min_sphere_with_boundary",
    "SupportSet",
    "ProjectionFrame",
    "KSelection",
    "ReducedSet",
    "SolveReport",
    "make_frame",
    "generate_orientations",
    "project",
    "extreme4",
    "reduce",
    "select_k",
    "solve",
    "brute_force_ses",
    "is_hull_vertex",
    "enclosing_circle_2d",
    "generate",
    "kinds",
    "run_scaling",
    "run_convergence",
    "load_points",
    "save_points",
    "__version__",
]
