"""
@file convex_hull.py

@brief Degenerate-aware convex hull and canonical vertex ordering.

Copyright (C) 2025-2026 The WrenchPoly developers.
All rights reserved.

This file is part of WrenchPoly: wrench polytopes for multi-limbed robots.

WrenchPoly is free software: you can redistribute it and/or modify
it under the terms of the GNU Lesser General Public License as
published by the Free Software Foundation, either version 3 of the
License, or (at your option) any later version.

WrenchPoly is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public
License along with WrenchPoly.  If not, see
<http://www.gnu.org/licenses/>.
"""

#.................................................
#   CONVEX_HULL.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   This module contains the convex hull of the kernel.
#   The points are sorted canonically first, near
#   duplicates are merged, the affine hull is detected
#   and qhull runs inside it. Vertices are always input
#   points, never recomputed coordinates.
#.................................................
from types import SimpleNamespace
import numpy as np  # Module for numerical operations
from scipy.spatial import ConvexHull, cKDTree  # Qhull wrapper and neighbour search
from polytope_kernel.affine_hull import affine_hull_of_points  # Affine hull by SVD
from utils.classes import ProgramConstants, VPolytope  # Constants and vertex description
from utils.errors import InputError, DegenerateGeometryError  # Errors of the kernel


def as_point_array(points, dim=None):
    """This function validates a point list and returns it as an m x d array.

    Args:
        points (array-like): list of points
        dim (int, optional): expected dimension

    Raises:
        InputError: on ragged input, empty input, non-finite values or d > 6

    Returns:
        points (array): m x d array
    """
    MAX_DIM = ProgramConstants().Limits.MAX_DIM
    try:
        array = np.array(points, dtype=float)
    except ValueError as e:
        raise InputError("Error: the points do not share the same dimension: " + str(e))
    if array.ndim != 2 or array.shape[0] == 0 or array.shape[1] == 0:
        raise InputError("Error: expected a nonempty list of points, got shape " + str(array.shape) + ".")
    if dim is not None and array.shape[1] != dim:
        raise InputError("Error: expected points of dimension " + str(dim) + ", got " + str(array.shape[1]) + ".")
    if array.shape[1] > MAX_DIM:
        raise InputError("Error: dimension " + str(array.shape[1]) + " exceeds the maximum of " + str(MAX_DIM) + ".")
    if not np.all(np.isfinite(array)):
        raise InputError("Error: points must have finite coordinates.")
    return array
#.................................................

def canonical_order(points, tol):
    """Returns the permutation sorting rows lexicographically by their
    coordinates rounded to eps_canon, ties broken by the exact values."""
    points = np.asarray(points, dtype=float)
    rounded = np.round(points / tol.eps_canon)
    d = points.shape[1]
    keys = [points[:, j] for j in reversed(range(d))] + [rounded[:, j] for j in reversed(range(d))]
    return np.lexsort(keys)


def merge_duplicates(points, tol):
    """Sorts the rows canonically and drops rows closer than eps_canon
    (max norm) to an earlier row."""
    points = np.asarray(points, dtype=float)
    points = points[canonical_order(points, tol)]
    if points.shape[0] < 2:
        return points
    pairs = cKDTree(points).query_pairs(r=tol.eps_canon, p=np.inf, output_type="ndarray")
    if pairs.shape[0] == 0:
        return points
    keep = np.ones(points.shape[0], dtype=bool)
    keep[pairs.max(axis=1)] = False  # The earlier row of a pair survives
    return points[keep]
#.................................................

def _qhull(points):
    """Runs qhull, joggling the input once if the exact run fails."""
    try:
        return ConvexHull(points)
    except Exception as first_error:
        try:
            return ConvexHull(points, qhull_options="QJ")
        except Exception:
            raise DegenerateGeometryError("Error detected in convex_hull.py, qhull failed: " + str(first_error))


def hull_in_affine_span(points, tol):
    """This function computes the hull of points inside their affine hull.

    Args:
        points (array): m x d points, canonical and without duplicates
        tol (Tolerance): tolerances

    Returns:
        span (SimpleNamespace): center, basis, complement and rank of the
        affine hull, vertex_indices of the extreme points, and the facets
        normals_y . y <= offsets_y in the coordinates y = basis^T (x - center)
    """
    center, basis, complement, rank = affine_hull_of_points(points, tol)
    span = SimpleNamespace(center=center, basis=basis, complement=complement, rank=rank)
    Y = (points - center) @ basis
    if rank == 0:
        span.vertex_indices = np.array([0])
        span.normals_y = np.zeros((0, 0))
        span.offsets_y = np.zeros(0)
    elif rank == 1:
        lo = int(np.argmin(Y[:, 0]))
        hi = int(np.argmax(Y[:, 0]))
        span.vertex_indices = np.unique([lo, hi])
        span.normals_y = np.array([[-1.0], [1.0]])
        span.offsets_y = np.array([-Y[lo, 0], Y[hi, 0]])
    else:
        hull = _qhull(Y)
        span.vertex_indices = np.sort(hull.vertices)
        span.normals_y = hull.equations[:, :-1]
        span.offsets_y = -hull.equations[:, -1]
    return span
#.................................................

def convex_hull(points, tol):
    """This function computes the convex hull of a point set.
    Flat inputs are hulled within their affine hull.

    Args:
        points (array-like): list of points of equal dimension d <= 6
        tol (Tolerance): tolerances

    Raises:
        InputError: if the points do not share their dimension
        DegenerateGeometryError: if qhull fails

    Returns:
        hull (VPolytope): extreme points in canonical order
    """
    points = merge_duplicates(as_point_array(points), tol)
    span = hull_in_affine_span(points, tol)
    return VPolytope(points.shape[1], points[span.vertex_indices], None, span.rank)


def canonical_rays(rays, dim, tol):
    """Normalizes rays, merges duplicates and sorts them canonically."""
    rays = np.asarray(rays, dtype=float).reshape(-1, dim)
    norms = np.linalg.norm(rays, axis=1)
    rays = rays[norms > tol.eps_rank] / norms[norms > tol.eps_rank][:, None]
    if rays.shape[0] == 0:
        return rays
    return merge_duplicates(rays, tol)
#.................................................
#   Possible improvements:
#   - Hull the candidate sums of large Minkowski folds in batches.
#.................................................
#   KNOW PROBLEMS:
#   - Qhull merges nearly coplanar facets in 5D and 6D; a point
#     closer than its precision to a facet may be dropped.
#.................................................
