"""
@file containment.py

@brief Membership tests and support functions.

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
#   CONTAINMENT.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   H-form membership is a matrix-vector product.
#   V-form membership is an LP: convex weights on the
#   vertices plus nonnegative weights on the rays that
#   reproduce the point up to an L-infinity residual t,
#   minimized; the point is inside if t <= eps_contain.
#.................................................
import numpy as np  # Module for numerical operations
from polytope_kernel.lp_solve import solve_lp  # Linear programming
from utils.classes import HPolytope  # Halfspace description
from utils.errors import InputError  # Error raised on invalid input


def _as_query(x, dim):
    x = np.asarray(x, dtype=float).reshape(-1)
    if x.shape[0] != dim:
        raise InputError("Error: point of dimension " + str(x.shape[0]) + " queried against a set of dimension " + str(dim) + ".")
    return x


def hull_residual(vertices, rays, x):
    """This function finds the smallest L-infinity distance between x and
    conv(vertices) + cone(rays).

    Args:
        vertices (array): m x d points, m >= 1
        rays (array): r x d directions
        x (array): query point

    Returns:
        residual (float): the distance
        weights (array): convex weights of the vertices at the optimum
    """
    m = vertices.shape[0]
    r = rays.shape[0]
    d = x.shape[0]
    G = np.vstack([vertices, rays]).T  # d x (m + r)
    # Variables: lambda (m), nu (r), t
    cost = np.zeros(m + r + 1)
    cost[-1] = 1.0
    ones = np.ones((d, 1))
    A_ub = np.vstack([np.hstack([G, -ones]), np.hstack([-G, -ones])])
    b_ub = np.concatenate([x, -x])
    A_eq = np.append(np.ones(m), np.zeros(r + 1))[None, :]
    bounds = [(0.0, None)] * (m + r + 1)
    status, solution, value = solve_lp(cost, A_ub, b_ub, A_eq, np.array([1.0]), bounds)
    if status != "optimal":
        return np.inf, None
    return value, solution[:m]


def contains(polytope, x, tol):
    """This function checks if a point belongs to a polytope.

    Args:
        polytope (HPolytope or VPolytope): the set
        x (array): query point
        tol (Tolerance): tolerances

    Raises:
        InputError: if the dimensions differ

    Returns:
        bool: True if x is inside within eps_contain
    """
    x = _as_query(x, polytope.dim)
    if isinstance(polytope, HPolytope):
        if polytope.is_empty:
            return False
        if polytope.n_facets == 0:
            return True
        return bool(np.max(polytope.normals @ x - polytope.offsets) <= tol.eps_contain)
    if polytope.is_empty:
        return False
    residual, _ = hull_residual(polytope.vertices, polytope.rays, x)
    return bool(residual <= tol.eps_contain)


def support(polytope, direction):
    """This function evaluates the support function max_v d.v.

    Args:
        polytope (VPolytope): bounded vertex description
        direction (array): nonzero direction

    Raises:
        InputError: on a zero direction, a dimension mismatch or an empty polytope

    Returns:
        value (float): the support value, inf if a ray points along d
    """
    d = _as_query(direction, polytope.dim)
    if not np.any(d):
        raise InputError("Error: the support function needs a nonzero direction.")
    if polytope.is_empty:
        raise InputError("Error: the support function of the empty set is undefined.")
    if polytope.rays.shape[0] and np.max(polytope.rays @ d) > 0.0:
        return np.inf
    return float(np.max(polytope.vertices @ d))


def support_many(polytope, directions):
    """Support values along the rows of directions, bounded polytopes only."""
    return np.max(np.asarray(directions, dtype=float) @ polytope.vertices.T, axis=1)


def is_extreme_point(points, index, tol):
    """This function checks that points[index] is not a convex
    combination of the other points.

    Args:
        points (array): m x d points
        index (int): row to test
        tol (Tolerance): tolerances

    Returns:
        bool: True if the point is extreme
    """
    points = np.asarray(points, dtype=float)
    others = np.delete(points, index, axis=0)
    if others.shape[0] == 0:
        return True
    residual, _ = hull_residual(others, np.zeros((0, points.shape[1])), points[index])
    return bool(residual > tol.eps_hull)
#.................................................
#   Possible improvements:
#   - Batch the V-form membership LPs of many queries.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
