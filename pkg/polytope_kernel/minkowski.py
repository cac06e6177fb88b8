"""
@file minkowski.py

@brief Minkowski sum of V-polytopes.

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
#   MINKOWSKI.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   A (+) B = conv{a + b}: every pair of vertices is
#   summed and the candidates are hulled. Rays of the
#   operands are concatenated.
#.................................................
import numpy as np  # Module for numerical operations
from polytope_kernel.convex_hull import convex_hull, canonical_rays  # Hulls
from polytope_kernel.affine_hull import affine_hull_of_points  # Affine dimension with rays
from utils.classes import VPolytope  # Vertex description
from utils.errors import InputError  # Error raised on dimension mismatch


def minkowski_sum(A, B, tol):
    """This function computes the Minkowski sum of two V-polytopes.

    Args:
        A (VPolytope): first operand
        B (VPolytope): second operand
        tol (Tolerance): tolerances

    Raises:
        InputError: if the dimensions differ

    Returns:
        sum (VPolytope): canonical vertex description of A (+) B
    """
    if A.dim != B.dim:
        raise InputError("Error: cannot sum polytopes of dimension " + str(A.dim) + " and " + str(B.dim) + ".")
    if A.is_empty or B.is_empty:
        return VPolytope.empty(A.dim)
    candidates = (A.vertices[:, None, :] + B.vertices[None, :, :]).reshape(-1, A.dim)  # All vertex pairs
    hull = convex_hull(candidates, tol)
    if A.is_bounded and B.is_bounded:
        return hull
    rays = canonical_rays(np.vstack([A.rays, B.rays]), A.dim, tol)
    affine_dim = affine_hull_of_points(np.vstack([hull.vertices, hull.vertices[0] + rays]), tol)[3]
    return VPolytope(A.dim, hull.vertices, rays, affine_dim)


def minkowski_fold(polytopes, tol):
    """Left fold of minkowski_sum over a nonempty list of polytopes,
    canonicalized after every step."""
    polytopes = list(polytopes)
    if len(polytopes) == 0:
        raise InputError("Error: the Minkowski fold needs at least one polytope.")
    total = polytopes[0]
    for polytope in polytopes[1:]:
        total = minkowski_sum(total, polytope, tol)
    return total
#.................................................
#   Possible improvements:
#   - Prune candidate sums with support-function bounds before hulling.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
