"""
@file projection.py

@brief Orthogonal projection of polytopes on a subset of coordinates.

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
#   PROJECTION.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   The projection of conv(V) + cone(R) keeps the chosen
#   columns of V and R and hulls again. The planar model
#   of a sagittal robot is the projection on
#   (F_x, F_z, tau_y).
#.................................................
import numpy as np  # Module for numerical operations
from polytope_kernel.convex_hull import convex_hull, canonical_rays  # Hulls
from polytope_kernel.affine_hull import affine_hull_of_points  # Affine dimension with rays
from utils.classes import ProgramConstants, VPolytope  # Constants and descriptions
from utils.errors import InputError  # Error raised on invalid indices


def project_polytope(polytope, dims, tol):
    """This function projects a V-polytope on some of its coordinates.

    Args:
        polytope (VPolytope): vertex description
        dims (list): distinct coordinate indices, in output order
        tol (Tolerance): tolerances

    Raises:
        InputError: on repeated or out-of-range indices

    Returns:
        projection (VPolytope): canonical vertex description of dimension len(dims)
    """
    dims = list(dims)
    if len(dims) == 0 or len(set(dims)) != len(dims) or min(dims) < 0 or max(dims) >= polytope.dim:
        raise InputError("Error: invalid projection indices " + str(dims) + " for dimension " + str(polytope.dim) + ".")
    k = len(dims)
    if polytope.is_empty:
        return VPolytope.empty(k)
    hull = convex_hull(polytope.vertices[:, dims], tol)
    rays = polytope.rays[:, dims]
    rays = rays[np.linalg.norm(rays, axis=1) > tol.eps_rank]
    if rays.shape[0] == 0:
        return hull
    rays = canonical_rays(rays, k, tol)
    affine_dim = affine_hull_of_points(np.vstack([hull.vertices, hull.vertices[0] + rays]), tol)[3]
    return VPolytope(k, hull.vertices, rays, affine_dim)


def planar_projection(polytope, tol):
    """Projection of a 6D wrench polytope on (F_x, F_z, tau_y)."""
    return project_polytope(polytope, ProgramConstants().Wrench.PLANAR_INDICES, tol)
#.................................................
#   Possible improvements:
#   - Projection of H-polytopes by Fourier-Motzkin elimination.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
