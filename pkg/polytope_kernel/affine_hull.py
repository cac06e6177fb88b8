"""
@file affine_hull.py

@brief Affine hulls of point sets and of halfspace systems.

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
#   AFFINE_HULL.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   Flat sets are first-class citizens: every hull and
#   every conversion works inside the affine hull of
#   its input and maps the result back. This module
#   finds those hulls:
#   - from points, by SVD of the centered points
#   - from rays, by SVD of the normalized rays
#   - from halfspaces, by width LPs along the
#     directions not yet spanned
#   and restricts halfspace systems to a subspace.
#.................................................
import numpy as np  # Module for numerical operations
from scipy.linalg import null_space  # Orthonormal basis of a null space
from polytope_kernel.lp_solve import solve_lp  # Linear programming
from utils.errors import DegenerateGeometryError  # Error raised on numerical failure


def _split_by_rank(matrix, tol):
    """SVD split of the row space of matrix: (basis, complement, rank)."""
    d = matrix.shape[1]
    _, s, Vt = np.linalg.svd(matrix, full_matrices=True)
    if s.size == 0:
        return np.zeros((d, 0)), np.eye(d), 0
    rank = int(np.sum(s > tol.eps_rank * max(1.0, s[0])))
    return Vt[:rank].T, Vt[rank:].T, rank


def affine_hull_of_points(points, tol):
    """This function finds the affine hull of a point set.

    Args:
        points (array): m x d points
        tol (Tolerance): tolerances

    Returns:
        center (array): a point of the affine hull (the centroid)
        basis (array): d x r orthonormal directions of the hull
        complement (array): d x (d - r) orthonormal normals of the hull
        rank (int): affine dimension r
    """
    points = np.asarray(points, dtype=float)
    if points.shape[0] == 1:
        d = points.shape[1]
        return points[0].copy(), np.zeros((d, 0)), np.eye(d), 0
    center = points.mean(axis=0)
    basis, complement, rank = _split_by_rank(points - center, tol)
    return center, basis, complement, rank


def linear_span_of_rays(rays, tol):
    """This function finds the linear span of a set of rays.

    Args:
        rays (array): m x d directions, nonzero
        tol (Tolerance): tolerances

    Returns:
        basis (array): d x r orthonormal directions of the span
        complement (array): d x (d - r) orthonormal normals of the span
        rank (int): dimension r of the span
    """
    rays = np.asarray(rays, dtype=float)
    unit = rays / np.linalg.norm(rays, axis=1)[:, None]
    return _split_by_rank(unit, tol)
#.................................................

def equality_subspace(A_eq, b_eq, dim, tol):
    """This function parametrizes the solutions of A_eq x = b_eq
    as x = origin + basis z.

    Args:
        A_eq (array): equality normals, may have no rows
        b_eq (array): equality offsets
        dim (int): ambient dimension
        tol (Tolerance): tolerances

    Returns:
        (origin, basis) or None if the equalities are inconsistent
    """
    if A_eq is None or A_eq.shape[0] == 0:
        return np.zeros(dim), np.eye(dim)
    origin = np.linalg.lstsq(A_eq, b_eq, rcond=None)[0]  # Minimum-norm particular solution
    if np.max(np.abs(A_eq @ origin - b_eq)) > tol.eps_contain:
        return None
    _, basis, _ = _split_by_rank(A_eq, tol)
    return origin, basis


def restrict_to_subspace(A, b, origin, basis, tol):
    """This function rewrites A x <= b in the coordinates z of x = origin + basis z.
    Rows that become constant are dropped after checking them.

    Args:
        A (array): halfspace normals
        b (array): halfspace offsets
        origin (array): origin of the subspace
        basis (array): directions of the subspace
        tol (Tolerance): tolerances

    Returns:
        A_z (array): restricted normals
        b_z (array): restricted offsets
        feasible (bool): False if a constant row is violated
        kept (array): indices of the rows that were kept
    """
    A_z = A @ basis
    b_z = b - A @ origin
    constant = np.linalg.norm(A_z, axis=1) <= tol.eps_rank
    if np.any(b_z[constant] < -tol.eps_contain):
        return A_z[:0], b_z[:0], False, np.zeros(0, dtype=int)
    kept = np.nonzero(~constant)[0]
    return A_z[kept], b_z[kept], True, kept
#.................................................

def affine_hull_of_halfspaces(A, b, point, tol):
    """This function finds the affine hull of the bounded set {x : A x <= b}
    starting from one of its points. The width of the set is measured
    along every direction not yet spanned; a direction with width
    above eps_contain is spanned by the farthest point found.

    Args:
        A (array): halfspace normals
        b (array): halfspace offsets
        point (array): a point of the set
        tol (Tolerance): tolerances

    Raises:
        DegenerateGeometryError: if the set turns out to be unbounded

    Returns:
        origin (array): the starting point
        basis (array): orthonormal directions of the affine hull
    """
    k = A.shape[1]
    basis = np.zeros((k, 0))
    while basis.shape[1] < k:
        complement = np.eye(k) if basis.shape[1] == 0 else null_space(basis.T)
        grown = False
        for n in complement.T:
            status_hi, x_hi, value_hi = solve_lp(-n, A, b)
            status_lo, x_lo, value_lo = solve_lp(n, A, b)
            if status_hi != "optimal" or status_lo != "optimal":
                raise DegenerateGeometryError("Error detected in affine_hull.py, the width of the set "
                                              + "cannot be measured (" + status_hi + ", " + status_lo + ").")
            hi = -value_hi
            lo = value_lo
            if hi - lo > tol.eps_contain:
                at = n @ point
                far = x_hi if hi - at >= at - lo else x_lo
                direction = far - point
                direction = direction - basis @ (basis.T @ direction)  # Keep the basis orthonormal
                basis = np.column_stack([basis, direction / np.linalg.norm(direction)])
                grown = True
                break
        if not grown:
            break
    return np.asarray(point, dtype=float), basis
#.................................................
#   Possible improvements:
#   - Reuse the LP optima of one sweep in the next one.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
