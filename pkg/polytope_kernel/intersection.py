"""
@file intersection.py

@brief Intersection of H-polytopes and redundancy removal.

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
#   INTERSECTION.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   The intersection stacks the rows of both operands
#   and removes the redundant ones. Two methods:
#   - "qhull": the irredundant rows are the vertices of
#     the dual hull around a Chebyshev interior point
#     (bounded, full-dimensional after equalities)
#   - "lp": one LP per row, maximizing its normal over
#     the remaining rows
#   Implicit equalities are found with width LPs and
#   returned as equality pairs.
#.................................................
import numpy as np  # Module for numerical operations
from scipy.linalg import null_space  # Orthonormal basis of a null space
from scipy.spatial import HalfspaceIntersection  # Qhull halfspace intersection
from polytope_kernel.lp_solve import solve_lp  # Linear programming
from polytope_kernel.affine_hull import (equality_subspace, restrict_to_subspace,
                                         affine_hull_of_halfspaces)  # Affine hulls
from polytope_kernel.halfspaces import canonical_halfspaces, split_equalities, equality_rows  # Canonical H
from polytope_kernel.chebyshev import chebyshev_lp  # Interior points
from polytope_kernel.conversion import is_bounded_system  # Boundedness test
from utils.classes import HPolytope  # Halfspace description
from utils.errors import InputError, DegenerateGeometryError  # Errors of the kernel


def irredundant_rows_lp(A, b, tol):
    """This function finds the irredundant rows of A x <= b with one LP per row.
    A row is redundant if maximizing its normal over the other rows
    (and itself relaxed by 1) does not exceed its offset.

    Args:
        A (array): normals
        b (array): offsets
        tol (Tolerance): tolerances

    Returns:
        kept (array): indices of the irredundant rows
    """
    active = np.ones(A.shape[0], dtype=bool)
    for i in range(A.shape[0]):
        active[i] = False
        A_ub = np.vstack([A[active], A[i]])
        b_ub = np.append(b[active], b[i] + 1.0)
        status, _, value = solve_lp(-A[i], A_ub, b_ub)
        redundant = status == "optimal" and -value <= b[i] + tol.eps_hull * max(1.0, abs(b[i]))
        active[i] = not redundant
    return np.nonzero(active)[0]


def irredundant_rows_qhull(A, b, center):
    """This function finds the irredundant rows of the bounded set A x <= b
    from the dual hull of qhull's halfspace intersection.

    Args:
        A (array): normals
        b (array): offsets
        center (array): strictly interior point

    Raises:
        DegenerateGeometryError: if qhull fails

    Returns:
        kept (array): indices of the irredundant rows
        vertices (array): vertices of the set, with repetitions
    """
    try:
        intersection = HalfspaceIntersection(np.column_stack([A, -b]), center)
        # Merged dual facets are ragged, so dual_vertices cannot be used
        facets = [np.asarray(f, dtype=int) for f in intersection.dual_facets]
        kept = np.unique(np.concatenate(facets)) if facets else np.zeros(0, dtype=int)
        vertices = intersection.intersections
    except Exception as e:
        raise DegenerateGeometryError("Error detected in intersection.py, the halfspace intersection failed: " + str(e))
    return kept, vertices


def _irredundant_1d(a, b):
    """Tightest upper and lower rows of a x <= b in one dimension."""
    kept = []
    for side in (a > 0.0, a < 0.0):
        rows = np.nonzero(side)[0]
        if rows.size:
            kept.append(rows[np.argmin(b[rows] / np.abs(a[rows]))])
    return np.array(sorted(kept), dtype=int)
#.................................................

def remove_redundancy(polytope, tol, method=None):
    """This function removes the redundant rows of an HPolytope and makes
    implicit equalities explicit.

    Args:
        polytope (HPolytope): halfspace description
        tol (Tolerance): tolerances
        method (string, optional): "qhull", "lp" or None (qhull when possible)

    Raises:
        InputError: on an unknown method

    Returns:
        polytope (HPolytope): canonical irredundant description, or HPolytope.empty
    """
    if method not in (None, "qhull", "lp"):
        raise InputError("Error: unknown redundancy removal method '" + str(method) + "'.")
    dim = polytope.dim
    if polytope.is_empty or polytope.n_facets == 0:
        return polytope
    A_in, b_in, A_eq, b_eq, _ = split_equalities(polytope, tol)
    subspace = equality_subspace(A_eq, b_eq, dim, tol)
    if subspace is None:
        return HPolytope.empty(dim)
    origin, basis = subspace
    A_z, b_z, feasible, kept = restrict_to_subspace(A_in, b_in, origin, basis, tol)
    if not feasible:
        return HPolytope.empty(dim)
    A_in, b_in = A_in[kept], b_in[kept]
    if A_z.shape[0] > 0:
        status, center, radius = chebyshev_lp(A_z, b_z)
        if status == "empty":
            return HPolytope.empty(dim)
        if status == "optimal" and radius <= tol.eps_contain:
            # Implicit equalities: move to the affine hull of the set
            hull_origin, hull_basis = affine_hull_of_halfspaces(A_z, b_z, center, tol)
            origin = origin + basis @ hull_origin
            basis = basis @ hull_basis
            A_z, b_z, _, kept = restrict_to_subspace(A_in, b_in, origin, basis, tol)
            A_in, b_in = A_in[kept], b_in[kept]
            status, center, radius = chebyshev_lp(A_z, b_z) if A_z.shape[0] else ("unbounded", None, np.inf)
        bounded = status == "optimal" and is_bounded_system(A_z, tol)
        if A_z.shape[0] == 0:
            rows = np.zeros(0, dtype=int)
        elif basis.shape[1] == 1:
            rows = _irredundant_1d(A_z[:, 0], b_z)
        elif bounded and radius > tol.eps_contain and method != "lp":
            rows = irredundant_rows_qhull(A_z, b_z, center)[0]
        else:
            rows = irredundant_rows_lp(A_z, b_z, tol)
        A_in, b_in = A_in[rows], b_in[rows]
    # The equalities of the final subspace
    complement = null_space(basis.T) if basis.shape[1] else np.eye(dim)
    A_pairs, b_pairs = equality_rows(complement.T, complement.T @ origin)
    return canonical_halfspaces(dim, np.vstack([A_in, A_pairs]), np.concatenate([b_in, b_pairs]), tol)
#.................................................

def intersect(A, B, tol, method=None):
    """This function intersects two H-polytopes.

    Args:
        A (HPolytope): first operand
        B (HPolytope): second operand
        tol (Tolerance): tolerances
        method (string, optional): redundancy removal method, see remove_redundancy

    Raises:
        InputError: if the dimensions differ

    Returns:
        intersection (HPolytope): irredundant description, or HPolytope.empty
    """
    if A.dim != B.dim:
        raise InputError("Error: cannot intersect polytopes of dimension " + str(A.dim) + " and " + str(B.dim) + ".")
    if A.is_empty or B.is_empty:
        return HPolytope.empty(A.dim)
    stacked = canonical_halfspaces(A.dim, np.vstack([A.normals, B.normals]),
                                   np.concatenate([A.offsets, B.offsets]), tol)
    return remove_redundancy(stacked, tol, method)


def stack_halfspaces(A, B, tol):
    """Intersection of two H-polytopes without redundancy removal."""
    if A.dim != B.dim:
        raise InputError("Error: cannot intersect polytopes of dimension " + str(A.dim) + " and " + str(B.dim) + ".")
    return canonical_halfspaces(A.dim, np.vstack([A.normals, B.normals]), np.concatenate([A.offsets, B.offsets]), tol)
#.................................................
#   Possible improvements:
#   - Clarkson's algorithm for the LP method on large row counts.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
