"""
@file chebyshev.py

@brief Chebyshev center: the largest ball inscribed in an H-polytope.

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
#   CHEBYSHEV.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   This module computes the Chebyshev center with the LP
#       max r  s.t.  a_i.x + r |a_i| <= b_i,  r >= 0
#   Equality pairs are not part of the ball constraint:
#   the LP is solved inside the affine subspace they
#   define, so the ball is a ball of that subspace.
#.................................................
import numpy as np  # Module for numerical operations
from polytope_kernel.lp_solve import solve_lp  # Linear programming
from polytope_kernel.affine_hull import equality_subspace, restrict_to_subspace  # Equality handling
from polytope_kernel.halfspaces import split_equalities  # Equality pair detection
from utils.classes import ChebyshevResult, Tolerance  # Result container and tolerances


def chebyshev_lp(A, b, norms=None):
    """This function solves the Chebyshev LP on A x <= b.

    Args:
        A (array): normals
        b (array): offsets
        norms (array, optional): norms used in the ball constraint, |a_i| by default

    Returns:
        status (string): "optimal", "empty" or "unbounded"
        center (array or None): center of the ball
        radius (float or None): radius of the ball
    """
    k = A.shape[1]
    if A.shape[0] == 0:
        return "unbounded", np.zeros(k), np.inf
    if norms is None:
        norms = np.linalg.norm(A, axis=1)
    cost = np.zeros(k + 1)
    cost[-1] = -1.0  # Maximize the radius
    bounds = [(None, None)] * k + [(0.0, None)]
    status, x, _ = solve_lp(cost, np.column_stack([A, norms]), b, bounds=bounds)
    match status:
        case "infeasible":
            return "empty", None, None
        case "unbounded":
            return "unbounded", None, np.inf
    return "optimal", x[:k], float(x[k])
#.................................................

def chebyshev_center(polytope, tol=None):
    """This function finds the center and the radius of the largest ball
    inscribed in an HPolytope, within the affine subspace of its equalities.

    Args:
        polytope (HPolytope): halfspace description
        tol (Tolerance, optional): tolerances

    Returns:
        result (ChebyshevResult): status, center and radius
    """
    tol = Tolerance() if tol is None else tol
    if polytope.is_empty:
        return ChebyshevResult("empty")
    A_in, b_in, A_eq, b_eq, _ = split_equalities(polytope, tol)
    subspace = equality_subspace(A_eq, b_eq, polytope.dim, tol)
    if subspace is None:
        return ChebyshevResult("empty")
    origin, basis = subspace
    A_z, b_z, feasible, _ = restrict_to_subspace(A_in, b_in, origin, basis, tol)
    if not feasible:
        return ChebyshevResult("empty")
    if basis.shape[1] == 0:  # A single point
        return ChebyshevResult("optimal", origin, 0.0)
    status, z, radius = chebyshev_lp(A_z, b_z)
    match status:
        case "empty":
            return ChebyshevResult("empty")
        case "unbounded":
            return ChebyshevResult("unbounded", None, np.inf)
    return ChebyshevResult("optimal", origin + basis @ z, radius)
#.................................................
#   Possible improvements:
#   None.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
