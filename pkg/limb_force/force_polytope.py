"""
@file force_polytope.py

@brief Contact forces achievable within the joint torque limits.

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
#   FORCE_POLYTOPE.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   The force polytope is the image of the torque box
#   under f = J^{T#} (bias - tau), computed at the 2^n
#   corners of the box and hulled.
#   The preimage variant {f : tau_min <= bias - J^T f
#   <= tau_max} is also available; both coincide for
#   square Jacobians.
#.................................................
import itertools  # Cartesian products
import numpy as np  # Module for numerical operations
from limb_force.pseudoinverse import transpose_pseudoinverse  # J^{T#}
from polytope_kernel.convex_hull import convex_hull  # Canonical hulls
from polytope_kernel.conversion import h_to_v  # H -> V conversion
from polytope_kernel.halfspaces import canonical_halfspaces  # Canonical H
from utils.errors import InputError  # Error raised on invalid limbs


def torque_box_vertices(tau_min, tau_max):
    """This function enumerates the 2^n corners of a torque box.

    Args:
        tau_min (array): lower bounds
        tau_max (array): upper bounds

    Returns:
        corners (array): 2^n x n matrix, one corner per row
    """
    tau_min = np.asarray(tau_min, dtype=float)
    tau_max = np.asarray(tau_max, dtype=float)
    choices = np.array(list(itertools.product((False, True), repeat=tau_min.shape[0])), dtype=bool)
    return np.where(choices, tau_max[None, :], tau_min[None, :])


def extreme_forces(limb, tol):
    """Contact forces at the corners of the torque box, one per row,
    in the order of torque_box_vertices."""
    J_pinv = transpose_pseudoinverse(limb.jacobian, tol, limb.limb_id)
    corners = torque_box_vertices(limb.tau_min, limb.tau_max)
    return (limb.bias[None, :] - corners) @ J_pinv.T


def force_polytope(limb, tol):
    """This function computes the force polytope of a limb.

    Args:
        limb (LimbModel): the limb
        tol (Tolerance): tolerances

    Raises:
        SingularConfigurationError: if the Jacobian is rank deficient

    Returns:
        polytope (VPolytope): canonical vertex description, dimension m
    """
    return convex_hull(extreme_forces(limb, tol), tol)


def torque_preimage_polytope(limb, tol):
    """This function computes the set of forces whose joint torques
    bias - J^T f stay inside the torque box.

    Args:
        limb (LimbModel): the limb
        tol (Tolerance): tolerances

    Raises:
        InputError: if the set is unbounded (J^T without full column rank)

    Returns:
        polytope (VPolytope): canonical vertex description, possibly empty
    """
    JT = limb.jacobian.T
    if np.linalg.matrix_rank(JT, tol=tol.eps_rank * max(1.0, np.linalg.norm(JT, 2))) < JT.shape[1]:
        raise InputError("Error: the torque preimage of limb '" + limb.limb_id + "' is unbounded.")
    normals = np.vstack([JT, -JT])
    offsets = np.concatenate([limb.bias - limb.tau_min, limb.tau_max - limb.bias])
    return h_to_v(canonical_halfspaces(limb.force_dim, normals, offsets, tol), tol)
#.................................................
#   Possible improvements:
#   - Zonotope generators instead of the 2^n corner enumeration.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
