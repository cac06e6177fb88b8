"""
@file lift.py

@brief Lift of contact forces to wrenches at the CoM.

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
#   LIFT.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   w = (f, p x f) with p relative to the CoM.
#.................................................
import numpy as np  # Module for numerical operations
from limb_force.force_polytope import force_polytope  # Per-limb forces
from polytope_kernel.convex_hull import convex_hull  # Canonical hulls
from utils.classes import Wrench  # Force/torque pair


def skew(p):
    """Cross-product matrix: skew(p) @ f = p x f."""
    return np.array([[0.0, -p[2], p[1]],
                     [p[2], 0.0, -p[0]],
                     [-p[1], p[0], 0.0]])


def lift_matrix(p):
    """6 x 3 matrix mapping a contact force at p to its wrench."""
    return np.vstack([np.eye(3), skew(np.asarray(p, dtype=float))])


def lift_force_to_wrench(f, p):
    """This function lifts a contact force to a wrench at the CoM.

    Args:
        f (array): force (N)
        p (array): contact point relative to the CoM (m)

    Returns:
        wrench (Wrench): (f, p x f)
    """
    f = np.asarray(f, dtype=float)
    return Wrench(f, np.cross(np.asarray(p, dtype=float), f))


def lift_points(forces, p):
    """Lifts every row of forces; returns an m x 6 array."""
    forces = np.asarray(forces, dtype=float).reshape(-1, 3)
    return np.hstack([forces, np.cross(np.asarray(p, dtype=float)[None, :], forces)])


def limb_wrench_polytope(limb, tol, com=None):
    """This function computes the wrench polytope of one limb.

    Args:
        limb (LimbModel): the limb, with a 3-row Jacobian
        tol (Tolerance): tolerances
        com (array, optional): CoM position, zero by default

    Raises:
        SingularConfigurationError: if the Jacobian is rank deficient

    Returns:
        polytope (VPolytope): 6D vertex description, affine dimension <= 3
    """
    p = limb.foot_position if com is None else limb.foot_position - np.asarray(com, dtype=float)
    forces = force_polytope(limb, tol)
    return convex_hull(lift_points(forces.vertices, p), tol)
#.................................................
#   Possible improvements:
#   None.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
