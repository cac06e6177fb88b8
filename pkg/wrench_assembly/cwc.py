"""
@file cwc.py

@brief Contact wrench cone of a stance.

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
#   CWC.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   The rays of every friction pyramid are lifted to
#   the CoM; their conic hull is the contact wrench
#   cone, converted to halfspaces through the origin.
#.................................................
import numpy as np  # Module for numerical operations
from limb_force.friction_cone import friction_cone_rays  # Pyramid edges
from polytope_kernel.affine_hull import linear_span_of_rays  # Cone dimension
from polytope_kernel.convex_hull import canonical_order  # Deterministic ordering
from polytope_kernel.conversion import v_to_h  # V -> H conversion
from wrench_assembly.lift import lift_points  # Force to wrench
from utils.classes import VPolytope, Tolerance  # Descriptions and tolerances


def cwc_rays(robot):
    """This function lifts the pyramid edges of every contact.

    Args:
        robot (RobotSnapshot): the stance

    Returns:
        rays (array): (sum of k) x 6 wrench rays, contact order then edge order
    """
    return np.vstack([lift_points(friction_cone_rays(contact), robot.relative_foot(k))
                      for k, contact in enumerate(robot.contacts)])


def cwc(robot, tol=None):
    """This function computes the contact wrench cone.

    Args:
        robot (RobotSnapshot): the stance
        tol (Tolerance, optional): tolerances

    Returns:
        cone (HPolytope): halfspaces, all offsets zero
        generators (VPolytope): origin plus the lifted rays, unnormalized
    """
    tol = Tolerance() if tol is None else tol
    rays = cwc_rays(robot)
    rays = rays[canonical_order(rays, tol)]
    rank = linear_span_of_rays(rays, tol)[2]
    generators = VPolytope(6, np.zeros((1, 6)), rays, rank)
    return v_to_h(generators, tol), generators
#.................................................
#   Possible improvements:
#   None.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
