"""
@file awp.py

@brief Actuation wrench polytope of a robot.

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
#   AWP.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   The actuation wrench polytope is the Minkowski sum
#   of the limb wrench polytopes, folded in limb order.
#.................................................
from polytope_kernel.minkowski import minkowski_sum  # Minkowski sum
from wrench_assembly.lift import limb_wrench_polytope  # Per-limb wrenches
from utils.errors import WrenchPolyError, tag_limb  # Errors naming the limb


def limb_wrench_polytopes(robot, tol):
    """Wrench polytope of every limb of the robot, in limb order.
    Errors are re-raised with the label of the limb."""
    polytopes = []
    for limb in robot.limbs:
        try:
            polytopes.append(limb_wrench_polytope(limb, tol, robot.com_position))
        except WrenchPolyError as e:
            raise tag_limb(e, limb.limb_id)
    return polytopes


def awp(robot, tol):
    """This function computes the actuation wrench polytope.

    Args:
        robot (RobotSnapshot): the stance
        tol (Tolerance): tolerances

    Raises:
        SingularConfigurationError: if a limb is singular

    Returns:
        polytope (VPolytope): bounded 6D vertex description
    """
    polytopes = limb_wrench_polytopes(robot, tol)
    total = polytopes[0]
    for limb, polytope in zip(robot.limbs[1:], polytopes[1:]):
        try:
            total = minkowski_sum(total, polytope, tol)
        except WrenchPolyError as e:
            raise tag_limb(e, limb.limb_id)
    return total
#.................................................
#   Possible improvements:
#   - Sum the limbs as zonotopes when every limb is square.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
