"""
@file friction_polytope.py

@brief Force polytope of a limb cut by the friction cone of its contact.

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
#   FRICTION_POLYTOPE.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
import numpy as np  # Module for numerical operations
from limb_force.force_polytope import force_polytope  # Actuation limits
from limb_force.friction_cone import friction_cone_halfspaces  # Friction limits
from polytope_kernel.conversion import v_to_h, h_to_v  # Conversions
from polytope_kernel.intersection import intersect  # H-intersection
from utils.errors import InputError  # Error raised on inconsistent inputs


def friction_force_polytope(limb, contact, tol):
    """This function computes the bounded friction polytope of a limb:
    the forces it can produce that also respect friction.

    Args:
        limb (LimbModel): the limb, with a 3-row Jacobian
        contact (ContactSpec): its contact
        tol (Tolerance): tolerances

    Raises:
        InputError: if the limb is planar or the foot positions differ
        SingularConfigurationError: if the Jacobian is rank deficient

    Returns:
        polytope (VPolytope): vertex description; VPolytope.empty when the
            limb cannot push within friction
    """
    if limb.force_dim != 3:
        raise InputError("Error: the friction polytope of limb '" + limb.limb_id + "' needs a 3-row Jacobian.")
    if not np.array_equal(limb.foot_position, contact.foot_position):
        raise InputError("Error: limb '" + limb.limb_id + "' and its contact disagree on the foot position.")
    forces = v_to_h(force_polytope(limb, tol), tol)
    cone = friction_cone_halfspaces(contact, tol)
    return h_to_v(intersect(forces, cone, tol), tol)
#.................................................
#   Possible improvements:
#   None.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
