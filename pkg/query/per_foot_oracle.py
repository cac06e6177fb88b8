"""
@file per_foot_oracle.py

@brief Per-foot decomposition of a wrench into feasible contact forces.

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
#   PER_FOOT_ORACLE.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   One LP over the joint torques of every limb:
#     f_k = J_k^{T#} (bias_k - tau_k),  tau_k in its box
#     C_k f_k <= 0                       (friction pyramid)
#     |sum_k L_k f_k - w| <= t           (L_k: lift at p_k)
#   minimizing t. The wrench has a per-foot decomposition
#   if t <= eps_contain. It does not build any polytope,
#   so it checks the polytopes built elsewhere.
#.................................................
import numpy as np  # Module for numerical operations
from scipy.linalg import block_diag  # Block-diagonal assembly
from limb_force.pseudoinverse import transpose_pseudoinverse  # J^{T#}
from limb_force.friction_cone import friction_cone_halfspaces  # Friction limits
from polytope_kernel.lp_solve import solve_lp  # Linear programming
from query.check_wrench import wrench_vector  # Query vectors
from wrench_assembly.lift import lift_matrix  # Force to wrench
from utils.classes import PerFootResult  # Query result
from utils.errors import DegenerateGeometryError, WrenchPolyError, tag_limb  # Errors


def per_foot_feasibility(robot, w, tol):
    """This function searches contact forces, one per limb, inside the
    torque and friction limits of their own limb, that sum to w.

    Args:
        robot (RobotSnapshot): the stance
        w (Wrench or array): 6D query wrench
        tol (Tolerance): tolerances

    Raises:
        SingularConfigurationError: if a limb is singular
        DegenerateGeometryError: if the LP fails

    Returns:
        result (PerFootResult): feasibility, best residual and the forces
    """
    w = wrench_vector(w, 6)
    maps = []  # tau_k -> f_k, linear part
    offsets = []  # tau_k -> f_k, constant part
    for limb in robot.limbs:
        try:
            J_pinv = transpose_pseudoinverse(limb.jacobian, tol, limb.limb_id)
        except WrenchPolyError as e:
            raise tag_limb(e, limb.limb_id)
        maps.append(-J_pinv)
        offsets.append(J_pinv @ limb.bias)
    n_tau = sum(limb.n_joints for limb in robot.limbs)
    F = block_diag(*maps)  # stacked forces = F tau + f0
    f0 = np.concatenate(offsets)
    L = np.hstack([lift_matrix(robot.relative_foot(k)) for k in range(len(robot.limbs))])
    C = block_diag(*[friction_cone_halfspaces(contact, tol).normals for contact in robot.contacts])
    G = L @ F
    g = w - L @ f0
    ones = np.ones((6, 1))
    # Variables: tau (n_tau), t
    A_ub = np.vstack([np.hstack([G, -ones]),
                      np.hstack([-G, -ones]),
                      np.hstack([C @ F, np.zeros((C.shape[0], 1))])])
    b_ub = np.concatenate([g, -g, -C @ f0])
    bounds = [(lo, hi) for limb in robot.limbs for lo, hi in zip(limb.tau_min, limb.tau_max)] + [(0.0, None)]
    cost = np.zeros(n_tau + 1)
    cost[-1] = 1.0
    status, solution, value = solve_lp(cost, A_ub, b_ub, bounds=bounds)
    if status == "infeasible":
        # No torque inside the boxes keeps every foot in its cone
        return PerFootResult(False, np.inf, None)
    if status != "optimal":
        raise DegenerateGeometryError("Error detected in per_foot_oracle.py, the decomposition LP is " + status + ".")
    forces = (F @ solution[:n_tau] + f0).reshape(-1, 3)
    return PerFootResult(value <= tol.eps_contain, value, [force for force in forces])
#.................................................
#   Possible improvements:
#   - Minimize joint torques among the feasible decompositions.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
