"""
@file fwp.py

@brief Feasible wrench polytope of a stance.

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
#   FWP.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   Two constructions of the feasible wrench polytope:
#   - fwp_intersection: AWP intersected with the CWC,
#     the default
#   - fwp_per_foot: Minkowski sum of the lifted friction
#     polytopes, where each foot satisfies its torque and
#     friction limits at once; always a subset of the
#     first one
#.................................................
import time  # Wall-clock timing of the build
from limb_force.friction_polytope import friction_force_polytope  # Per-foot bounded friction polytopes
from polytope_kernel.conversion import v_to_h, h_to_v  # Conversions
from polytope_kernel.convex_hull import convex_hull  # Canonical hulls
from polytope_kernel.intersection import intersect  # H-intersection
from polytope_kernel.minkowski import minkowski_fold  # Minkowski sums
from wrench_assembly.awp import awp  # Actuation wrench polytope
from wrench_assembly.cwc import cwc  # Contact wrench cone
from wrench_assembly.lift import lift_points  # Force to wrench
from utils.classes import VPolytope, FwpResult  # Descriptions and results
from utils.errors import WrenchPolyError, tag_limb  # Errors naming the limb


def _stats(hpolytope, vpolytope, start):
    n_facets = 0 if hpolytope is None or hpolytope.is_empty else hpolytope.n_facets
    return {"n_vertices": vpolytope.n_vertices, "n_facets": n_facets,
            "build_ms": 1000.0 * (time.perf_counter() - start)}


def fwp_intersection(robot, tol, method=None):
    """This function computes the feasible wrench polytope as the
    intersection of the actuation polytope and the contact wrench cone.

    Args:
        robot (RobotSnapshot): the stance
        tol (Tolerance): tolerances
        method (string, optional): redundancy removal method of the intersection

    Raises:
        SingularConfigurationError: if a limb is singular

    Returns:
        result (FwpResult): both descriptions, possibly empty, with statistics
    """
    start = time.perf_counter()
    actuation = v_to_h(awp(robot, tol), tol)
    contact, _ = cwc(robot, tol)
    hpolytope = intersect(actuation, contact, tol, method)
    vpolytope = h_to_v(hpolytope, tol)
    warnings = ["the feasible wrench polytope is empty"] if vpolytope.is_empty else []
    return FwpResult(hpolytope, vpolytope, _stats(hpolytope, vpolytope, start), warnings)


def fwp_per_foot(robot, tol, with_halfspaces=False):
    """This function computes the feasible wrench polytope in which every
    foot force satisfies its own actuation and friction limits.
    Limbs whose friction polytope is empty do not contribute.

    Args:
        robot (RobotSnapshot): the stance
        tol (Tolerance): tolerances
        with_halfspaces (bool, optional): also convert the result to halfspaces

    Raises:
        SingularConfigurationError: if a limb is singular

    Returns:
        result (FwpResult): vertex description, and halfspaces on request (None otherwise)
    """
    start = time.perf_counter()
    parts = []
    warnings = []
    for k, (limb, contact) in enumerate(zip(robot.limbs, robot.contacts)):
        try:
            forces = friction_force_polytope(limb, contact, tol)
        except WrenchPolyError as e:
            raise tag_limb(e, limb.limb_id)
        if forces.is_empty:
            warnings.append("limb '" + limb.limb_id + "' cannot push within friction and is skipped")
            continue
        parts.append(convex_hull(lift_points(forces.vertices, robot.relative_foot(k)), tol))
    vpolytope = minkowski_fold(parts, tol) if parts else VPolytope.empty(6)
    if vpolytope.is_empty:
        warnings.append("the feasible wrench polytope is empty")
    hpolytope = v_to_h(vpolytope, tol) if with_halfspaces else None
    return FwpResult(hpolytope, vpolytope, _stats(hpolytope, vpolytope, start), warnings)
#.................................................
#   Possible improvements:
#   None.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
