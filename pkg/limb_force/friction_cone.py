"""
@file friction_cone.py

@brief Linearized Coulomb friction cones.

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
#   FRICTION_CONE.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   The pyramid has k edges n + mu (cos t_j t1 + sin t_j t2),
#   t_j = 2 pi j / k, so it is inscribed in the Coulomb cone.
#   Facet j holds edges j and j+1; its outward normal is
#   cos p_j t1 + sin p_j t2 - mu cos(pi / k) n with p_j the
#   mid angle t_j + pi / k. Forces act on the robot, so
#   unilaterality reads f.n >= 0 and follows from the
#   facets.
#.................................................
import numpy as np  # Module for numerical operations
from polytope_kernel.halfspaces import canonical_halfspaces  # Canonical H
from utils.classes import ProgramConstants, Tolerance  # Constants and tolerances


def tangent_frame(normal):
    """This function builds the right-handed frame (t1, t2, n) of a contact.
    t1 is normal x z, or normal x x when the normal is almost vertical.

    Args:
        normal (array): unit normal

    Returns:
        t1 (array): first tangent
        t2 (array): second tangent
        n (array): normal
    """
    FRAME_SWITCH = ProgramConstants().Friction.FRAME_SWITCH
    n = np.asarray(normal, dtype=float)
    n = n / np.linalg.norm(n)
    helper = np.array([1.0, 0.0, 0.0]) if abs(n[2]) > FRAME_SWITCH else np.array([0.0, 0.0, 1.0])
    t1 = np.cross(n, helper)
    t1 = t1 / np.linalg.norm(t1)
    t2 = np.cross(n, t1)
    return t1, t2, n


def edge_angles(num_edges):
    return 2.0 * np.pi * np.arange(num_edges) / num_edges


def friction_cone_rays(contact):
    """This function computes the unit edges of the friction pyramid.

    Args:
        contact (ContactSpec): the contact

    Returns:
        rays (array): k x 3 unit rays, edge j at angle 2 pi j / k
    """
    t1, t2, n = tangent_frame(contact.normal)
    angles = edge_angles(contact.num_edges)
    tangential = np.cos(angles)[:, None] * t1[None, :] + np.sin(angles)[:, None] * t2[None, :]
    rays = n[None, :] + contact.mu * tangential
    return rays / np.linalg.norm(rays, axis=1)[:, None]


def friction_cone_halfspaces(contact, tol=None):
    """This function computes the k homogeneous halfspaces of the friction pyramid.

    Args:
        contact (ContactSpec): the contact
        tol (Tolerance, optional): tolerances

    Returns:
        cone (HPolytope): canonical cone, offsets zero
    """
    tol = Tolerance() if tol is None else tol
    t1, t2, n = tangent_frame(contact.normal)
    k = contact.num_edges
    middle = edge_angles(k) + np.pi / k
    normals = (np.cos(middle)[:, None] * t1[None, :] + np.sin(middle)[:, None] * t2[None, :]
               - contact.mu * np.cos(np.pi / k) * n[None, :])
    return canonical_halfspaces(3, normals, np.zeros(k), tol)
#.................................................
#   Possible improvements:
#   - Circumscribed pyramids as an option for optimistic bounds.
#.................................................
#   KNOW PROBLEMS:
#   - For mu below eps_rank the facets are numerically
#     parallel to the normal plane and the cone is a thin
#     needle around n.
#.................................................
