"""
@file conversion.py

@brief Conversions between the vertex and the halfspace descriptions.

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
#   CONVERSION.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   V -> H: qhull facets inside the affine hull, plus
#   one equality pair per direction normal to it.
#   Cones use the facets of conv({0} U rays) that
#   pass through the origin.
#   H -> V: equalities are eliminated, implicit ones
#   are found by width LPs, and the vertices come from
#   qhull's halfspace intersection around a Chebyshev
#   interior point. Cones are cut by a hyperplane
#   positive on the whole cone; unbounded polyhedra
#   are homogenized into a cone with one more variable.
#.................................................
import numpy as np  # Module for numerical operations
from scipy.linalg import null_space, orth  # Orthonormal bases
from scipy.spatial import ConvexHull, HalfspaceIntersection  # Qhull wrappers
from polytope_kernel.lp_solve import solve_lp  # Linear programming
from polytope_kernel.affine_hull import (affine_hull_of_points, linear_span_of_rays, equality_subspace,
                                         restrict_to_subspace, affine_hull_of_halfspaces)  # Affine hulls
from polytope_kernel.convex_hull import convex_hull, hull_in_affine_span, canonical_rays  # Hulls
from polytope_kernel.halfspaces import canonical_halfspaces, split_equalities, equality_rows  # Canonical H
from polytope_kernel.chebyshev import chebyshev_lp  # Interior points
from utils.classes import VPolytope, HPolytope  # Descriptions
from utils.errors import InputError, DegenerateGeometryError  # Errors of the kernel


def v_to_h(polytope, tol):
    """This function converts a bounded polytope or a cone to its
    irredundant halfspace description.

    Args:
        polytope (VPolytope): vertex description
        tol (Tolerance): tolerances

    Raises:
        InputError: if the polytope is unbounded but not a cone
        DegenerateGeometryError: if qhull fails

    Returns:
        polytope (HPolytope): halfspace description, with equality pairs for flat sets
    """
    dim = polytope.dim
    if polytope.is_empty:
        return HPolytope.empty(dim)
    if not polytope.is_bounded:
        if polytope.n_vertices != 1 or np.any(polytope.vertices[0] != 0.0):
            raise InputError("Error: v_to_h accepts bounded polytopes and cones only.")
        return _cone_to_halfspaces(polytope.rays, dim, tol)
    span = hull_in_affine_span(polytope.vertices, tol)
    # Facets inside the affine hull, mapped back with y = basis^T (x - center)
    A = span.normals_y @ span.basis.T
    b = span.offsets_y + A @ span.center
    # Equalities of the affine hull
    A_eq = span.complement.T
    b_eq = A_eq @ span.center
    A_pairs, b_pairs = equality_rows(A_eq, b_eq)
    return canonical_halfspaces(dim, np.vstack([A, A_pairs]), np.concatenate([b, b_pairs]), tol)


def _cone_to_halfspaces(rays, dim, tol):
    """Halfspaces through the origin of the cone generated by rays."""
    rays = canonical_rays(rays, dim, tol)
    basis, complement, rank = linear_span_of_rays(rays, tol)
    A = np.zeros((0, dim))
    Y = rays @ basis
    if rank == 1:
        if np.all(Y[:, 0] > 0.0):
            A = -basis.T
        elif np.all(Y[:, 0] < 0.0):
            A = basis.T
    elif rank >= 2:
        try:
            hull = ConvexHull(np.vstack([np.zeros(rank), Y]))
        except Exception as e:
            raise DegenerateGeometryError("Error detected in conversion.py, the cone hull failed: " + str(e))
        through_origin = np.abs(hull.equations[:, -1]) <= tol.eps_hull
        A = hull.equations[through_origin, :-1] @ basis.T
    A_pairs, _ = equality_rows(complement.T, np.zeros(complement.shape[1]))
    A = np.vstack([A, A_pairs])
    return canonical_halfspaces(dim, A, np.zeros(A.shape[0]), tol)
#.................................................

def _affine_dim(vertices, rays, tol):
    """Dimension of the affine hull of vertices and vertices[0] + rays."""
    points = np.vstack([vertices, vertices[0] + rays])
    return affine_hull_of_points(points, tol)[3]


def is_bounded_system(A, tol):
    """This function checks that {x : A x <= b} is bounded (for any b
    making it nonempty), i.e. that A x <= 0 forces x = 0.

    Args:
        A (array): normals
        tol (Tolerance): tolerances

    Returns:
        bool: True if bounded
    """
    k = A.shape[1]
    if A.shape[0] == 0:
        return False
    bounds = [(-1.0, 1.0)] * k
    zeros = np.zeros(A.shape[0])
    for j in range(k):
        for sign in (1.0, -1.0):
            cost = np.zeros(k)
            cost[j] = -sign
            status, _, value = solve_lp(cost, A, zeros, bounds=bounds)
            if status == "optimal" and -value > tol.eps_contain:
                return False
    return True


def bounded_vertices(A, b, tol, reduce_flat=True):
    """This function enumerates the vertices of the bounded set {x : A x <= b}.

    Args:
        A (array): normals
        b (array): offsets
        tol (Tolerance): tolerances
        reduce_flat (bool, optional): detect implicit equalities first

    Raises:
        DegenerateGeometryError: if qhull fails or the set is unbounded

    Returns:
        vertices (array or None): vertices, with repetitions; None if empty
    """
    k = A.shape[1]
    status, center, radius = chebyshev_lp(A, b)
    if status == "empty":
        return None
    if status == "unbounded":
        raise DegenerateGeometryError("Error detected in conversion.py, the set is not bounded.")
    if radius <= tol.eps_contain and reduce_flat:
        origin, basis = affine_hull_of_halfspaces(A, b, center, tol)
        if basis.shape[1] == 0:
            return origin[None, :]
        A_r, b_r, feasible, _ = restrict_to_subspace(A, b, origin, basis, tol)
        inner = bounded_vertices(A_r, b_r, tol, reduce_flat=False) if feasible else None
        if inner is None:
            return origin[None, :]
        return origin + inner @ basis.T
    if k == 1:
        a = A[:, 0]
        upper = np.min(b[a > 0.0] / a[a > 0.0])
        lower = np.max(b[a < 0.0] / a[a < 0.0])
        return np.array([[lower], [upper]])
    try:
        intersection = HalfspaceIntersection(np.column_stack([A, -b]), center)
    except Exception as e:
        raise DegenerateGeometryError("Error detected in conversion.py, the halfspace intersection failed: " + str(e))
    return intersection.intersections
#.................................................

def cone_generators(A_in, A_eq, dim, tol):
    """This function finds the extreme rays of the cone
    {x : A_in x <= 0, A_eq x = 0}; lineality directions are returned
    as opposite pairs of rays.

    Args:
        A_in (array): inequality normals
        A_eq (array): equality normals
        dim (int): ambient dimension
        tol (Tolerance): tolerances

    Returns:
        rays (array): unit rays, canonical
    """
    _, N = equality_subspace(A_eq, np.zeros(A_eq.shape[0]), dim, tol)
    if N.shape[1] == 0:
        return np.zeros((0, dim))
    B = A_in @ N
    B = B[np.linalg.norm(B, axis=1) > tol.eps_rank]
    if B.shape[0] == 0:
        return canonical_rays(np.vstack([N.T, -N.T]), dim, tol)
    row_basis = orth(B.T)  # The cone is pointed in these coordinates
    lineality = null_space(B)
    rays_z = [lineality.T, -lineality.T]
    C = B @ row_basis
    # c is positive on the pointed part, so {C y <= 0, c.y <= 1} is bounded
    c = -np.sum(C / np.linalg.norm(C, axis=1)[:, None], axis=0)
    section = bounded_vertices(np.vstack([C, c]), np.concatenate([np.zeros(C.shape[0]), [1.0]]), tol)
    if section is not None:
        tips = section[np.linalg.norm(section, axis=1) > tol.eps_contain]
        rays_z.append(tips @ row_basis.T)
    rays_z = np.vstack(rays_z)
    return canonical_rays(rays_z @ N.T, dim, tol)


def _homogenized_vertices(A_in, b_in, A_eq, b_eq, dim, tol):
    """Vertices and rays of an unbounded polyhedron through the cone
    {(x, t) : A x - b t <= 0, t >= 0}."""
    A_h = np.vstack([np.column_stack([A_in, -b_in]), np.append(np.zeros(dim), -1.0)])
    A_eq_h = np.column_stack([A_eq, -b_eq]) if A_eq.shape[0] else np.zeros((0, dim + 1))
    generators = cone_generators(A_h, A_eq_h, dim + 1, tol)
    t = generators[:, -1]
    finite = t > tol.eps_rank
    if not np.any(finite):
        return VPolytope.empty(dim)
    points = generators[finite, :-1] / t[finite][:, None]
    rays = canonical_rays(generators[~finite, :-1], dim, tol)
    hull = convex_hull(points, tol)
    return VPolytope(dim, hull.vertices, rays, _affine_dim(hull.vertices, rays, tol))
#.................................................

def h_to_v(polytope, tol):
    """This function enumerates the extreme points (and extreme rays)
    of an HPolytope.

    Args:
        polytope (HPolytope): halfspace description
        tol (Tolerance): tolerances

    Raises:
        DegenerateGeometryError: if qhull fails

    Returns:
        polytope (VPolytope): vertex description; VPolytope.empty if infeasible
    """
    dim = polytope.dim
    if polytope.is_empty:
        return VPolytope.empty(dim)
    if polytope.n_facets == 0:
        return VPolytope(dim, np.zeros((1, dim)), np.vstack([np.eye(dim), -np.eye(dim)]), dim)
    A_in, b_in, A_eq, b_eq, _ = split_equalities(polytope, tol)
    if polytope.is_cone:
        rays = cone_generators(A_in, A_eq, dim, tol)
        origin = np.zeros((1, dim))
        affine_dim = _affine_dim(origin, rays, tol) if rays.shape[0] else 0
        return VPolytope(dim, origin, rays, affine_dim)
    subspace = equality_subspace(A_eq, b_eq, dim, tol)
    if subspace is None:
        return VPolytope.empty(dim)
    origin, basis = subspace
    A_z, b_z, feasible, _ = restrict_to_subspace(A_in, b_in, origin, basis, tol)
    if not feasible:
        return VPolytope.empty(dim)
    if basis.shape[1] == 0:
        return convex_hull(origin[None, :], tol)
    if not is_bounded_system(A_z, tol):
        return _homogenized_vertices(A_in, b_in, A_eq, b_eq, dim, tol)
    Z = bounded_vertices(A_z, b_z, tol)
    if Z is None:
        return VPolytope.empty(dim)
    return convex_hull(origin + Z @ basis.T, tol)
#.................................................
#   Possible improvements:
#   - Incremental double description for long chains of intersections.
#.................................................
#   KNOW PROBLEMS:
#   - Sets thinner than eps_contain in some direction are reported
#     flat in that direction.
#.................................................
