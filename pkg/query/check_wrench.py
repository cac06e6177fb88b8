"""
@file check_wrench.py

@brief Membership of a wrench in a feasible wrench polytope.

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
#   CHECK_WRENCH.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   Forces (N) and torques (N.m) are mixed unweighted
#   by default. An optional characteristic scale s
#   measures distances in w / s instead: a facet a.w <= b
#   becomes (a * s).w' <= b with w = s * w'.
#.................................................
import numpy as np  # Module for numerical operations
from polytope_kernel.halfspaces import split_equalities  # Equality pairs
from utils.classes import Wrench, FeasibilityResult  # Query types
from utils.errors import InputError  # Error raised on invalid queries


def wrench_vector(w, dim):
    """This function turns a query into a vector of the polytope dimension.

    Args:
        w (Wrench or array): the query; a Wrench is projected to
            (F_x, F_z, tau_y) against a 3D polytope
        dim (int): dimension of the polytope

    Raises:
        InputError: on a dimension mismatch

    Returns:
        w (array): the query vector
    """
    if isinstance(w, Wrench):
        w = w.as_vector() if dim == 6 else w.planar()
    w = np.asarray(w, dtype=float).reshape(-1)
    if w.shape[0] != dim:
        raise InputError("Error: wrench of dimension " + str(w.shape[0]) + " queried against a polytope of dimension " + str(dim) + ".")
    if not np.all(np.isfinite(w)):
        raise InputError("Error: wrench components must be finite.")
    return w


def scale_vector(scale, dim):
    """Characteristic scale of every coordinate, ones by default."""
    if scale is None:
        return np.ones(dim)
    scale = np.asarray(scale, dtype=float).reshape(-1)
    if scale.shape[0] != dim or not np.all(np.isfinite(scale)) or np.any(scale <= 0.0):
        raise InputError("Error: the characteristic scale needs " + str(dim) + " positive finite entries.")
    return scale


def check_wrench(fwp, w, tol, scale=None):
    """This function checks if a wrench is feasible and measures its margin.

    Args:
        fwp (HPolytope): the feasible set, dimension 6 or 3
        w (Wrench or array): the query
        tol (Tolerance): tolerances
        scale (array, optional): characteristic scale of each coordinate

    Raises:
        InputError: on a dimension mismatch or an invalid scale

    Returns:
        result (FeasibilityResult): feasibility, signed margin and binding facets
    """
    w = wrench_vector(w, fwp.dim)
    scale = scale_vector(scale, fwp.dim)
    if fwp.is_empty:
        return FeasibilityResult(False, -np.inf, [], np.inf)
    A_in, b_in, A_eq, b_eq, inequality_index = split_equalities(fwp, tol)
    slack = (b_in - A_in @ w) / np.linalg.norm(A_in * scale[None, :], axis=1)
    residual = np.abs(A_eq @ w - b_eq) / np.linalg.norm(A_eq * scale[None, :], axis=1)
    violation = max(0.0, float(np.max(-slack, initial=0.0)), float(np.max(residual, initial=0.0)))
    feasible = violation <= tol.eps_contain
    binding = list(inequality_index[np.abs(slack) <= tol.eps_contain])
    if feasible:
        # Equality rows are always active
        binding = sorted(binding + list(np.setdiff1d(np.arange(fwp.n_facets), inequality_index)))
        margin = max(0.0, float(np.min(slack, initial=np.inf)))
        return FeasibilityResult(True, margin, binding, 0.0)
    return FeasibilityResult(False, -violation, binding, violation)
#.................................................
#   Possible improvements:
#   None.
#.................................................
#   KNOW PROBLEMS:
#   - Points within eps_contain outside a facet are reported
#     feasible with margin 0.
#.................................................
