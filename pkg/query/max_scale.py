"""
@file max_scale.py

@brief Largest step along a direction that stays in a wrench polytope.

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
#   MAX_SCALE.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   Ratio test: s = min over rows with a.d > 0 of
#   (b - a.w0) / (a.d). No such row means the ray stays
#   inside and s = inf (cones only). A direction leaving
#   an equality gives s = 0.
#.................................................
import math  # Infinity as a float
import numpy as np  # Module for numerical operations
from polytope_kernel.halfspaces import split_equalities  # Equality pairs
from query.check_wrench import wrench_vector  # Query vectors
from utils.errors import InputError, PreconditionError  # Query errors


def max_scale(fwp, w0, d, tol):
    """This function finds sup{s >= 0 : w0 + s d in fwp}.

    Args:
        fwp (HPolytope): the feasible set
        w0 (Wrench or array): starting wrench, inside the set
        d (Wrench or array): nonzero direction, used as given
        tol (Tolerance): tolerances

    Raises:
        InputError: on a zero direction, a dimension mismatch or an empty set
        PreconditionError: if w0 is outside the set

    Returns:
        s (float): the largest step, math.inf if the ray never leaves
    """
    w0 = wrench_vector(w0, fwp.dim)
    d = wrench_vector(d, fwp.dim)
    if not np.any(d):
        raise InputError("Error: max_scale needs a nonzero direction.")
    if fwp.is_empty:
        raise InputError("Error: max_scale queried against an empty polytope.")
    A_in, b_in, A_eq, b_eq, inequality_index = split_equalities(fwp, tol)
    excess = A_in @ w0 - b_in
    if excess.shape[0] and np.max(excess) > tol.eps_contain:
        worst = int(np.argmax(excess))
        raise PreconditionError(int(inequality_index[worst]), float(excess[worst]))
    residual = np.abs(A_eq @ w0 - b_eq)
    if residual.shape[0] and np.max(residual) > tol.eps_contain:
        worst = int(np.argmax(residual))
        row = int(np.nonzero(np.all(fwp.normals == A_eq[worst], axis=1))[0][0])
        raise PreconditionError(row, float(residual[worst]))
    d_norm = np.linalg.norm(d)
    if A_eq.shape[0] and np.max(np.abs(A_eq @ d)) > tol.eps_rank * d_norm:
        return 0.0
    rate = A_in @ d
    leaving = rate > tol.eps_rank * d_norm
    if not np.any(leaving):
        return math.inf
    steps = np.maximum(b_in[leaving] - A_in[leaving] @ w0, 0.0) / rate[leaving]
    return float(np.min(steps))
#.................................................
#   Possible improvements:
#   None.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
