"""
@file lp_solve.py

@brief Thin wrapper around the HiGHS linear programming solver.

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
#   LP_SOLVE.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   This module is needed to solve every linear program
#   of the kernel with the same solver and the same
#   status handling.
#.................................................
import numpy as np  # Module for numerical operations
from scipy.optimize import linprog  # HiGHS linear programming
from utils.errors import DegenerateGeometryError  # Error raised on numerical failure


def _rows_or_none(A, b):
    """Returns (A, b), or (None, None) if there are no rows."""
    if A is None:
        return None, None
    A = np.asarray(A, dtype=float)
    if A.shape[0] == 0:
        return None, None
    return A, np.asarray(b, dtype=float).reshape(-1)


def solve_lp(c, A_ub=None, b_ub=None, A_eq=None, b_eq=None, bounds=None):
    """Minimizes c.x subject to A_ub x <= b_ub and A_eq x = b_eq.

    Args:
        c (array): cost vector
        A_ub (array, optional): inequality matrix
        b_ub (array, optional): inequality right-hand side
        A_eq (array, optional): equality matrix
        b_eq (array, optional): equality right-hand side
        bounds (list, optional): variable bounds, free variables by default

    Raises:
        DegenerateGeometryError: if the solver fails for numerical reasons

    Returns:
        status (string): "optimal", "infeasible" or "unbounded"
        x (array or None): the minimizer
        value (float or None): the minimum
    """
    c = np.asarray(c, dtype=float)
    if bounds is None:
        bounds = [(None, None)] * c.shape[0]  # linprog assumes x >= 0 otherwise
    A_ub, b_ub = _rows_or_none(A_ub, b_ub)
    A_eq, b_eq = _rows_or_none(A_eq, b_eq)
    try:
        result = linprog(c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq, bounds=bounds, method="highs")
    except Exception as e:
        raise DegenerateGeometryError("Error detected in lp_solve.py, the linear program cannot be solved: " + str(e))
    match result.status:
        case 0:
            return "optimal", result.x, float(result.fun)
        case 2:
            return "infeasible", None, None
        case 3:
            return "unbounded", None, None
        case _ if "unbounded or infeasible" in str(result.message).lower() or \
                  "infeasible or unbounded" in str(result.message).lower():
            # HiGHS may not tell the two apart: a zero-cost run settles it
            if not np.any(c):
                return "infeasible", None, None
            status, _, _ = solve_lp(np.zeros_like(c), A_ub, b_ub, A_eq, b_eq, bounds)
            return ("unbounded" if status == "optimal" else "infeasible"), None, None
        case _:
            raise DegenerateGeometryError("Error detected in lp_solve.py, the linear program cannot be solved: "
                                          + str(result.message))
#.................................................
#   Possible improvements:
#   - Warm starts across the many small LPs of the redundancy test.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
