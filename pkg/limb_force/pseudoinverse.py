"""
@file pseudoinverse.py

@brief Pseudoinverse of the transposed contact Jacobian.

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
#   PSEUDOINVERSE.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   J^{T#} = (J J^T)^-1 J maps joint torques to contact
#   forces. It needs J to have full row rank: the
#   smallest singular value must exceed
#   eps_rank * max(1, largest singular value).
#.................................................
import numpy as np  # Module for numerical operations
from utils.errors import SingularConfigurationError  # Error raised on singular limbs


def transpose_pseudoinverse(J, tol, limb_id=None):
    """This function computes the pseudoinverse of the transposed Jacobian.

    Args:
        J (array): m x n contact Jacobian, m <= n
        tol (Tolerance): tolerances
        limb_id (string, optional): label used in the error message

    Raises:
        SingularConfigurationError: if J is rank deficient

    Returns:
        J_pinv (array): m x n matrix with J_pinv @ J.T = I
    """
    J = np.asarray(J, dtype=float)
    m, n = J.shape
    label = "unnamed" if limb_id is None else limb_id
    if m > n:
        raise SingularConfigurationError(label, "a Jacobian with " + str(m) + " rows and "
                                         + str(n) + " columns cannot have full row rank.")
    singular_values = np.linalg.svd(J, compute_uv=False)
    if singular_values[-1] <= tol.eps_rank * max(1.0, singular_values[0]):
        rank = int(np.sum(singular_values > tol.eps_rank * max(1.0, singular_values[0])))
        raise SingularConfigurationError(label, "the Jacobian has rank " + str(rank) + " instead of " + str(m) + ".")
    return np.linalg.solve(J @ J.T, J)
#.................................................
#   Possible improvements:
#   - Damped least squares near singularities.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
