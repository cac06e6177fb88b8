"""
@file fwp_margin.py

@brief Chebyshev margin of a feasible wrench polytope.

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
#   FWP_MARGIN.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
import numpy as np  # Module for numerical operations
from polytope_kernel.chebyshev import chebyshev_center  # Inscribed balls
from query.check_wrench import scale_vector  # Characteristic scales
from utils.classes import HPolytope, Wrench, MarginResult, Tolerance  # Query types


def fwp_margin(fwp, tol=None, scale=None):
    """This function finds the wrench with maximal uniform slack and its radius.

    Args:
        fwp (HPolytope): the feasible set
        tol (Tolerance, optional): tolerances
        scale (array, optional): characteristic scale of each coordinate

    Returns:
        result (MarginResult): "optimal" with the center and the radius,
            "empty", or "unbounded" with an infinite radius
    """
    tol = Tolerance() if tol is None else tol
    scale = scale_vector(scale, fwp.dim)
    if fwp.is_empty:
        return MarginResult("empty")
    scaled = HPolytope(fwp.dim, fwp.normals * scale[None, :], fwp.offsets)
    result = chebyshev_center(scaled, tol)
    match result.status:
        case "empty":
            return MarginResult("empty")
        case "unbounded":
            return MarginResult("unbounded", None, np.inf)
    center = result.center * scale
    wrench = Wrench.from_vector(center) if fwp.dim == 6 else center
    return MarginResult("optimal", wrench, float(result.radius))
#.................................................
#   Possible improvements:
#   None.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
