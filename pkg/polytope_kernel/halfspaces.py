"""
@file halfspaces.py

@brief Canonical form of halfspace lists and equality-pair detection.

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
#   HALFSPACES.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   Canonical halfspace lists: unit normals, no two
#   rows with the same normal (the tighter offset
#   wins), rows sorted lexicographically by rounded
#   (normal, offset). A zero row 0.x <= b is dropped
#   when b >= 0 and makes the whole set empty otherwise.
#   Equalities are opposite pairs of rows.
#.................................................
import numpy as np  # Module for numerical operations
from scipy.spatial import cKDTree  # Neighbour search
from polytope_kernel.convex_hull import canonical_order  # Canonical row ordering
from utils.classes import HPolytope  # Halfspace description
from utils.errors import InputError  # Error raised on invalid input


def canonical_halfspaces(dim, normals, offsets, tol):
    """This function builds a canonical HPolytope from raw rows.

    Args:
        dim (int): ambient dimension
        normals (array): normals, one per row
        offsets (array): offsets
        tol (Tolerance): tolerances

    Raises:
        InputError: if the normals do not have dimension dim

    Returns:
        polytope (HPolytope): canonical halfspace description
    """
    A = np.asarray(normals, dtype=float).reshape(-1, dim) if np.size(normals) else np.zeros((0, dim))
    b = np.asarray(offsets, dtype=float).reshape(-1)
    if A.shape[0] != b.shape[0]:
        raise InputError("Error: the number of normals and offsets differ.")
    norms = np.linalg.norm(A, axis=1)
    zero = norms <= tol.eps_rank
    if np.any(b[zero] < -tol.eps_contain):
        return HPolytope.empty(dim)
    A = A[~zero] / norms[~zero][:, None]
    b = b[~zero] / norms[~zero]
    if A.shape[0] == 0:
        return HPolytope(dim, A, b)
    # Same normal twice: the larger offset is redundant
    order = np.lexsort([b] + [A[:, j] for j in reversed(range(dim))])
    A = A[order]
    b = b[order]
    pairs = cKDTree(A).query_pairs(r=tol.eps_canon, p=np.inf, output_type="ndarray")
    if pairs.shape[0] > 0:
        keep = np.ones(A.shape[0], dtype=bool)
        for i, j in pairs:
            keep[j if b[j] > b[i] or (b[j] == b[i] and j > i) else i] = False
        A = A[keep]
        b = b[keep]
    order = canonical_order(np.column_stack([A, b]), tol)
    return HPolytope(dim, A[order], b[order])
#.................................................

def find_equality_pairs(normals, offsets, tol):
    """This function finds the rows (a, b) whose opposite (-a, -b) is also a row.

    Args:
        normals (array): unit normals
        offsets (array): offsets
        tol (Tolerance): tolerances

    Returns:
        pairs (array): k x 2 row indices, i < j, each row in at most one pair
    """
    normals = np.asarray(normals, dtype=float)
    offsets = np.asarray(offsets, dtype=float)
    if normals.shape[0] < 2:
        return np.zeros((0, 2), dtype=int)
    rows = np.column_stack([normals, offsets])
    radius = tol.eps_canon * (1.0 + np.max(np.abs(offsets)))
    matches = cKDTree(rows).query_ball_point(-rows, r=radius, p=np.inf)
    used = np.zeros(rows.shape[0], dtype=bool)
    pairs = []
    for i, candidates in enumerate(matches):
        if used[i]:
            continue
        for j in sorted(candidates):
            if j > i and not used[j]:
                pairs.append((i, j))
                used[i] = used[j] = True
                break
    return np.array(pairs, dtype=int).reshape(-1, 2)


def split_equalities(polytope, tol):
    """This function splits the rows of an HPolytope into inequalities
    and one representative per equality pair.

    Args:
        polytope (HPolytope): halfspace description
        tol (Tolerance): tolerances

    Returns:
        A_in, b_in (arrays): inequality rows
        A_eq, b_eq (arrays): equality rows
        inequality_index (array): indices of the inequality rows in the polytope
    """
    pairs = polytope.equality_pairs(tol)
    in_pair = np.zeros(polytope.n_facets, dtype=bool)
    in_pair[pairs.reshape(-1)] = True
    inequality_index = np.nonzero(~in_pair)[0]
    A_eq = polytope.normals[pairs[:, 0]] if pairs.shape[0] else np.zeros((0, polytope.dim))
    b_eq = polytope.offsets[pairs[:, 0]] if pairs.shape[0] else np.zeros(0)
    return (polytope.normals[inequality_index], polytope.offsets[inequality_index],
            A_eq, b_eq, inequality_index)


def equality_rows(A_eq, b_eq):
    """Returns the pairs a.x <= b, -a.x <= -b of each equality row."""
    return np.vstack([A_eq, -A_eq]), np.concatenate([b_eq, -b_eq])
#.................................................
#   Possible improvements:
#   None.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
