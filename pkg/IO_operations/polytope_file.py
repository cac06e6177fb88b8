"""
@file polytope_file.py

@brief Reading and writing of polytope files.

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
#   POLYTOPE_FILE.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   File layout:
#   {dim, affine_dim, vertices, rays,
#    halfspaces: {normals, offsets},
#    meta: {source, tolerance, stats}}
#   Either description may be absent. Floats are written
#   with their shortest repr, so reading a written file
#   gives back the same bits and the same row order.
#.................................................
import json  # JSON parsing
from pathlib import Path  # File paths
from types import SimpleNamespace
import numpy as np  # Module for numerical operations
from utils.classes import VPolytope, HPolytope  # Descriptions
from utils.errors import InputError  # Error raised on invalid files


def polytope_document(vpolytope=None, hpolytope=None, meta=None):
    """This function builds the JSON document of a polytope.

    Args:
        vpolytope (VPolytope, optional): vertex description
        hpolytope (HPolytope, optional): halfspace description
        meta (dict, optional): source, tolerance and stats

    Raises:
        InputError: if both descriptions are missing or their dimensions differ

    Returns:
        document (dict): the document
    """
    if vpolytope is None and hpolytope is None:
        raise InputError("Error: a polytope file needs at least one description.")
    dims = {p.dim for p in (vpolytope, hpolytope) if p is not None}
    if len(dims) != 1:
        raise InputError("Error: the two descriptions of a polytope file have different dimensions.")
    document = {"dim": dims.pop()}
    if vpolytope is not None:
        document["affine_dim"] = vpolytope.affine_dim
        document["vertices"] = vpolytope.vertices.tolist()
        document["rays"] = vpolytope.rays.tolist()
    if hpolytope is not None:
        document["halfspaces"] = {"normals": hpolytope.normals.tolist(), "offsets": hpolytope.offsets.tolist()}
    document["meta"] = {} if meta is None else meta
    return document


def write_polytope_file(path, vpolytope=None, hpolytope=None, meta=None):
    """Writes a polytope file; see polytope_document for the arguments."""
    document = polytope_document(vpolytope, hpolytope, meta)
    Path(path).write_text(json.dumps(document, indent=1, allow_nan=False) + "\n")


def _rows(value, dim, field):
    if not isinstance(value, list):
        raise InputError("Error: field '" + field + "' of the polytope file must be a list.")
    try:
        rows = np.array(value, dtype=float).reshape(-1, dim)
    except (ValueError, TypeError):
        raise InputError("Error: field '" + field + "' of the polytope file must hold rows of " + str(dim) + " numbers.")
    if len(value) != rows.shape[0]:
        raise InputError("Error: field '" + field + "' of the polytope file must hold rows of " + str(dim) + " numbers.")
    return rows


def parse_polytope_document(document):
    """This function rebuilds the descriptions stored in a polytope document.

    Args:
        document (dict): the parsed JSON document

    Raises:
        InputError: on a missing or malformed field

    Returns:
        polytope (SimpleNamespace): dim, vpolytope (or None), hpolytope (or None), meta
    """
    if not isinstance(document, dict) or "dim" not in document:
        raise InputError("Error: the polytope file has no 'dim' field.")
    dim = document["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise InputError("Error: field 'dim' of the polytope file must be a positive integer.")
    vpolytope = None
    hpolytope = None
    if "vertices" in document:
        vertices = _rows(document["vertices"], dim, "vertices")
        rays = _rows(document.get("rays", []), dim, "rays")
        affine_dim = document.get("affine_dim")
        vpolytope = VPolytope(dim, vertices, rays, affine_dim)
    if "halfspaces" in document:
        halfspaces = document["halfspaces"]
        if not isinstance(halfspaces, dict) or "normals" not in halfspaces or "offsets" not in halfspaces:
            raise InputError("Error: field 'halfspaces' of the polytope file needs 'normals' and 'offsets'.")
        normals = _rows(halfspaces["normals"], dim, "halfspaces.normals")
        offsets = _rows(halfspaces["offsets"], 1, "halfspaces.offsets").reshape(-1)
        hpolytope = HPolytope(dim, normals, offsets)
    if vpolytope is None and hpolytope is None:
        raise InputError("Error: the polytope file has neither vertices nor halfspaces.")
    return SimpleNamespace(dim=dim, vpolytope=vpolytope, hpolytope=hpolytope, meta=document.get("meta", {}))


def read_polytope_file(path):
    """This function reads a polytope file.

    Args:
        path (string): path of the JSON file

    Raises:
        InputError: if the file cannot be read or is malformed

    Returns:
        polytope (SimpleNamespace): dim, vpolytope (or None), hpolytope (or None), meta
    """
    try:
        document = json.loads(Path(path).read_text())
    except OSError as e:
        raise InputError("Error: cannot read the polytope file: " + str(e))
    except json.JSONDecodeError as e:
        raise InputError("Error: the polytope file is not valid JSON: " + e.msg + " (line " + str(e.lineno) + ").")
    return parse_polytope_document(document)
#.................................................
#   Possible improvements:
#   None.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
