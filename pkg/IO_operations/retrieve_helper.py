"""
@file retrieve_helper.py

@brief Validation of the fields read from the input files and the command line.

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
#   RETRIEVE_HELPER.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   This module is needed to retrieve single fields
#   from parsed JSON documents and from command-line
#   strings. Every failure names the path of the field,
#   e.g. limbs[0].tau_min.
#.................................................
import numpy as np  # Module for numerical operations
from utils.errors import SnapshotLoadError, InputError  # Errors with field paths


def check_keys(document, path, required, optional=(), lax=False):
    """This function checks the keys of a JSON object.

    Args:
        document (dict): the object
        path (string): its path
        required (tuple): keys that must be present
        optional (tuple, optional): keys that may be present
        lax (bool, optional): ignore unknown keys

    Raises:
        SnapshotLoadError: on a missing or, in strict mode, an unknown key
    """
    if not isinstance(document, dict):
        raise SnapshotLoadError(path, "expected an object.")
    for key in required:
        if key not in document:
            raise SnapshotLoadError(join_path(path, key), "missing required field.")
    if not lax:
        for key in document:
            if key not in required and key not in optional:
                raise SnapshotLoadError(join_path(path, key), "unknown field (use --lax to ignore it).")


def join_path(path, key):
    return key if path == "" else path + "." + key


def retrieve_number(value, path):
    """Finite float; booleans are rejected."""
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SnapshotLoadError(path, "expected a number.")
    value = float(value)
    if not np.isfinite(value):
        raise SnapshotLoadError(path, "expected a finite number.")
    return value


def retrieve_vector(value, path, length=None):
    """This function retrieves a list of numbers.

    Args:
        value (any): parsed JSON value
        path (string): path of the field
        length (int, optional): required length

    Raises:
        SnapshotLoadError: if the value is not a list of finite numbers of the right length

    Returns:
        vector (array): the numbers
    """
    if not isinstance(value, list):
        raise SnapshotLoadError(path, "expected a list of numbers.")
    vector = np.array([retrieve_number(item, path + "[" + str(i) + "]") for i, item in enumerate(value)], dtype=float)
    if length is not None and vector.shape[0] != length:
        raise SnapshotLoadError(path, "expected " + str(length) + " entries, got " + str(vector.shape[0]) + ".")
    return vector


def retrieve_matrix(value, path, n_rows=None):
    """This function retrieves a row-major matrix.

    Args:
        value (any): parsed JSON value, a list of rows
        path (string): path of the field
        n_rows (int, optional): required number of rows

    Raises:
        SnapshotLoadError: if the rows are not lists of equal length

    Returns:
        matrix (array): the matrix
    """
    if not isinstance(value, list) or len(value) == 0:
        raise SnapshotLoadError(path, "expected a nonempty list of rows.")
    rows = [retrieve_vector(row, path + "[" + str(i) + "]") for i, row in enumerate(value)]
    if len({row.shape[0] for row in rows}) != 1 or rows[0].shape[0] == 0:
        raise SnapshotLoadError(path, "rows must be nonempty and of equal length.")
    if n_rows is not None and len(rows) != n_rows:
        raise SnapshotLoadError(path, "expected " + str(n_rows) + " rows, got " + str(len(rows)) + ".")
    return np.vstack(rows)


def retrieve_positive_int(value, path):
    if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
        raise SnapshotLoadError(path, "expected a positive integer.")
    return value


def retrieve_string(value, path):
    if not isinstance(value, str) or value == "":
        raise SnapshotLoadError(path, "expected a nonempty string.")
    return value
#.................................................

def parse_number_list(text, name, length=None):
    """This function parses a comma-separated command-line list of numbers.

    Args:
        text (string): e.g. "0,0,2,0,0,0"
        name (string): option name for the error message
        length (int, optional): required length

    Raises:
        InputError: on a non-numeric entry or a wrong length

    Returns:
        values (array): the numbers
    """
    try:
        values = np.array([float(item) for item in text.split(",")], dtype=float)
    except ValueError:
        raise InputError("Error: " + name + " must be a comma-separated list of numbers, got '" + text + "'.")
    if not np.all(np.isfinite(values)):
        raise InputError("Error: " + name + " must contain finite numbers.")
    if length is not None and values.shape[0] != length:
        raise InputError("Error: " + name + " needs " + str(length) + " values, got " + str(values.shape[0]) + ".")
    return values


def parse_dims(text, dim):
    """This function parses the coordinates kept by a projection.

    Args:
        text (string): e.g. "0,2,4"
        dim (int): dimension of the projected polytope

    Raises:
        InputError: on repeated, out-of-range or non-integer indices

    Returns:
        dims (list): the indices, in the given order
    """
    try:
        dims = [int(item) for item in text.split(",")]
    except ValueError:
        raise InputError("Error: --dims must be a comma-separated list of integers, got '" + text + "'.")
    if len(dims) == 0 or len(dims) > dim or len(set(dims)) != len(dims):
        raise InputError("Error: --dims must list distinct indices, at most " + str(dim) + ".")
    if min(dims) < 0 or max(dims) >= dim:
        raise InputError("Error: --dims indices must lie in [0, " + str(dim - 1) + "].")
    return dims
#.................................................
#   Possible improvements:
#   None.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
