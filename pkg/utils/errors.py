"""
@file errors.py

@brief Exception classes raised by the wrench polytope library.

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
#   ERRORS.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   This module contains the exceptions of the program.
#   Empty polytopes are NOT errors: they are returned
#   as values by the kernel.
#   - WrenchPolyError: base class
#   - InputError: bad dimensions, directions, values
#   - DegenerateGeometryError: numerical failure
#   - SingularConfigurationError: rank-deficient Jacobian
#   - SnapshotLoadError: invalid snapshot file
#   - PreconditionError: query point outside the set
#.................................................

class WrenchPolyError(Exception):
    """Base class of every error raised by the program."""


class InputError(WrenchPolyError, ValueError):
    """Invalid input: dimension mismatch, zero direction, bad tolerance."""


class DegenerateGeometryError(WrenchPolyError):
    """A hull, conversion or LP failed numerically."""


class SingularConfigurationError(WrenchPolyError):
    """The Jacobian of a limb is rank deficient.

    Args:
        limb_id (string): label of the offending limb
        message (string): error description
    """
    def __init__(self, limb_id, message):
        self.limb_id = limb_id  # Label of the singular limb
        super().__init__("Error: limb '" + str(limb_id) + "' is in a singular configuration: " + message)


class SnapshotLoadError(InputError):
    """The snapshot file cannot be turned into a valid robot.

    Args:
        field_path (string): path of the offending field, e.g. limbs[0].tau_min
        message (string): error description
        line (int, optional): line of the JSON syntax error, if any
    """
    def __init__(self, field_path, message, line=None):
        self.field_path = field_path  # Path of the offending field
        self.line = line  # Line number of a syntax error
        text = "Error: invalid snapshot at " + (str(field_path) or "<root>") + ": " + message
        if line is not None:
            text += " (line " + str(line) + ")"
        super().__init__(text)


class PreconditionError(InputError):
    """A query was called with a starting point outside the set.

    Args:
        facet_index (int): index of the most violated halfspace
        violation (float): amount of the violation
    """
    def __init__(self, facet_index, violation):
        self.facet_index = facet_index  # Most violated halfspace
        self.violation = violation  # Violation of that halfspace
        super().__init__("Error: the starting wrench violates halfspace " + str(facet_index)
                         + " by " + repr(float(violation)) + ".")


def tag_limb(error, limb_id):
    """Prefixes the message of an exception with the limb it comes from,
    keeping its class. Singularity errors already name their limb."""
    if not isinstance(error, SingularConfigurationError):
        error.args = ("limb '" + str(limb_id) + "': " + str(error),) + tuple(error.args[1:])
    return error
#.................................................
#   Possible improvements:
#   None.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
