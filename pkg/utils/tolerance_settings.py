"""
@file tolerance_settings.py

@brief Tolerance overrides from the command line and the environment.

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
#   TOLERANCE_SETTINGS.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   eps_contain is read from --tol, else from the
#   WRENCHPOLY_TOL environment variable, else the
#   default is kept. The other tolerances are fixed.
#.................................................
import os
from utils.classes import ProgramConstants, Tolerance  # Constants and tolerances
from utils.errors import InputError  # Error raised on invalid values


def parse_tolerance(text, origin):
    """Positive float read from a string; origin names it in the error."""
    try:
        value = float(text)
    except (TypeError, ValueError):
        raise InputError("Error: the tolerance from " + origin + " must be a number, got '" + str(text) + "'.")
    if not value > 0.0 or value == float("inf"):
        raise InputError("Error: the tolerance from " + origin + " must be positive and finite.")
    return value


def get_tolerance(cli_tol=None, environ=None):
    """This function builds the tolerances of a run.

    Args:
        cli_tol (string or float, optional): value of --tol
        environ (dict, optional): environment, os.environ by default

    Raises:
        InputError: on a non-numeric or nonpositive value, or one below eps_hull

    Returns:
        tol (Tolerance): the tolerances
    """
    TOL_VARIABLE = ProgramConstants().Env.TOL_VARIABLE
    environ = os.environ if environ is None else environ
    if cli_tol is not None:
        return Tolerance(eps_contain=parse_tolerance(cli_tol, "--tol"))
    if environ.get(TOL_VARIABLE, "") != "":
        return Tolerance(eps_contain=parse_tolerance(environ[TOL_VARIABLE], TOL_VARIABLE))
    return Tolerance()
#.................................................
#   Possible improvements:
#   None.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
