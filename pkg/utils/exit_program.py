"""
@file exit_program.py

@brief Termination of the program with its exit code.

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
#   EXIT_PROGRAM.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   Exit codes: 0 success, 1 error, 2 empty set,
#   3 infeasible query.
#.................................................
import sys
from utils.classes import ProgramConstants  # Exit codes


def exit_program(code=None, message=None):
    """This function is used to end the program.

    Args:
        code (int, optional): exit code, ERROR by default
        message (string, optional): printed on stderr before exiting
    """
    ERROR = ProgramConstants().ExitCodes.ERROR
    code = ERROR if code is None else code
    if message is not None:
        print(message, file=sys.stderr)
    if code == ERROR:
        print("The program has been stopped. Please see the previous errors for more information.", file=sys.stderr)
    sys.exit(code)
#.................................................
#   Possible improvements:
#   None.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
