"""
@file write_output.py

@brief Console and file output of the command line interface.

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
#   WRITE_OUTPUT.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   This module is needed to write the outputs:
#   - the benchmark table, as CSV
#   - the query results, as one JSON line on stdout
#   - the warnings collected while building
#.................................................
import json  # JSON output
from IO_operations.polytope_file import write_polytope_file  # Polytope files
from utils.classes import ProgramConstants  # Constants


def write_bench_csv(table, path):
    """This function writes the benchmark table.

    Args:
        table (DataFrame): the timings, see run_benchmark
        path (string): CSV file name
    """
    CSV_COLUMNS = ProgramConstants().Bench.CSV_COLUMNS
    table.to_csv(path, columns=CSV_COLUMNS, index=False)


def print_json_line(payload):
    """Prints a dict as a single JSON line."""
    print(json.dumps(payload, allow_nan=False))


def print_warnings(warnings):
    for warning in warnings:
        print("Warning: " + warning + ".")


def write_compute_output(path, result, rep, source, tol):
    """This function writes the polytope computed by the compute command.

    Args:
        path (string): output file name
        result (FwpResult): descriptions and statistics
        rep (string): "v", "h" or "both"
        source (string): "<set>:<snapshot name>"
        tol (Tolerance): tolerances used
    """
    meta = {"source": source, "tolerance": tol.to_dict(), "stats": result.stats}
    vpolytope = result.vpolytope if rep in ("v", "both") else None
    hpolytope = result.hpolytope if rep in ("h", "both") else None
    write_polytope_file(path, vpolytope, hpolytope, meta)
#.................................................
#   Possible improvements:
#   None.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
