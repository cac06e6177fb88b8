"""
@file main.py

@brief Command line entry point: compute, check, margin, project and bench.

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
#       WrenchPoly Program
#       main.py: command line interface
#       Version 1.0.0, WrenchPoly developers
#.................................................
#   Usage: python -m main <command> [options]
#   - compute: build the AWP, CWC or FWP of a snapshot
#   - check: membership of a wrench in a polytope file
#   - margin: Chebyshev margin of a polytope file
#   - project: projection of a polytope file
#   - bench: timing of the representation pipelines
#   Exit codes: 0 success, 1 error, 2 empty set,
#   3 infeasible query.
#.................................................
# LIBRARY IMPORTS:
# Standard library imports:
import argparse  # Command line parsing
import sys
import time  # Standard library for time tracking operations
# Project file imports:
import utils.presentation as presentation_file  # Module to print the presentation of the program
from utils.classes import ProgramConstants, FwpResult  # Constants and results
from utils.exit_program import exit_program  # Module to end the program
from utils.tolerance_settings import get_tolerance  # Tolerance overrides
from IO_operations.read_snapshot import load_snapshot  # Snapshot files
from IO_operations.polytope_file import read_polytope_file, write_polytope_file  # Polytope files
from IO_operations.projection import project_polytope  # Projections
from IO_operations.benchmark import run_benchmark  # Pipelines timing
from IO_operations.retrieve_helper import parse_number_list, parse_dims  # Command line values
from IO_operations.write_output import (write_bench_csv, write_compute_output, print_json_line,
                                        print_warnings)  # Outputs
from polytope_kernel.conversion import v_to_h  # V -> H conversion
from wrench_assembly.awp import awp  # Actuation wrench polytope
from wrench_assembly.cwc import cwc  # Contact wrench cone
from wrench_assembly.fwp import fwp_intersection, fwp_per_foot  # Feasible wrench polytopes
from query.check_wrench import check_wrench  # Membership queries
from query.fwp_margin import fwp_margin  # Chebyshev margin
from utils.errors import InputError  # Error raised on invalid input
#.................................................
# PROGRAM CONSTANTS:
program_constants = ProgramConstants()  # Program constants object
EXIT_CODES = program_constants.ExitCodes
BENCH = program_constants.Bench
#.................................................

def build_parser():
    """This function creates the parser of the command line.

    Returns:
        parser (ArgumentParser): the parser
    """
    parser = argparse.ArgumentParser(prog="wrenchpoly", description="Wrench polytopes of multi-limbed robots.")
    commands = parser.add_subparsers(dest="command", required=True)
    # Options shared by every command
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", default=None, help="containment tolerance eps_contain (overrides WRENCHPOLY_TOL)")
    common.add_argument("--lax", action="store_true", help="ignore unknown keys in snapshot files")

    compute = commands.add_parser("compute", parents=[common], help="build a wrench polytope from a snapshot")
    compute.add_argument("--robot", required=True, help="snapshot file")
    compute.add_argument("--set", required=True, choices=["awp", "cwc", "fwp", "fwp-perfoot"], dest="set_name")
    compute.add_argument("--rep", default="both", choices=["v", "h", "both"])
    compute.add_argument("--out", required=True, help="polytope file to write")

    check = commands.add_parser("check", parents=[common], help="check a wrench against a polytope file")
    check.add_argument("--fwp", required=True, help="polytope file")
    check.add_argument("--wrench", required=True, help="comma-separated wrench, e.g. 0,0,2,0,0,0")
    check.add_argument("--scale", default=None, help="comma-separated characteristic scales")

    margin = commands.add_parser("margin", parents=[common], help="Chebyshev margin of a polytope file")
    margin.add_argument("--fwp", required=True, help="polytope file")
    margin.add_argument("--scale", default=None, help="comma-separated characteristic scales")

    project = commands.add_parser("project", parents=[common], help="project a polytope file")
    project.add_argument("--poly", required=True, help="polytope file with vertices")
    project.add_argument("--dims", required=True, help="comma-separated coordinates, e.g. 0,2,4")
    project.add_argument("--out", required=True, help="polytope file to write")

    bench = commands.add_parser("bench", parents=[common], help="time the representation pipelines")
    bench.add_argument("--robot", required=True, help="snapshot file")
    bench.add_argument("--pipeline", default="all", choices=list(BENCH.PIPELINES) + ["all"])
    bench.add_argument("--repeat", type=int, default=1)
    bench.add_argument("--queries", type=int, default=BENCH.N_QUERIES)
    bench.add_argument("--seed", type=int, default=BENCH.SEED)
    bench.add_argument("--out", required=True, help="CSV file to write")
    return parser
#.................................................

def compute_command(args, tol):
    """Builds the requested set and writes it; returns the exit code."""
    robot = load_snapshot(args.robot, args.lax, tol)
    print("Snapshot '" + robot.name + "' loaded: " + str(len(robot.limbs)) + " limbs.")
    print("Computing the " + args.set_name.upper() + "...")
    start = time.perf_counter()
    match args.set_name:
        case "awp":
            vpolytope = awp(robot, tol)
            hpolytope = v_to_h(vpolytope, tol) if args.rep != "v" else None
            result = FwpResult(hpolytope, vpolytope)
        case "cwc":
            hpolytope, generators = cwc(robot, tol)
            result = FwpResult(hpolytope, generators)
        case "fwp":
            result = fwp_intersection(robot, tol)
        case "fwp-perfoot":
            result = fwp_per_foot(robot, tol, with_halfspaces=args.rep != "v")
    result.stats = {"n_vertices": result.vpolytope.n_vertices,
                    "n_facets": 0 if result.hpolytope is None or result.hpolytope.is_empty else result.hpolytope.n_facets,
                    "build_ms": 1000.0 * (time.perf_counter() - start)}
    print("...done: " + str(result.stats["n_vertices"]) + " vertices, " + str(result.stats["n_facets"]) + " facets.")
    print_warnings(result.warnings)
    write_compute_output(args.out, result, args.rep, args.set_name + ":" + robot.name, tol)
    print("Output written to " + args.out + ".")
    if result.is_empty:
        print("The computed set is empty.")
        return EXIT_CODES.EMPTY
    return EXIT_CODES.SUCCESS


def _halfspaces_of_file(path, tol):
    polytope = read_polytope_file(path)
    if polytope.hpolytope is not None:
        return polytope.hpolytope
    return v_to_h(polytope.vpolytope, tol)


def check_command(args, tol):
    """Prints the feasibility of a wrench; returns the exit code."""
    hpolytope = _halfspaces_of_file(args.fwp, tol)
    wrench = parse_number_list(args.wrench, "--wrench")
    if wrench.shape[0] != hpolytope.dim:
        raise InputError("Error: the wrench has " + str(wrench.shape[0]) + " components but the polytope has dimension "
                         + str(hpolytope.dim) + ".")
    scale = None if args.scale is None else parse_number_list(args.scale, "--scale", hpolytope.dim)
    result = check_wrench(hpolytope, wrench, tol, scale)
    print_json_line(result.to_dict())
    return EXIT_CODES.SUCCESS if result.feasible else EXIT_CODES.INFEASIBLE


def margin_command(args, tol):
    """Prints the Chebyshev margin; returns the exit code."""
    hpolytope = _halfspaces_of_file(args.fwp, tol)
    scale = None if args.scale is None else parse_number_list(args.scale, "--scale", hpolytope.dim)
    result = fwp_margin(hpolytope, tol, scale)
    print_json_line(result.to_dict())
    return EXIT_CODES.EMPTY if result.is_empty else EXIT_CODES.SUCCESS


def project_command(args, tol):
    """Writes the projection of a polytope file; returns the exit code."""
    polytope = read_polytope_file(args.poly)
    if polytope.vpolytope is None:
        raise InputError("Error: " + args.poly + " has no vertices; compute it with --rep v or --rep both.")
    dims = parse_dims(args.dims, polytope.dim)
    print("Projecting on coordinates " + str(dims) + "...")
    projection = project_polytope(polytope.vpolytope, dims, tol)
    meta = {"source": "project:" + ",".join(str(i) for i in dims), "tolerance": tol.to_dict(),
            "stats": {"n_vertices": projection.n_vertices}}
    write_polytope_file(args.out, projection, None, meta)
    print("...done: " + str(projection.n_vertices) + " vertices written to " + args.out + ".")
    return EXIT_CODES.EMPTY if projection.is_empty else EXIT_CODES.SUCCESS


def bench_command(args, tol):
    """Runs the benchmark and writes the CSV; returns the exit code."""
    robot = load_snapshot(args.robot, args.lax, tol)
    pipelines = list(BENCH.PIPELINES) if args.pipeline == "all" else [args.pipeline]
    table, _ = run_benchmark(robot, tol, pipelines, args.repeat, args.queries, args.seed, verbose=True)
    write_bench_csv(table, args.out)
    print("Benchmark written to " + args.out + ": " + str(len(table)) + " rows.")
    return EXIT_CODES.SUCCESS
#.................................................

def main(argv=None):
    """This function runs one command and returns its exit code.

    Args:
        argv (list, optional): arguments, sys.argv[1:] by default

    Returns:
        code (int): exit code
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors, which means "empty set" here
        if e.code not in (0, None):
            exit_program(EXIT_CODES.ERROR)
        raise
    if args.command in ("compute", "project", "bench"):
        presentation_file.presentation()
    action = {"compute": "computing the polytope", "check": "checking the wrench", "margin": "computing the margin",
              "project": "projecting the polytope", "bench": "running the benchmark"}[args.command]
    try:
        tol = get_tolerance(args.tol)
        match args.command:
            case "compute":
                return compute_command(args, tol)
            case "check":
                return check_command(args, tol)
            case "margin":
                return margin_command(args, tol)
            case "project":
                return project_command(args, tol)
            case "bench":
                return bench_command(args, tol)
    except Exception as e:
        exit_program(EXIT_CODES.ERROR, "Error while " + action + ": " + str(e))
#.................................................
#   PROGRAM START:
if __name__ == "__main__":
    sys.exit(main())
#.................................................
#   Possible improvements:
#   - Batch queries from a file in check.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
