"""
@file benchmark.py

@brief Timing of the representation pipelines of the feasible wrench polytope.

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
#   BENCHMARK.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   Three pipelines build the same set and answer the
#   same membership queries:
#   - "v": the AWP stays in V-form, the FWP vertices come
#     from the raw stacked halfspaces, queries are LPs
#   - "h": the AWP goes to H-form after the sum, the
#     intersection drops redundant rows by LP, queries
#     evaluate the facets
#   - "dd": both descriptions are kept, qhull's dual
#     hull removes the redundant rows and the vertices
#     are enumerated, queries evaluate the facets
#   Every repeat writes one row per stage. Counts of a
#   description a pipeline never builds are -1.
#.................................................
import time  # Wall-clock timing
from types import SimpleNamespace
import numpy as np  # Module for numerical operations
import pandas as pd  # Tables of timings
from polytope_kernel.containment import contains  # V-form membership
from polytope_kernel.conversion import v_to_h, h_to_v  # Conversions
from polytope_kernel.intersection import intersect, stack_halfspaces  # H-intersection
from wrench_assembly.awp import awp  # Actuation wrench polytope
from wrench_assembly.cwc import cwc  # Contact wrench cone
from utils.classes import ProgramConstants  # Constants
from utils.errors import InputError  # Error raised on unknown pipelines


def sample_queries(polytope, n_queries, seed):
    """This function samples wrenches uniformly in the bounding box of a polytope.

    Args:
        polytope (VPolytope): bounded vertex description
        n_queries (int): number of wrenches
        seed (int): seed of the generator

    Returns:
        queries (array): n_queries x dim wrenches
    """
    rng = np.random.default_rng(seed)
    low = np.min(polytope.vertices, axis=0)
    high = np.max(polytope.vertices, axis=0)
    return rng.uniform(low, high, size=(n_queries, polytope.dim))


def facet_membership(hpolytope, queries, tol):
    """Membership of every row of queries by facet evaluation."""
    excess = queries @ hpolytope.normals.T - hpolytope.offsets[None, :]
    return np.max(excess, axis=1) <= tol.eps_contain


def _row(pipeline, stage, vpolytope, hpolytope, start):
    NOT_MATERIALIZED = ProgramConstants().Bench.NOT_MATERIALIZED
    return {"pipeline": pipeline, "stage": stage,
            "n_vertices": NOT_MATERIALIZED if vpolytope is None else vpolytope.n_vertices,
            "n_facets": NOT_MATERIALIZED if hpolytope is None else (0 if hpolytope.is_empty else hpolytope.n_facets),
            "wall_ms": 1000.0 * (time.perf_counter() - start)}


def run_pipeline(robot, pipeline, queries, tol):
    """This function runs one pipeline once.

    Args:
        robot (RobotSnapshot): the stance
        pipeline (string): "v", "h" or "dd"
        queries (array): wrenches to classify
        tol (Tolerance): tolerances

    Raises:
        InputError: on an unknown pipeline

    Returns:
        rows (list): one dict per stage, in stage order
        result (SimpleNamespace): vpolytope, hpolytope (either may be None) and the membership flags
    """
    rows = []
    # AWP
    start = time.perf_counter()
    awp_v = awp(robot, tol)
    awp_h = None
    match pipeline:
        case "v":
            rows.append(_row(pipeline, "awp", awp_v, None, start))
        case "h":
            awp_h = v_to_h(awp_v, tol)
            rows.append(_row(pipeline, "awp", None, awp_h, start))
        case "dd":
            awp_h = v_to_h(awp_v, tol)
            rows.append(_row(pipeline, "awp", awp_v, awp_h, start))
        case _:
            raise InputError("Error: unknown pipeline '" + str(pipeline) + "', expected v, h or dd.")
    # CWC
    start = time.perf_counter()
    cwc_h, _ = cwc(robot, tol)
    rows.append(_row(pipeline, "cwc", None, cwc_h, start))
    # FWP
    start = time.perf_counter()
    match pipeline:
        case "v":
            fwp_v = h_to_v(stack_halfspaces(v_to_h(awp_v, tol), cwc_h, tol), tol)
            fwp_h = None
        case "h":
            fwp_h = intersect(awp_h, cwc_h, tol, method="lp")
            fwp_v = None
        case "dd":
            fwp_h = intersect(awp_h, cwc_h, tol, method="qhull")
            fwp_v = h_to_v(fwp_h, tol)
    rows.append(_row(pipeline, "fwp", fwp_v, fwp_h, start))
    # Membership queries
    start = time.perf_counter()
    if fwp_h is None:
        inside = np.array([contains(fwp_v, q, tol) for q in queries], dtype=bool)
    else:
        inside = facet_membership(fwp_h, queries, tol)
    rows.append(_row(pipeline, "queries", fwp_v, fwp_h, start))
    return rows, SimpleNamespace(vpolytope=fwp_v, hpolytope=fwp_h, inside=inside)


def run_benchmark(robot, tol, pipelines=None, repeat=1, n_queries=None, seed=None, verbose=False):
    """This function times the pipelines on a stance.

    Args:
        robot (RobotSnapshot): the stance
        tol (Tolerance): tolerances
        pipelines (list, optional): pipelines to run, all by default
        repeat (int, optional): repeats per pipeline
        n_queries (int, optional): membership queries per repeat
        seed (int, optional): seed of the query generator
        verbose (bool, optional): print progress messages

    Raises:
        InputError: on an unknown pipeline or a nonpositive repeat count

    Returns:
        table (DataFrame): columns pipeline, stage, n_vertices, n_facets, wall_ms
        results (dict): last result of every pipeline, see run_pipeline
    """
    program_constants = ProgramConstants()
    BENCH = program_constants.Bench
    pipelines = list(BENCH.PIPELINES) if pipelines is None else list(pipelines)
    n_queries = BENCH.N_QUERIES if n_queries is None else int(n_queries)
    seed = BENCH.SEED if seed is None else int(seed)
    if repeat < 1 or n_queries < 0:
        raise InputError("Error: the benchmark needs repeat >= 1 and a nonnegative number of queries.")
    for pipeline in pipelines:
        if pipeline not in BENCH.PIPELINES:
            raise InputError("Error: unknown pipeline '" + str(pipeline) + "', expected v, h or dd.")
    queries = sample_queries(awp(robot, tol), n_queries, seed)
    rows = []
    results = {}
    for pipeline in pipelines:
        for i in range(repeat):
            if verbose:
                print("Running pipeline '" + pipeline + "', repeat " + str(i + 1) + " of " + str(repeat) + "...")
            pipeline_rows, results[pipeline] = run_pipeline(robot, pipeline, queries, tol)
            rows.extend(pipeline_rows)
    return pd.DataFrame(rows, columns=BENCH.CSV_COLUMNS), results
#.................................................
#   Possible improvements:
#   - Incremental double description as a fourth pipeline.
#.................................................
#   KNOW PROBLEMS:
#   - Timings include the Python overhead of the conversions.
#.................................................
