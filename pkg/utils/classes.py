"""
@file classes.py

@brief Definitions of program constants and data containers.

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
#   CLASSES.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   This module contains all the classes used in the program.
#   There are currently 13 classes:
#   - ProgramConstants: constants and default settings
#   - Tolerance: numerical tolerances of the geometry kernel
#   - VPolytope: vertex (and ray) description of a convex set
#   - HPolytope: halfspace description of a convex set
#   - ChebyshevResult: largest inscribed ball of an HPolytope
#   - LimbModel: one kinematic branch of the robot
#   - ContactSpec: one frictional contact
#   - Wrench: force/torque pair at the CoM frame
#   - RobotSnapshot: limbs and contacts of a stance
#   - FeasibilityResult: answer of a membership query
#   - MarginResult: stance-quality margin of a polytope
#   - FwpResult: feasible wrench polytope and its statistics
#   - PerFootResult: answer of the per-foot decomposition LP
#   Every array stored in these objects is read-only.
#.................................................
from types import SimpleNamespace
import numpy as np  # Module for numerical operations
from utils.errors import InputError  # Error raised on invalid values


class ProgramConstants:
    """This class contains the constants
    used in the program.
    """
    def __init__(self):
        # Default numerical tolerances:
        self.Tolerance = SimpleNamespace()
        self.Tolerance.EPS_RANK = 1e-9  # Relative threshold for rank tests
        self.Tolerance.EPS_HULL = 1e-9  # Coplanarity threshold in hull construction
        self.Tolerance.EPS_CONTAIN = 1e-7  # Slack allowed in containment tests
        self.Tolerance.EPS_CANON = 1e-8  # Rounding quantum for canonical ordering
        # Hard limits:
        self.Limits = SimpleNamespace()
        self.Limits.MAX_JOINTS = 12  # Guard on the 2^n torque enumeration
        self.Limits.MAX_DIM = 6  # Largest ambient dimension handled by the kernel
        self.Limits.FORCE_DIMS = (2, 3)  # Allowed row counts of a limb Jacobian
        # Exit codes of the command line interface:
        self.ExitCodes = SimpleNamespace()
        self.ExitCodes.SUCCESS = 0  # Success, feasible query
        self.ExitCodes.ERROR = 1  # Any error
        self.ExitCodes.EMPTY = 2  # Empty result set
        self.ExitCodes.INFEASIBLE = 3  # Infeasible query
        # Friction pyramid:
        self.Friction = SimpleNamespace()
        self.Friction.FRAME_SWITCH = 0.99  # Above this |n.z| the tangent frame uses the x axis
        self.Friction.MIN_EDGES = 3  # Smallest pyramid edge count
        # Wrench space:
        self.Wrench = SimpleNamespace()
        self.Wrench.DIM = 6  # Dimension of the spatial wrench space
        self.Wrench.PLANAR_INDICES = (0, 2, 4)  # (F_x, F_z, tau_y) inside the 6D wrench
        # Benchmark harness:
        self.Bench = SimpleNamespace()
        self.Bench.PIPELINES = ("v", "h", "dd")  # Available representation pipelines
        self.Bench.STAGES = ("awp", "cwc", "fwp", "queries")  # Timed stages, in order
        self.Bench.CSV_COLUMNS = ["pipeline", "stage", "n_vertices", "n_facets", "wall_ms"]  # CSV header
        self.Bench.N_QUERIES = 1000  # Membership queries per repeat
        self.Bench.SEED = 0  # Seed of the query generator
        self.Bench.NOT_MATERIALIZED = -1  # Count reported for a description never built
        # Environment and files:
        self.Env = SimpleNamespace()
        self.Env.TOL_VARIABLE = "WRENCHPOLY_TOL"  # Environment variable overriding eps_contain
        self.Files = SimpleNamespace()
        self.Files.FIXTURES_DIR = "fixtures"  # Folder of the bundled snapshots
#.................................................

def _frozen(array, ndim):
    """Returns a read-only float64 copy of an array with the requested rank."""
    out = np.array(array, dtype=float, copy=True)
    if out.ndim != ndim:
        raise InputError("Error: expected an array with " + str(ndim) + " dimensions, got shape " + str(out.shape) + ".")
    out.setflags(write=False)
    return out
#.................................................

class Tolerance:
    """This class contains the numerical tolerances
    shared by every geometric operation.

    Args:
        eps_rank (float, optional): threshold for affine-dimension rank tests
        eps_hull (float, optional): coplanarity threshold in hull construction
        eps_contain (float, optional): slack allowed in containment tests
        eps_canon (float, optional): vertex rounding quantum for canonical ordering

    Raises:
        InputError: if a value is not strictly positive or eps_contain < eps_hull
    """
    def __init__(self, eps_rank=None, eps_hull=None, eps_contain=None, eps_canon=None):
        defaults = ProgramConstants().Tolerance
        self.eps_rank = float(defaults.EPS_RANK if eps_rank is None else eps_rank)  # Rank threshold
        self.eps_hull = float(defaults.EPS_HULL if eps_hull is None else eps_hull)  # Coplanarity threshold
        self.eps_contain = float(defaults.EPS_CONTAIN if eps_contain is None else eps_contain)  # Containment slack
        self.eps_canon = float(defaults.EPS_CANON if eps_canon is None else eps_canon)  # Canonical rounding quantum
        for name in ("eps_rank", "eps_hull", "eps_contain", "eps_canon"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0.0):
                raise InputError("Error: tolerance " + name + " must be strictly positive, got " + repr(value) + ".")
        if self.eps_contain < self.eps_hull:
            raise InputError("Error: tolerance eps_contain must not be smaller than eps_hull.")

    def to_dict(self):
        return {"eps_rank": self.eps_rank, "eps_hull": self.eps_hull,
                "eps_contain": self.eps_contain, "eps_canon": self.eps_canon}

    def __repr__(self):
        return "Tolerance(" + ", ".join(k + "=" + repr(v) for k, v in self.to_dict().items()) + ")"
#.................................................

class VPolytope:
    """This class contains the vertex description of a convex set.
    A cone has the origin as its only vertex and a nonempty ray list.
    The empty set has no vertices and affine_dim = -1.

    Args:
        dim (int): ambient dimension
        vertices (array): points, one per row
        rays (array, optional): directions, one per row
        affine_dim (int, optional): dimension of the affine hull
    """
    def __init__(self, dim, vertices, rays=None, affine_dim=None):
        self.dim = int(dim)  # Ambient dimension
        self.vertices = _frozen(np.reshape(vertices, (-1, self.dim)), 2)  # Extreme points
        self.rays = _frozen(np.zeros((0, self.dim)) if rays is None else np.reshape(rays, (-1, self.dim)), 2)  # Extreme rays
        if affine_dim is None:
            affine_dim = -1 if self.vertices.shape[0] == 0 else self.dim
        self.affine_dim = int(affine_dim)  # Dimension of the affine hull

    @classmethod
    def empty(cls, dim):
        """Returns the empty set of dimension dim."""
        return cls(dim, np.zeros((0, dim)), None, -1)

    @property
    def is_empty(self):
        return self.vertices.shape[0] == 0

    @property
    def is_bounded(self):
        return self.rays.shape[0] == 0

    @property
    def n_vertices(self):
        return self.vertices.shape[0]

    def __repr__(self):
        return ("VPolytope(dim=" + str(self.dim) + ", n_vertices=" + str(self.n_vertices)
                + ", n_rays=" + str(self.rays.shape[0]) + ", affine_dim=" + str(self.affine_dim) + ")")
#.................................................

class HPolytope:
    """This class contains the halfspace description {x : a_i.x <= b_i}.
    Equality constraints are stored as opposite pairs of rows.
    The empty set is the single row 0.x <= -1.

    Args:
        dim (int): ambient dimension
        normals (array): normals a_i, one per row
        offsets (array): offsets b_i
    """
    def __init__(self, dim, normals, offsets):
        self.dim = int(dim)  # Ambient dimension
        self.normals = _frozen(np.reshape(normals, (-1, self.dim)), 2)  # Facet normals
        self.offsets = _frozen(np.reshape(offsets, (-1,)), 1)  # Facet offsets
        if self.normals.shape[0] != self.offsets.shape[0]:
            raise InputError("Error: the number of normals and offsets of an HPolytope differ.")

    @classmethod
    def empty(cls, dim):
        """Returns the empty set of dimension dim."""
        return cls(dim, np.zeros((1, dim)), np.array([-1.0]))

    @property
    def is_empty(self):
        zero_rows = np.linalg.norm(self.normals, axis=1) == 0.0
        return bool(np.any(self.offsets[zero_rows] < 0.0))

    @property
    def is_cone(self):
        return self.n_facets > 0 and bool(np.all(self.offsets == 0.0))

    @property
    def n_facets(self):
        return self.normals.shape[0]

    def equality_pairs(self, tol):
        """Returns the index pairs (i, j) of rows with a_i = -a_j and b_i = -b_j."""
        from polytope_kernel.halfspaces import find_equality_pairs  # Local import, the kernel imports this module
        return find_equality_pairs(self.normals, self.offsets, tol)

    def __repr__(self):
        return "HPolytope(dim=" + str(self.dim) + ", n_facets=" + str(self.n_facets) + ")"
#.................................................

class ChebyshevResult:
    """This class contains the largest ball inscribed in an HPolytope.

    Args:
        status (string): "optimal", "empty" or "unbounded"
        center (array or None): center of the ball
        radius (float or None): radius of the ball
    """
    def __init__(self, status, center=None, radius=None):
        self.status = status  # Outcome of the LP
        self.center = None if center is None else _frozen(center, 1)  # Center of the ball
        self.radius = radius  # Radius of the ball
#.................................................

class LimbModel:
    """This class contains one kinematic branch of the robot.

    Args:
        limb_id (string): limb label
        jacobian (array): m x n contact Jacobian, m in {2, 3}
        tau_min (array): lower joint torque bounds (N.m)
        tau_max (array): upper joint torque bounds (N.m)
        bias (array, optional): joint-space bias M qdd + c + g (N.m), zero by default
        foot_position (array, optional): foot position in the world frame (m)

    Raises:
        InputError: if shapes are inconsistent, bounds are not ordered or n > 12
    """
    def __init__(self, limb_id, jacobian, tau_min, tau_max, bias=None, foot_position=None):
        program_constants = ProgramConstants()
        MAX_JOINTS = program_constants.Limits.MAX_JOINTS
        FORCE_DIMS = program_constants.Limits.FORCE_DIMS
        self.limb_id = str(limb_id)  # Limb label
        self.jacobian = _frozen(jacobian, 2)  # Contact Jacobian
        m, n = self.jacobian.shape
        if m not in FORCE_DIMS:
            raise InputError("Error: the Jacobian of limb '" + self.limb_id + "' must have 2 or 3 rows, got " + str(m) + ".")
        if n > MAX_JOINTS:
            raise InputError("Error: limb '" + self.limb_id + "' has " + str(n) + " joints, the maximum is " + str(MAX_JOINTS) + ".")
        self.tau_min = _frozen(tau_min, 1)  # Lower torque bounds
        self.tau_max = _frozen(tau_max, 1)  # Upper torque bounds
        self.bias = _frozen(np.zeros(n) if bias is None else bias, 1)  # Joint-space bias
        self.foot_position = _frozen(np.zeros(m) if foot_position is None else foot_position, 1)  # Foot position
        for name in ("tau_min", "tau_max", "bias"):
            if getattr(self, name).shape[0] != n:
                raise InputError("Error: " + name + " of limb '" + self.limb_id + "' must have " + str(n) + " entries.")
        if self.foot_position.shape[0] != m:
            raise InputError("Error: the foot position of limb '" + self.limb_id + "' must have " + str(m) + " entries.")
        bad = np.nonzero(~(self.tau_min < self.tau_max))[0]
        if bad.size > 0:
            raise InputError("Error: limb '" + self.limb_id + "' has tau_min >= tau_max at joint " + str(int(bad[0])) + ".")

    @property
    def n_joints(self):
        return self.jacobian.shape[1]

    @property
    def force_dim(self):
        return self.jacobian.shape[0]

    def with_changes(self, **changes):
        """Returns a copy of the limb with some fields replaced."""
        fields = {"limb_id": self.limb_id, "jacobian": self.jacobian, "tau_min": self.tau_min,
                  "tau_max": self.tau_max, "bias": self.bias, "foot_position": self.foot_position}
        fields.update(changes)
        return LimbModel(**fields)
#.................................................

class ContactSpec:
    """This class contains one frictional contact.

    Args:
        normal (array): unit surface normal, pointing into the robot
        mu (float): friction coefficient
        num_edges (int): number of pyramid edges
        foot_position (array, optional): contact point in the world frame (m)
        tol (Tolerance, optional): tolerances for the unit-normal check, kept for copies

    Raises:
        InputError: if the normal is not unit, mu <= 0 or num_edges < 3
    """
    def __init__(self, normal, mu, num_edges, foot_position=None, tol=None):
        tol = Tolerance() if tol is None else tol
        MIN_EDGES = ProgramConstants().Friction.MIN_EDGES
        self.normal = _frozen(normal, 1)  # Surface normal
        self.mu = float(mu)  # Friction coefficient
        self.num_edges = int(num_edges)  # Pyramid edge count
        self.tol = tol  # Tolerances the contact was validated with
        self.foot_position = _frozen(np.zeros(3) if foot_position is None else foot_position, 1)  # Contact point
        if self.normal.shape[0] != 3 or self.foot_position.shape[0] != 3:
            raise InputError("Error: contact normal and position must be 3-vectors.")
        if abs(np.linalg.norm(self.normal) - 1.0) > tol.eps_rank:
            raise InputError("Error: the contact normal must have unit length.")
        if not (np.isfinite(self.mu) and self.mu > 0.0):
            raise InputError("Error: the friction coefficient must be strictly positive.")
        if self.num_edges < MIN_EDGES or num_edges != self.num_edges:
            raise InputError("Error: the friction pyramid needs an integer number of edges >= " + str(MIN_EDGES) + ".")

    def with_changes(self, **changes):
        """Returns a copy of the contact with some fields replaced."""
        fields = {"normal": self.normal, "mu": self.mu, "num_edges": self.num_edges,
                  "foot_position": self.foot_position, "tol": self.tol}
        fields.update(changes)
        return ContactSpec(**fields)
#.................................................

class Wrench:
    """This class contains a force/torque pair at the CoM frame.

    Args:
        force (array): force (N)
        torque (array): torque (N.m)
    """
    def __init__(self, force, torque):
        self.force = _frozen(force, 1)  # Force
        self.torque = _frozen(torque, 1)  # Torque
        if self.force.shape != (3,) or self.torque.shape != (3,):
            raise InputError("Error: a wrench needs a 3D force and a 3D torque.")
        if not (np.all(np.isfinite(self.force)) and np.all(np.isfinite(self.torque))):
            raise InputError("Error: wrench components must be finite.")

    @classmethod
    def from_vector(cls, w):
        w = np.asarray(w, dtype=float).reshape(-1)
        if w.shape != (6,):
            raise InputError("Error: a wrench vector must have 6 components, got " + str(w.shape[0]) + ".")
        return cls(w[:3], w[3:])

    def as_vector(self):
        return np.concatenate([self.force, self.torque])

    def planar(self):
        """Returns (F_x, F_z, tau_y)."""
        return self.as_vector()[list(ProgramConstants().Wrench.PLANAR_INDICES)]

    def __repr__(self):
        return "Wrench(force=" + repr(self.force.tolist()) + ", torque=" + repr(self.torque.tolist()) + ")"
#.................................................

class RobotSnapshot:
    """This class contains the stance of a multi-limbed robot.
    Positions are stored in the world frame; the wrench frame
    is centered at com_position.

    Args:
        name (string): snapshot label
        limbs (list): LimbModel objects, with 3-row Jacobians
        contacts (list): ContactSpec objects, index-aligned with limbs
        com_position (array, optional): CoM position in the world frame (m)

    Raises:
        InputError: if the lists are empty, misaligned or positions disagree
    """
    def __init__(self, name, limbs, contacts, com_position=None):
        self.name = str(name)  # Snapshot label
        self.limbs = tuple(limbs)  # Limb models
        self.contacts = tuple(contacts)  # Contact specifications
        self.com_position = _frozen(np.zeros(3) if com_position is None else com_position, 1)  # CoM position
        if len(self.limbs) == 0 or len(self.limbs) != len(self.contacts):
            raise InputError("Error: a robot needs at least one limb and exactly one contact per limb.")
        for limb, contact in zip(self.limbs, self.contacts):
            if limb.force_dim != 3:
                raise InputError("Error: limb '" + limb.limb_id + "' must have a 3-row Jacobian to build wrenches.")
            if not np.array_equal(limb.foot_position, contact.foot_position):
                raise InputError("Error: limb '" + limb.limb_id + "' and its contact disagree on the foot position.")

    def relative_foot(self, k):
        """Returns the foot position of limb k relative to the CoM."""
        return self.limbs[k].foot_position - self.com_position

#.................................................

class FeasibilityResult:
    """This class contains the answer of a wrench membership query.

    Args:
        feasible (bool): True if the wrench is inside the set
        margin (float): signed distance to the closest facet (negative when infeasible)
        binding_facets (list): indices of facets active within eps_contain
        violation (float, optional): largest constraint violation, 0 if feasible
    """
    def __init__(self, feasible, margin, binding_facets, violation=0.0):
        self.feasible = bool(feasible)  # Membership flag
        self.margin = float(margin)  # Signed margin
        self.binding_facets = [int(i) for i in binding_facets]  # Active facets
        self.violation = float(violation)  # Largest violation

    def to_dict(self):
        return {"feasible": self.feasible,
                "margin": self.margin if np.isfinite(self.margin) else None,
                "binding_facets": self.binding_facets,
                "violation": self.violation if np.isfinite(self.violation) else None}
#.................................................

class MarginResult:
    """This class contains the Chebyshev margin of a wrench polytope.

    Args:
        status (string): "optimal", "empty" or "unbounded"
        wrench (array or None): interior point with maximal uniform slack
        radius (float or None): margin value
    """
    def __init__(self, status, wrench=None, radius=None):
        self.status = status  # Outcome
        self.wrench = wrench  # Wrench (or planar vector) at the center
        self.radius = radius  # Margin

    @property
    def is_empty(self):
        return self.status == "empty"

    def to_dict(self):
        center = None
        if self.wrench is not None:
            center = self.wrench.as_vector().tolist() if isinstance(self.wrench, Wrench) else np.asarray(self.wrench).tolist()
        radius = self.radius
        if radius is not None and not np.isfinite(radius):
            radius = None
        return {"status": self.status, "center": center, "radius": radius}
#.................................................

class FwpResult:
    """This class contains a feasible wrench polytope.

    Args:
        hpolytope (HPolytope or None): halfspace description
        vpolytope (VPolytope or None): vertex description
        stats (dict, optional): n_vertices, n_facets, build_ms
        warnings (list, optional): messages collected while building
    """
    def __init__(self, hpolytope, vpolytope, stats=None, warnings=None):
        self.hpolytope = hpolytope  # H-description
        self.vpolytope = vpolytope  # V-description
        self.stats = {} if stats is None else dict(stats)  # Cardinality and timing
        self.warnings = [] if warnings is None else list(warnings)  # Warnings

    @property
    def is_empty(self):
        if self.vpolytope is not None:
            return self.vpolytope.is_empty
        return self.hpolytope.is_empty
#.................................................

class PerFootResult:
    """This class contains the answer of the per-foot decomposition LP.

    Args:
        feasible (bool): True if a per-foot decomposition exists
        residual (float): L-infinity residual of the best decomposition
        forces (list or None): one contact force per limb
    """
    def __init__(self, feasible, residual, forces=None):
        self.feasible = bool(feasible)  # Decomposition found
        self.residual = float(residual)  # Best residual
        self.forces = forces  # Contact forces, limb order
#.................................................
#   Possible improvements:
#   - Dataclasses with slots once the value types settle.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
