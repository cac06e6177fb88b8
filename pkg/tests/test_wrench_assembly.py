# tests/test_wrench_assembly.py
import numpy as np
import pytest

from utils.classes import LimbModel, ContactSpec, RobotSnapshot
from utils.errors import SingularConfigurationError
from IO_operations.read_snapshot import load_snapshot
from wrench_assembly.lift import skew, lift_matrix, lift_force_to_wrench, lift_points, limb_wrench_polytope
from wrench_assembly.awp import awp, limb_wrench_polytopes
from wrench_assembly.cwc import cwc, cwc_rays
from wrench_assembly.fwp import fwp_intersection, fwp_per_foot
from polytope_kernel.containment import contains, support_many
from polytope_kernel.conversion import v_to_h
from query.per_foot_oracle import per_foot_feasibility


def make_robot(feet, normals, mu=0.5, num_edges=4, com=None, biases=None, name="test"):
    limbs, contacts = [], []
    for i, (foot, normal) in enumerate(zip(feet, normals)):
        bias = None if biases is None else biases[i]
        limbs.append(LimbModel("leg" + str(i), np.eye(3), -np.ones(3), np.ones(3), bias, foot))
        contacts.append(ContactSpec(normal, mu, num_edges, foot))
    return RobotSnapshot(name, limbs, contacts, com)


@pytest.fixture(scope="module")
def quadruped(fixtures_dir, tol):
    return load_snapshot(fixtures_dir / "unit_quadruped.json", tol=tol)


@pytest.fixture(scope="module")
def quadruped_awp(quadruped, tol):
    return awp(quadruped, tol)


@pytest.fixture(scope="module")
def quadruped_fwp(quadruped, tol):
    return fwp_intersection(quadruped, tol)


# ---------- lifting ----------

def test_lift_force_to_wrench():
    wrench = lift_force_to_wrench([3.0, -2.0, 5.0], [0.5, 0.3, 0.0])
    assert np.allclose(wrench.force, [3.0, -2.0, 5.0])
    assert np.allclose(wrench.torque, [1.5, -2.5, -1.9])


def test_lift_matrix_agrees_with_cross_product():
    p = np.array([0.2, -0.4, 0.7])
    f = np.array([1.0, 2.0, -3.0])
    assert np.allclose(skew(p) @ f, np.cross(p, f))
    assert np.allclose(lift_matrix(p) @ f, lift_points(f, p)[0])


def test_force_at_the_com_has_no_torque():
    wrench = lift_force_to_wrench([0.0, 0.0, 9.81], [0.0, 0.0, 0.0])
    assert np.allclose(wrench.torque, 0.0)


def test_limb_wrench_polytope_is_three_dimensional(tol):
    limb = LimbModel("lf", np.eye(3), -np.ones(3), np.ones(3), None, [0.5, 0.3, 0.0])
    polytope = limb_wrench_polytope(limb, tol)
    assert polytope.dim == 6
    assert polytope.affine_dim == 3
    assert polytope.n_vertices == 8
    # Torques follow the forces
    assert np.allclose(polytope.vertices[:, 3:], np.cross([0.5, 0.3, 0.0], polytope.vertices[:, :3]))


# ---------- actuation wrench polytope ----------

def test_awp_of_single_limb(tol, same_vertex_sets):
    robot = make_robot([[0.5, 0.3, 0.0]], [[0.0, 0.0, 1.0]])
    assert same_vertex_sets(awp(robot, tol), limb_wrench_polytope(robot.limbs[0], tol))


def test_awp_of_coincident_limbs_doubles(tol, same_vertex_sets):
    foot = [0.2, -0.1, 0.0]
    robot = make_robot([foot, foot], [[0.0, 0.0, 1.0]] * 2)
    single = limb_wrench_polytope(robot.limbs[0], tol)
    assert same_vertex_sets(awp(robot, tol), 2.0 * single.vertices)


def test_awp_support_is_additive(quadruped, quadruped_awp, tol, random_directions):
    parts = limb_wrench_polytopes(quadruped, tol)
    directions = random_directions(100, 6, seed=1)
    expected = sum(support_many(part, directions) for part in parts)
    assert quadruped_awp.affine_dim == 6
    assert np.allclose(support_many(quadruped_awp, directions), expected, atol=1e-8)


def test_awp_names_the_singular_limb(tol):
    robot = make_robot([[0.0, 0.0, 0.0]] * 2, [[0.0, 0.0, 1.0]] * 2)
    bad = robot.limbs[1].with_changes(jacobian=[[1.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
    robot = RobotSnapshot("bad", [robot.limbs[0], bad], robot.contacts)
    with pytest.raises(SingularConfigurationError) as info:
        awp(robot, tol)
    assert info.value.limb_id == "leg1"


def test_awp_is_frame_invariant(tol, same_vertex_sets):
    feet = [[0.5, 0.3, 0.0], [-0.5, 0.1, 0.0]]
    shift = np.array([1.0, -2.0, 0.5])
    base = make_robot(feet, [[0.0, 0.0, 1.0]] * 2)
    moved = make_robot([np.add(f, shift) for f in feet], [[0.0, 0.0, 1.0]] * 2, com=shift)
    assert same_vertex_sets(awp(base, tol), awp(moved, tol))


# ---------- contact wrench cone ----------

def test_cwc_rays_are_lifted_pyramid_edges(quadruped):
    rays = cwc_rays(quadruped)
    assert rays.shape == (16, 6)
    for k in range(4):
        block = rays[4 * k:4 * k + 4]
        assert np.allclose(block[:, 3:], np.cross(quadruped.relative_foot(k), block[:, :3]))


def test_cwc_facets_are_tight(quadruped, tol):
    cone, generators = cwc(quadruped, tol)
    assert cone.is_cone
    assert generators.affine_dim == 6
    products = cone.normals @ generators.rays.T
    assert np.all(products <= 1e-9)
    # A facet of a pointed 6D cone holds at least five generators
    assert np.all(np.sum(np.abs(products) <= 1e-9, axis=1) >= 5)


def test_cwc_contains_gravity_compensation(quadruped, tol):
    cone, _ = cwc(quadruped, tol)
    assert contains(cone, [0.0, 0.0, 1.0, 0.0, 0.0, 0.0], tol)
    assert not contains(cone, [0.0, 0.0, -1.0, 0.0, 0.0, 0.0], tol)


# ---------- feasible wrench polytopes ----------

def test_frictionless_contact_gives_a_segment(fixtures_dir, tol, same_vertex_sets):
    robot = load_snapshot(fixtures_dir / "frictionless_single.json", tol=tol)
    result = fwp_intersection(robot, tol)
    assert result.vpolytope.affine_dim == 1
    expected = [[0, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]]
    assert same_vertex_sets(result.vpolytope, expected, atol=1e-6)


def test_single_limb_sets_agree(tol, same_vertex_sets):
    robot = make_robot([[0.2, 0.1, -0.3]], [[0.0, 0.0, 1.0]])
    aggregate = fwp_intersection(robot, tol)
    per_foot = fwp_per_foot(robot, tol)
    assert aggregate.vpolytope.affine_dim == 3
    assert same_vertex_sets(per_foot.vpolytope, aggregate.vpolytope, atol=1e-7)


def test_quadruped_fwp_statistics(quadruped_fwp):
    assert not quadruped_fwp.is_empty
    assert quadruped_fwp.stats["n_vertices"] == quadruped_fwp.vpolytope.n_vertices
    assert quadruped_fwp.stats["n_facets"] == quadruped_fwp.hpolytope.n_facets
    assert quadruped_fwp.stats["build_ms"] >= 0.0
    assert quadruped_fwp.warnings == []


def test_subset_chain(quadruped, quadruped_awp, quadruped_fwp, tol):
    actuation = v_to_h(quadruped_awp, tol)
    assert all(contains(actuation, v, tol) for v in quadruped_fwp.vpolytope.vertices)
    per_foot = fwp_per_foot(quadruped, tol)
    assert per_foot.hpolytope is None
    assert all(contains(quadruped_fwp.hpolytope, v, tol) for v in per_foot.vpolytope.vertices)


def test_pulling_stance_is_empty(fixtures_dir, tol):
    robot = load_snapshot(fixtures_dir / "pulling_stance.json", tol=tol)
    result = fwp_intersection(robot, tol)
    assert result.is_empty
    assert result.warnings == ["the feasible wrench polytope is empty"]
    per_foot = fwp_per_foot(robot, tol)
    assert per_foot.is_empty
    assert len(per_foot.warnings) == 5
    assert "limb 'lf' cannot push within friction" in per_foot.warnings[0]


def test_per_foot_set_is_strictly_smaller(tol):
    # Opposed walls: the two cones add up to sideways forces neither foot can push alone
    robot = make_robot([[0.0, 0.0, 0.0]] * 2, [[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0]])
    witness = np.array([0.0, 2.0, 0.0, 0.0, 0.0, 0.0])
    aggregate = fwp_intersection(robot, tol)
    assert contains(aggregate.hpolytope, witness, tol)
    per_foot = fwp_per_foot(robot, tol, with_halfspaces=True)
    assert not contains(per_foot.vpolytope, witness, tol)
    assert not contains(per_foot.hpolytope, witness, tol)
    assert not per_foot_feasibility(robot, witness, tol).feasible
