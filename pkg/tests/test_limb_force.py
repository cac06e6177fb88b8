# tests/test_limb_force.py
import numpy as np
import pytest

from utils.classes import LimbModel, ContactSpec, Tolerance
from utils.errors import InputError, SingularConfigurationError
from limb_force.pseudoinverse import transpose_pseudoinverse
from limb_force.force_polytope import (torque_box_vertices, extreme_forces, force_polytope,
                                       torque_preimage_polytope)
from limb_force.friction_cone import tangent_frame, friction_cone_rays, friction_cone_halfspaces
from limb_force.friction_polytope import friction_force_polytope
from polytope_kernel.containment import contains
from polytope_kernel.conversion import v_to_h, h_to_v


def unit_limb(bias=None, foot=None, half=1.0):
    return LimbModel("leg", np.eye(3), -half * np.ones(3), half * np.ones(3), bias, foot)


def two_link_limb(q=(-0.7, 1.4), lengths=(0.35, 0.33), tau=120.0):
    l1, l2 = lengths
    s1, c1 = np.sin(q[0]), np.cos(q[0])
    s12, c12 = np.sin(q[0] + q[1]), np.cos(q[0] + q[1])
    J = np.array([[-l1 * s1 - l2 * s12, -l2 * s12],
                  [l1 * c1 + l2 * c12, l2 * c12]])
    return LimbModel("knee", J, [-tau, -tau], [tau, tau])


# ---------- pseudoinverse ----------

def test_pseudoinverse_of_identity(tol):
    assert np.allclose(transpose_pseudoinverse(np.eye(3), tol), np.eye(3))


def test_pseudoinverse_of_redundant_limb(tol):
    J = np.array([[1.0, 0.0, 1.0, 0.0], [0.0, 2.0, 0.0, 1.0], [0.0, 0.0, 1.0, 1.0]])
    J_pinv = transpose_pseudoinverse(J, tol)
    assert J_pinv.shape == (3, 4)
    assert np.allclose(J_pinv @ J.T, np.eye(3))
    assert np.allclose(J_pinv, np.linalg.pinv(J.T))


def test_pseudoinverse_of_singular_limb(tol):
    J = np.array([[1.0, 0.0, 0.0], [2.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
    with pytest.raises(SingularConfigurationError) as info:
        transpose_pseudoinverse(J, tol, "rf")
    assert info.value.limb_id == "rf"
    assert "rank 2" in str(info.value)
    with pytest.raises(SingularConfigurationError):
        transpose_pseudoinverse(np.ones((3, 2)), tol)


# ---------- force polytopes ----------

def test_torque_box_vertices():
    corners = torque_box_vertices([-1.0, -2.0], [1.0, 2.0])
    assert corners.tolist() == [[-1.0, -2.0], [-1.0, 2.0], [1.0, -2.0], [1.0, 2.0]]


def test_identity_limb_is_a_cube(tol, make_cube, same_vertex_sets):
    polytope = force_polytope(unit_limb(), tol)
    assert polytope.n_vertices == 8
    assert same_vertex_sets(polytope, make_cube(3), atol=1e-12)


def test_bias_shifts_the_cube(tol, make_cube, same_vertex_sets):
    polytope = force_polytope(unit_limb(bias=[0.0, 0.0, 2.0]), tol)
    assert same_vertex_sets(polytope, make_cube(3, center=[0.0, 0.0, 2.0]))


def test_planar_two_link_limb(tol, same_vertex_sets):
    limb = two_link_limb()
    polytope = force_polytope(limb, tol)
    corners = torque_box_vertices(limb.tau_min, limb.tau_max)
    expected = np.array([np.linalg.solve(limb.jacobian.T, -tau) for tau in corners])
    assert polytope.dim == 2
    assert polytope.n_vertices == 4
    assert same_vertex_sets(polytope, expected, atol=1e-6)


def test_zero_bias_polytope_is_symmetric(tol, same_vertex_sets):
    polytope = force_polytope(two_link_limb(), tol)
    assert same_vertex_sets(polytope, -polytope.vertices, atol=1e-6)


def test_larger_torques_give_larger_polytope(tol):
    small = force_polytope(two_link_limb(tau=60.0), tol)
    large = v_to_h(force_polytope(two_link_limb(tau=120.0), tol), tol)
    assert all(contains(large, v, tol) for v in small.vertices)


def test_redundant_limb_forces(tol):
    J = np.array([[1.0, 0.0, 1.0, 0.0], [0.0, 1.0, 0.0, 1.0], [0.0, 0.0, 1.0, 1.0]])
    limb = LimbModel("arm", J, -np.ones(4), np.ones(4))
    forces = extreme_forces(limb, tol)
    assert forces.shape == (16, 3)
    polytope = force_polytope(limb, tol)
    assert polytope.affine_dim == 3


def test_torque_preimage_matches_square_jacobian(tol, same_vertex_sets):
    limb = two_link_limb()
    assert same_vertex_sets(torque_preimage_polytope(limb, tol), force_polytope(limb, tol), atol=1e-6)
    biased = unit_limb(bias=[0.5, 0.0, 0.0])
    assert same_vertex_sets(torque_preimage_polytope(biased, tol), force_polytope(biased, tol))


def test_torque_preimage_of_underactuated_limb(tol):
    # The third joint does not move the foot: its torque row is 0 <= 1
    limb = LimbModel("leg", np.eye(2, 3), -np.ones(3), np.ones(3))
    assert torque_preimage_polytope(limb, tol).n_vertices == 4
    planar = LimbModel("flat", [[1.0, 0.0], [1.0, 0.0]], [-1.0, -1.0], [1.0, 1.0])
    with pytest.raises(InputError):
        torque_preimage_polytope(planar, tol)


# ---------- friction ----------

def test_tangent_frame_is_right_handed():
    for normal in ([0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 0.6, 0.8]):
        t1, t2, n = tangent_frame(normal)
        assert np.allclose(np.cross(t1, t2), n)
        assert np.isclose(np.dot(t1, n), 0.0) and np.isclose(np.dot(t2, n), 0.0)


def test_square_pyramid_rays():
    rays = friction_cone_rays(ContactSpec([0.0, 0.0, 1.0], 1.0, 4))
    expected = np.array([[1, 0, 1], [-1, 0, 1], [0, 1, 1], [0, -1, 1]]) / np.sqrt(2.0)
    assert sorted(map(tuple, np.round(rays, 12))) == sorted(map(tuple, np.round(expected, 12)))


def test_square_pyramid_halfspaces(tol):
    cone = friction_cone_halfspaces(ContactSpec([0.0, 0.0, 1.0], 1.0, 4), tol)
    assert cone.is_cone and cone.n_facets == 4
    # |fx| + |fy| <= fz
    for f, inside in [([0.5, 0.5, 1.0], True), ([0.6, 0.5, 1.0], False), ([0.0, 0.0, -0.1], False)]:
        assert contains(cone, f, tol) is inside


@pytest.mark.parametrize("normal", [[0.0, 0.0, 1.0], [0.0, 0.6, 0.8], [1.0, 0.0, 0.0]])
@pytest.mark.parametrize("num_edges", [3, 4, 8])
def test_rays_lie_on_two_facets(normal, num_edges, tol):
    contact = ContactSpec(normal, 0.7, num_edges)
    rays = friction_cone_rays(contact)
    cone = friction_cone_halfspaces(contact, tol)
    products = cone.normals @ rays.T
    assert np.all(products <= 1e-12)
    assert np.all(np.sum(np.abs(products) <= 1e-12, axis=0) == 2)


def test_pyramid_is_inscribed_in_the_cone():
    contact = ContactSpec([0.0, 0.0, 1.0], 0.5, 6)
    rays = friction_cone_rays(contact)
    tangential = np.linalg.norm(rays[:, :2], axis=1)
    assert np.allclose(tangential, 0.5 * rays[:, 2])


@pytest.mark.parametrize("normal", [[0.0, 0.0, 1.0], [0.0, 0.6, 0.8]])
@pytest.mark.parametrize("num_edges", [4, 6])
def test_cone_vertices_are_the_pyramid_edges(normal, num_edges, tol):
    contact = ContactSpec(normal, 0.5, num_edges)
    generators = h_to_v(friction_cone_halfspaces(contact, tol), tol)
    assert generators.n_vertices == 1 and np.allclose(generators.vertices, 0.0)
    rays = friction_cone_rays(contact)
    assert generators.rays.shape == rays.shape
    distances = np.max(np.abs(generators.rays[:, None, :] - rays[None, :, :]), axis=2)
    assert np.all(distances.min(axis=1) < 1e-9)
    assert np.all(distances.min(axis=0) < 1e-9)


def test_friction_polytope_of_unit_limb(tol, same_vertex_sets):
    polytope = friction_force_polytope(unit_limb(), ContactSpec([0.0, 0.0, 1.0], 1.0, 4), tol)
    expected = [[0, 0, 0], [1, 0, 1], [-1, 0, 1], [0, 1, 1], [0, -1, 1]]
    assert same_vertex_sets(polytope, expected)


def test_friction_polytope_is_empty_when_pulling(tol):
    limb = unit_limb(bias=[0.0, 0.0, -3.0])
    polytope = friction_force_polytope(limb, ContactSpec([0.0, 0.0, 1.0], 1.0, 4), tol)
    assert polytope.is_empty


def test_friction_polytope_checks_inputs(tol):
    contact = ContactSpec([0.0, 0.0, 1.0], 1.0, 4, [1.0, 0.0, 0.0])
    with pytest.raises(InputError):
        friction_force_polytope(unit_limb(), contact, tol)
    with pytest.raises(InputError):
        friction_force_polytope(two_link_limb(), ContactSpec([0.0, 0.0, 1.0], 1.0, 4), tol)


def test_contact_validation():
    with pytest.raises(InputError):
        ContactSpec([0.0, 0.0, 2.0], 1.0, 4)
    with pytest.raises(InputError):
        ContactSpec([0.0, 0.0, 1.0], 0.0, 4)
    with pytest.raises(InputError):
        ContactSpec([0.0, 0.0, 1.0], 1.0, 2)


def test_contact_copy_keeps_its_tolerance():
    loose = Tolerance(eps_rank=1e-3)
    contact = ContactSpec([0.0, 0.0, 1.0005], 0.5, 4, None, loose)
    copy = contact.with_changes(mu=0.8)
    assert copy.mu == 0.8 and copy.tol is loose
    assert np.array_equal(copy.normal, contact.normal)
    with pytest.raises(InputError):
        contact.with_changes(tol=Tolerance())
