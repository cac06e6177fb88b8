# tests/test_polytope_kernel.py
import numpy as np
import pytest

from utils.classes import VPolytope, HPolytope, Tolerance
from utils.errors import InputError
from polytope_kernel.lp_solve import solve_lp
from polytope_kernel.convex_hull import convex_hull, canonical_order
from polytope_kernel.halfspaces import canonical_halfspaces
from polytope_kernel.conversion import v_to_h, h_to_v
from polytope_kernel.minkowski import minkowski_sum, minkowski_fold
from polytope_kernel.intersection import intersect, remove_redundancy, stack_halfspaces
from polytope_kernel.containment import contains, support, is_extreme_point
from polytope_kernel.chebyshev import chebyshev_center


def box_halfspaces(low, high, tol):
    low = np.asarray(low, dtype=float)
    high = np.asarray(high, dtype=float)
    d = low.shape[0]
    return canonical_halfspaces(d, np.vstack([np.eye(d), -np.eye(d)]), np.concatenate([high, -low]), tol)


# ---------- lp_solve ----------

def test_lp_statuses():
    status, x, value = solve_lp([1.0], [[-1.0]], [-2.0])
    assert status == "optimal" and value == pytest.approx(2.0)
    assert solve_lp([1.0], [[1.0], [-1.0]], [0.0, -1.0])[0] == "infeasible"
    assert solve_lp([-1.0], [[-1.0]], [0.0])[0] == "unbounded"


# ---------- convex_hull ----------

def test_cube_hull_drops_interior_points(make_cube, tol):
    corners = make_cube(3).vertices
    hull = convex_hull(np.vstack([corners, np.zeros((1, 3)), [[0.5, 0.5, 0.5]]]), tol)
    assert hull.n_vertices == 8
    assert hull.affine_dim == 3
    assert hull.is_bounded


def test_flat_square_in_3d(tol):
    square = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0], [0.5, 0.5, 0]]
    hull = convex_hull(square, tol)
    assert hull.n_vertices == 4
    assert hull.affine_dim == 2


def test_segment_and_point(tol):
    segment = convex_hull([[0.0], [2.0], [1.0]], tol)
    assert segment.vertices.tolist() == [[0.0], [2.0]]
    assert segment.affine_dim == 1
    point = convex_hull([[1.0, 2.0], [1.0, 2.0 + 1e-12]], tol)
    assert point.n_vertices == 1
    assert point.affine_dim == 0


def test_hull_is_canonical_under_permutation(make_cube, tol):
    rng = np.random.default_rng(3)
    points = rng.normal(size=(40, 4))
    first = convex_hull(points, tol)
    second = convex_hull(points[rng.permutation(40)], tol)
    assert np.array_equal(first.vertices, second.vertices)


def test_hull_rejects_bad_input(tol):
    with pytest.raises(InputError):
        convex_hull([[0.0, 1.0], [1.0]], tol)
    with pytest.raises(InputError):
        convex_hull(np.zeros((3, 7)), tol)
    with pytest.raises(InputError):
        convex_hull([[0.0, np.nan]], tol)


def test_canonical_order_is_lexicographic(tol):
    points = np.array([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]])
    assert points[canonical_order(points, tol)].tolist() == [[0.0, 0.0], [0.0, 1.0], [1.0, 0.0]]


def test_cross_polytope_hull_in_6d(tol):
    points = np.vstack([np.eye(6), -np.eye(6), np.zeros((1, 6))])
    hull = convex_hull(points, tol)
    assert hull.n_vertices == 12
    assert hull.affine_dim == 6
    assert not np.any(np.all(np.abs(hull.vertices) < 1e-12, axis=1))


# ---------- conversions ----------

def test_cube_v_to_h(make_cube, tol):
    cube = v_to_h(make_cube(3), tol)
    assert cube.n_facets == 6
    assert np.allclose(cube.offsets, 1.0, atol=1e-9)
    normals = {tuple(np.round(n).astype(int)) for n in cube.normals}
    assert normals == {(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)}
    assert cube.equality_pairs(tol).shape[0] == 0


def test_cube_h_to_v(make_cube, same_vertex_sets, tol):
    vertices = h_to_v(box_halfspaces([-1, -1, -1], [1, 1, 1], tol), tol)
    assert vertices.n_vertices == 8
    assert same_vertex_sets(vertices, make_cube(3))


def test_flat_polytope_gets_equality_pair(tol):
    square = VPolytope(3, [[0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]], None, 2)
    h = v_to_h(square, tol)
    pairs = h.equality_pairs(tol)
    assert pairs.shape[0] == 1
    assert h.n_facets == 6
    back = h_to_v(h, tol)
    assert back.affine_dim == 2
    assert back.n_vertices == 4


def test_empty_set_conversions(tol):
    empty = intersect(box_halfspaces([0, 0], [1, 1], tol), box_halfspaces([2, 2], [3, 3], tol), tol)
    assert empty.is_empty
    v = h_to_v(empty, tol)
    assert v.is_empty and v.affine_dim == -1
    assert v_to_h(VPolytope.empty(2), tol).is_empty


def test_cone_round_trip(tol):
    rays = np.array([[1.0, 0.0, 1.0], [-1.0, 0.0, 1.0], [0.0, 1.0, 1.0], [0.0, -1.0, 1.0]])
    cone = VPolytope(3, np.zeros((1, 3)), rays, 3)
    h = v_to_h(cone, tol)
    assert h.is_cone
    assert h.n_facets == 4
    back = h_to_v(h, tol)
    assert back.n_vertices == 1 and np.allclose(back.vertices, 0.0)
    unit = rays / np.linalg.norm(rays, axis=1)[:, None]
    distances = np.max(np.abs(back.rays[:, None, :] - unit[None, :, :]), axis=2)
    assert back.rays.shape[0] == 4
    assert np.all(distances.min(axis=1) < 1e-9)


def test_cone_with_lineality(tol):
    # {x : z >= 0} in 3D: the plane directions come back as opposite rays
    halfspace = canonical_halfspaces(3, [[0.0, 0.0, -1.0]], [0.0], tol)
    v = h_to_v(halfspace, tol)
    assert v.affine_dim == 3
    assert np.all(v.rays[:, 2] >= -1e-12)
    assert np.max(v.rays[:, 2]) > 1 - 1e-9
    flat = v.rays[np.abs(v.rays[:, 2]) < 1e-9]
    assert np.linalg.matrix_rank(flat, tol=1e-9) == 2
    for ray in flat:
        assert np.min(np.max(np.abs(flat + ray), axis=1)) < 1e-9


def test_unbounded_polyhedron_is_homogenized(tol):
    # x >= 0, y >= 0, x + y >= 1
    P = canonical_halfspaces(2, [[-1.0, 0.0], [0.0, -1.0], [-1.0, -1.0]], [0.0, 0.0, -1.0], tol)
    v = h_to_v(P, tol)
    assert sorted(map(tuple, np.round(v.vertices, 9))) == [(0.0, 1.0), (1.0, 0.0)]
    assert sorted(map(tuple, np.round(v.rays, 9))) == [(0.0, 1.0), (1.0, 0.0)]


def test_v_to_h_rejects_unbounded_non_cone(tol):
    shifted = VPolytope(2, [[1.0, 1.0]], [[1.0, 0.0]], 1)
    with pytest.raises(InputError):
        v_to_h(shifted, tol)


def test_infeasible_system_has_no_vertices(tol):
    # x >= 0, y >= 0, x + y <= -1
    P = canonical_halfspaces(2, [[-1.0, 0.0], [0.0, -1.0], [1.0, 1.0]], [0.0, 0.0, -1.0], tol)
    v = h_to_v(P, tol)
    assert v.is_empty
    assert v.affine_dim == -1


# ---------- Minkowski sums ----------

def test_minkowski_of_squares(make_cube, same_vertex_sets, tol):
    total = minkowski_sum(make_cube(2), make_cube(2), tol)
    assert same_vertex_sets(total, make_cube(2, half=2.0))


def test_minkowski_of_segments_is_parallelogram(same_vertex_sets, tol):
    a = convex_hull([[0.0, 0.0], [1.0, 0.0]], tol)
    b = convex_hull([[0.0, 0.0], [1.0, 1.0]], tol)
    total = minkowski_sum(a, b, tol)
    assert same_vertex_sets(total, [[0, 0], [1, 0], [1, 1], [2, 1]])
    assert total.affine_dim == 2


def test_minkowski_fold(make_cube, same_vertex_sets, tol):
    total = minkowski_fold([make_cube(3)] * 3, tol)
    assert same_vertex_sets(total, make_cube(3, half=3.0))
    with pytest.raises(InputError):
        minkowski_fold([], tol)
    with pytest.raises(InputError):
        minkowski_sum(make_cube(2), make_cube(3), tol)


def test_minkowski_with_empty(make_cube, tol):
    assert minkowski_sum(make_cube(2), VPolytope.empty(2), tol).is_empty


# ---------- intersection and redundancy ----------

def test_intersect_boxes(same_vertex_sets, tol):
    result = intersect(box_halfspaces([-1, -1], [1, 1], tol), box_halfspaces([0, 0], [2, 2], tol), tol)
    assert result.n_facets == 4
    assert same_vertex_sets(h_to_v(result, tol), [[0, 0], [1, 0], [0, 1], [1, 1]])


def test_intersect_cube_with_shifted_cube(same_vertex_sets, tol):
    result = intersect(box_halfspaces([-1] * 3, [1] * 3, tol), box_halfspaces([0] * 3, [2] * 3, tol), tol)
    assert result.n_facets == 6
    corners = np.array(np.meshgrid([0, 1], [0, 1], [0, 1], indexing="ij")).reshape(3, -1).T
    assert same_vertex_sets(h_to_v(result, tol), corners)


def test_intersect_with_loose_halfspace_gives_the_cube_back(tol):
    cube = box_halfspaces([-1] * 3, [1] * 3, tol)
    loose = canonical_halfspaces(3, [[1.0, 0.0, 0.0]], [5.0], tol)
    result = intersect(cube, loose, tol)
    assert result.n_facets == 6
    assert np.allclose(result.normals, cube.normals)
    assert np.allclose(result.offsets, cube.offsets)


@pytest.mark.parametrize("method", ["qhull", "lp"])
def test_remove_redundancy_with_degenerate_vertices(method, tol):
    # Octahedron: four facets meet at every vertex
    signs = np.array(np.meshgrid([-1, 1], [-1, 1], [-1, 1], indexing="ij")).reshape(3, -1).T.astype(float)
    rows = np.vstack([signs, [[0.0, 0.0, 1.0]]])
    offsets = np.append(np.ones(8), 3.0)
    reduced = remove_redundancy(canonical_halfspaces(3, rows, offsets, tol), tol, method)
    assert reduced.n_facets == 8
    assert np.allclose(reduced.offsets, 1.0 / np.sqrt(3.0))


def test_remove_redundancy_on_pyramid_inside_a_box(tol):
    # |x| + |y| <= z clipped by the box [-1, 1]^3: five planes meet at the apex
    pyramid = [[1.0, 1.0, -1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, -1.0]]
    stacked = stack_halfspaces(canonical_halfspaces(3, pyramid, np.zeros(4), tol),
                               box_halfspaces([-1] * 3, [1] * 3, tol), tol)
    reduced = remove_redundancy(stacked, tol, "qhull")
    assert reduced.n_facets == 5
    assert reduced.equality_pairs(tol).shape[0] == 0


@pytest.mark.parametrize("method", ["qhull", "lp"])
def test_remove_redundancy(method, tol):
    rows = np.vstack([np.eye(3), -np.eye(3), [[1.0, 0.0, 0.0], [1.0, 1.0, 1.0]]])
    offsets = np.array([1, 1, 1, 1, 1, 1, 5, 10], dtype=float)
    raw = HPolytope(3, rows / np.linalg.norm(rows, axis=1)[:, None], offsets / np.linalg.norm(rows, axis=1))
    reduced = remove_redundancy(raw, tol, method)
    assert reduced.n_facets == 6
    assert np.allclose(reduced.offsets, 1.0)


def test_remove_redundancy_finds_implicit_equality(tol):
    # z <= 0 and -2 z <= 0: not an explicit opposite pair
    rows = np.vstack([np.eye(3), -np.eye(3)])
    rows[5, 2] = -2.0
    offsets = np.array([1.0, 1.0, 0.0, 1.0, 1.0, 0.0])
    assert HPolytope(3, rows, offsets).equality_pairs(tol).shape[0] == 0
    reduced = remove_redundancy(HPolytope(3, rows, offsets), tol)
    assert reduced.equality_pairs(tol).shape[0] == 1
    assert h_to_v(reduced, tol).affine_dim == 2


def test_remove_redundancy_rejects_unknown_method(tol):
    with pytest.raises(InputError):
        remove_redundancy(box_halfspaces([0], [1], tol), tol, "simplex")


def test_stack_keeps_redundant_rows(tol):
    stacked = stack_halfspaces(box_halfspaces([-1, -1], [1, 1], tol), box_halfspaces([-2, -2], [2, 2], tol), tol)
    assert stacked.n_facets == 4  # same normals: the tighter offset wins
    assert np.allclose(stacked.offsets, 1.0)


# ---------- containment, support, Chebyshev ----------

def test_contains_both_forms(make_cube, tol):
    cube_v = make_cube(3)
    cube_h = v_to_h(cube_v, tol)
    for x, expected in [([0, 0, 0], True), ([1, 1, 1], True), ([1 + 1e-9, 0, 0], True), ([1.1, 0, 0], False)]:
        assert contains(cube_h, x, tol) is expected
        assert contains(cube_v, x, tol) is expected
    with pytest.raises(InputError):
        contains(cube_h, [0, 0], tol)


def test_support(make_cube, tol):
    cube = make_cube(3)
    assert support(cube, [1.0, 1.0, 0.0]) == pytest.approx(2.0)
    with pytest.raises(InputError):
        support(cube, [0.0, 0.0, 0.0])
    with pytest.raises(InputError):
        support(VPolytope.empty(3), [1.0, 0.0, 0.0])
    cone = VPolytope(2, [[0.0, 0.0]], [[1.0, 0.0]], 1)
    assert support(cone, [1.0, 0.0]) == np.inf


def test_is_extreme_point(make_cube, tol):
    points = np.vstack([make_cube(2).vertices, [[0.0, 0.0]]])
    assert is_extreme_point(points, 0, tol)
    assert not is_extreme_point(points, 4, tol)


def test_chebyshev(make_cube, tol):
    result = chebyshev_center(box_halfspaces([-1] * 6, [1] * 6, tol), tol)
    assert result.status == "optimal"
    assert result.radius == pytest.approx(1.0)
    assert np.allclose(result.center, 0.0, atol=1e-9)
    point = v_to_h(convex_hull([[0.5, 0.5, 0.5]], tol), tol)
    assert chebyshev_center(point, tol).radius == 0.0
    assert chebyshev_center(HPolytope.empty(3), tol).status == "empty"
    halfplane = canonical_halfspaces(2, [[1.0, 0.0]], [0.0], tol)
    unbounded = chebyshev_center(halfplane, tol)
    assert unbounded.status == "unbounded" and unbounded.radius == np.inf


def test_chebyshev_of_flat_set_measures_within_its_plane(tol):
    square = v_to_h(VPolytope(3, [[-1, -1, 2], [1, -1, 2], [-1, 1, 2], [1, 1, 2]], None, 2), tol)
    result = chebyshev_center(square, tol)
    assert result.radius == pytest.approx(1.0)
    assert np.allclose(result.center, [0.0, 0.0, 2.0], atol=1e-9)


def test_chebyshev_of_a_rectangle(tol):
    result = chebyshev_center(box_halfspaces([0, -2], [1, 2], tol), tol)
    assert result.status == "optimal"
    assert result.radius == pytest.approx(0.5)
    assert result.center[0] == pytest.approx(0.5)


def test_tolerance_validation():
    with pytest.raises(InputError):
        Tolerance(eps_contain=-1.0)
    with pytest.raises(InputError):
        Tolerance(eps_contain=1e-12)
