import pytest

from forge.complexes.constructions import points, simplex_boundary
from forge.complexes.simplicial_complex import EMPTY_FACE, SimplicialComplex
from forge.complexes.subdivision import barycentric_subdivision
from forge.config import Config, ResourceLimitError
from forge.equivariant.action import (
    KLEIN_ON_FOUR,
    InvalidActionError,
    cube_model,
    fixed_subcomplex,
    klein_actions,
    lift_action,
    named_group_action,
    octahedron_model,
    orbit_types,
    trivial_action,
)
from forge.equivariant.search import (
    check_equivariance,
    enumerate_equivariant_maps,
    equivariant_iso_search,
    radial_approximation,
    reference_composite,
)
from forge.equivariant.simplicial_map import DegreeError, InvalidMapError, SimplicialMap, degree, identity_map, join_of_maps


@pytest.fixture(scope="module")
def klein():
    return klein_actions()


class TestActions:

    def test_klein_actions_are_valid(self, klein):
        board, tetrahedron = klein
        assert board.order == tetrahedron.order == 4
        assert board.is_homomorphism() and board.is_simplicial()
        assert tetrahedron.vertex_orbits() == [[0, 1, 2, 3]]

    def test_board_orbits_follow_the_columns(self, klein):
        board, _ = klein
        assert board.vertex_orbits() == [[0, 2, 4, 6], [1, 3, 5, 7]]

    def test_models_are_valid(self):
        assert cube_model().complex.f_vector() == [1, 8, 18, 12]
        assert octahedron_model().complex.f_vector() == [1, 6, 12, 8]

    def test_stabilizers(self, klein):
        _, tetrahedron = klein
        assert tetrahedron.stabilizer({0, 1}) == frozenset({"1", "a"})
        assert tetrahedron.vertex_stabilizer(0) == frozenset({"1"})

    def test_orbit_type_gcd(self, klein):
        board, tetrahedron = klein
        assert orbit_types(board).gcd == 2
        assert orbit_types(tetrahedron).gcd == 2
        assert not orbit_types(board).free

    def test_fixed_subcomplex(self, klein):
        _, tetrahedron = klein
        assert fixed_subcomplex(tetrahedron, {"1", "a"}).faces == {EMPTY_FACE}
        assert fixed_subcomplex(octahedron_model(), {"1", "a"}).facet_lists() == [[0], [1]]
        with pytest.raises(InvalidActionError):
            fixed_subcomplex(tetrahedron, {"a"})

    def test_lifted_action_fixes_edge_barycenters(self, klein):
        board, _ = klein
        subdivision, carriers = barycentric_subdivision(board.complex)
        lifted = lift_action(board, subdivision, carriers)
        barycenter = carriers.index(frozenset({0, 2}))
        assert lifted.apply("a", barycenter) == barycenter

    def test_non_simplicial_action(self):
        path = SimplicialComplex(range(4), [[0, 1], [1, 2], [2, 3]])
        permutations = {g: list(perm) for g, perm in KLEIN_ON_FOUR.items()}
        with pytest.raises(InvalidActionError):
            named_group_action("klein4", path, permutations)

    def test_named_actions(self, klein):
        _, tetrahedron = klein
        permutations = {g: list(perm) for g, perm in KLEIN_ON_FOUR.items()}
        action = named_group_action("klein4", simplex_boundary(range(4)), permutations)
        assert action.elements == tetrahedron.elements
        assert named_group_action("trivial", points(2)).order == 1
        with pytest.raises(InvalidActionError):
            named_group_action("klein4", points(4))
        with pytest.raises(AttributeError):
            named_group_action("dihedral", points(4))


class TestDegree:

    def test_double_cover_of_the_circle(self, triangle_boundary):
        hexagon = SimplicialComplex(range(6), [[i, (i + 1) % 6] for i in range(6)])
        cover = SimplicialMap(hexagon, triangle_boundary, {v: v % 3 for v in range(6)})
        assert abs(degree(cover)) == 2

    def test_antipodal_swap_of_two_points(self):
        assert degree(SimplicialMap(points(2), points(2), {0: 1, 1: 0})) == -1

    def test_identity(self):
        sphere = cube_model().complex
        assert degree(identity_map(sphere)) == 1

    def test_constant_map_has_degree_zero(self, triangle_boundary):
        assert degree(SimplicialMap(triangle_boundary, triangle_boundary, {0: 0, 1: 0, 2: 0})) == 0

    def test_join_of_maps(self):
        swap = SimplicialMap(points(2), points(2), {0: 1, 1: 0})
        identity = identity_map(points(2))
        assert degree(join_of_maps(swap, identity)) == -1
        assert degree(join_of_maps(swap, swap)) == 1

    def test_dimension_mismatch(self, triangle_boundary):
        with pytest.raises(DegreeError):
            degree(SimplicialMap(points(2), triangle_boundary, {0: 0, 1: 1}))

    def test_non_simplicial_map(self):
        path = SimplicialComplex(range(3), [[0, 1], [1, 2]])
        with pytest.raises(InvalidMapError):
            SimplicialMap(path, path, {0: 0, 1: 2, 2: 1}).validate()
        with pytest.raises(InvalidMapError):
            SimplicialMap(path, path, {0: 0, 1: 1})


class TestEquivariantSearch:

    def test_board_is_the_cube_sphere(self, klein):
        board, _ = klein
        cube = cube_model()
        iso = equivariant_iso_search(board, cube)
        assert iso is not None
        assert check_equivariance(iso, board, cube)
        assert sorted(iso.vertex_map.values()) == list(range(8))

    def test_no_isomorphism_onto_the_octahedron(self, klein):
        board, _ = klein
        assert equivariant_iso_search(board, octahedron_model()) is None

    def test_level_zero_maps_have_odd_degree(self, klein):
        board, tetrahedron = klein
        scan = enumerate_equivariant_maps(board, tetrahedron, level=0)
        assert len(scan.records) == 16
        assert None not in scan.degrees
        assert scan.parities == [1]
        assert scan.parity_congruent
        assert all(check_equivariance(record.map, board, tetrahedron) for record in scan.records)

    def test_level_one_is_empty(self, klein):
        board, tetrahedron = klein
        scan = enumerate_equivariant_maps(board, tetrahedron, level=1)
        assert scan.empty
        assert scan.to_json()["maps"] == []

    def test_trivial_group_gives_both_parities(self, triangle_boundary):
        action = trivial_action(triangle_boundary)
        scan = enumerate_equivariant_maps(action, trivial_action(simplex_boundary(range(3))))
        assert len(scan.records) == 27
        assert scan.parities == [0, 1]
        assert not scan.parity_congruent
        assert sorted(scan.degrees).count(0) == 21

    def test_unknown_level(self, klein):
        board, tetrahedron = klein
        with pytest.raises(AttributeError):
            enumerate_equivariant_maps(board, tetrahedron, level=2)

    def test_groups_must_agree(self, klein, triangle_boundary):
        board, _ = klein
        with pytest.raises(AttributeError):
            enumerate_equivariant_maps(board, trivial_action(triangle_boundary))

    def test_candidate_limit(self, klein, monkeypatch):
        board, tetrahedron = klein
        monkeypatch.setattr(Config, "max_map_candidates", 10)
        with pytest.raises(ResourceLimitError):
            enumerate_equivariant_maps(board, tetrahedron)

    def test_reference_composite_has_unit_degree(self, klein):
        _, tetrahedron = klein
        iso, composite = reference_composite()
        assert composite.is_simplicial()
        assert abs(degree(composite)) == 1
        assert check_equivariance(radial_approximation(), cube_model(), tetrahedron)
