import itertools

import pytest

from forge.complexes.constructions import (
    ChessboardSpec,
    alexander_dual,
    bier_sphere,
    chessboard_complex,
    deleted_join,
    deleted_join_quotient_map,
    double_rook_board,
    join,
    join_all,
    multi_chessboard_complex,
    multipartite_complex,
    points,
    quotient_map_3to2,
    seven_point_target,
    simplex,
    simplex_boundary,
    skeleton,
    slot_permutation,
    transpose_chessboard,
)
from forge.complexes.simplicial_complex import EMPTY_FACE, InvalidComplexError, SimplicialComplex
from forge.complexes.subdivision import barycentric_subdivision
from forge.equivariant.action import board_sphere


def board() -> SimplicialComplex:
    return multi_chessboard_complex(double_rook_board())


class TestSimplicialComplex:

    def test_facets_are_reduced_to_maximal_faces(self):
        complex_ = SimplicialComplex(range(3), [[0, 1], [0], [1, 2], [2]])
        assert complex_.facet_lists() == [[0, 1], [1, 2]]

    def test_faces_are_downward_closed(self):
        complex_ = simplex(range(4))
        assert len(complex_.faces) == 16
        assert complex_.is_downward_closed()

    def test_void_and_empty_face_complex_differ(self):
        void = SimplicialComplex(range(2), [])
        empty = SimplicialComplex(range(2), [[]])
        assert void.is_void and void.dimension == -2
        assert not empty.is_void and empty.dimension == -1
        assert empty.faces == {EMPTY_FACE}

    def test_vertices_outside_ground_set_are_rejected(self):
        with pytest.raises(InvalidComplexError):
            SimplicialComplex(range(2), [[0, 5]])

    def test_f_vector_and_euler_characteristic(self):
        octahedron = join_all([points(2), points(2), points(2)])
        assert octahedron.f_vector() == [1, 6, 12, 8]
        assert octahedron.euler_characteristic() == 2

    def test_cofacets(self, triangle_boundary):
        assert sorted(sorted(face) for face in triangle_boundary.cofacets(frozenset({0}))) == [[0, 1], [0, 2]]


class TestMultipartite:

    def test_bipartite_graph(self):
        complex_ = multipartite_complex([3, 3])
        assert complex_.f_vector() == [1, 6, 9]

    def test_single_point(self):
        assert len(multipartite_complex([1]).facets) == 1

    def test_ten_vertex_complex(self):
        complex_ = multipartite_complex([3, 3, 3, 1])
        assert len(complex_.vertices) == 10
        assert len(complex_.facets) == 27
        assert complex_.is_pure() and complex_.dimension == 3

    def test_faces_are_the_rainbow_sets(self):
        complex_ = multipartite_complex([2, 3])
        assert len(complex_.faces) == 3 * 4

    @pytest.mark.parametrize("sizes", [[], [2, 0]])
    def test_invalid_sizes(self, sizes):
        with pytest.raises(InvalidComplexError):
            multipartite_complex(sizes)


class TestChessboards:

    def test_two_by_two(self):
        complex_ = chessboard_complex(2, 2)
        assert complex_.facet_lists() == [[0, 3], [1, 2]]

    def test_single_row(self):
        complex_ = chessboard_complex(1, 5)
        assert complex_.dimension == 0
        assert len(complex_.facets) == 5

    def test_three_by_four(self):
        complex_ = chessboard_complex(3, 4)
        assert complex_.is_pure() and complex_.dimension == 2
        assert len(complex_.facets) == 24

    def test_board_sphere_f_vector(self):
        complex_ = board()
        assert complex_.f_vector() == [1, 8, 18, 12]
        assert complex_.is_pure()
        assert complex_.euler_characteristic() == 2

    def test_unit_caps_give_the_chessboard(self):
        assert multi_chessboard_complex(ChessboardSpec(3, 4)) == chessboard_complex(3, 4)

    def test_caps_that_never_bind(self):
        complex_ = multi_chessboard_complex(ChessboardSpec(2, 2, row_caps=(2, 2), col_caps=(2, 2)))
        assert complex_ == simplex(range(4))

    def test_transposition(self):
        assert chessboard_complex(2, 3).relabel(transpose_chessboard(2, 3)) == chessboard_complex(3, 2)

    def test_invalid_caps(self):
        with pytest.raises(InvalidComplexError):
            ChessboardSpec(2, 2, row_caps=(1,))
        with pytest.raises(InvalidComplexError):
            ChessboardSpec(2, 2, col_caps=(0, 1))


class TestJoins:

    def test_point_join_point_is_an_edge(self):
        assert join(points(1), points(1)).facet_lists() == [[0, 1]]

    def test_join_of_point_sets_is_multipartite(self):
        assert join(points(3), points(3)) == multipartite_complex([3, 3])

    def test_octahedron(self):
        assert len(join_all([points(2), points(2), points(2)]).facets) == 8

    def test_deleted_join_of_a_point(self):
        assert deleted_join(points(1), 2).facet_lists() == [[0], [1]]

    def test_deleted_join_of_an_edge_is_a_four_cycle(self):
        complex_ = deleted_join(simplex(range(2)), 2)
        assert complex_.facet_lists() == [[0, 2], [0, 3], [1, 2], [1, 3]]
        assert all(len([f for f in complex_.facets if v in f]) == 2 for v in range(4))

    def test_deleted_join_identity(self):
        left = deleted_join(multipartite_complex([3, 3, 3, 1]), 4)
        rooks = chessboard_complex(3, 4)
        right = join_all([rooks, rooks, rooks, points(4)])
        assert left.facet_lists() == right.facet_lists()

    def test_slot_permutations_preserve_the_deleted_join(self):
        complex_ = deleted_join(multipartite_complex([2, 2]), 3)
        for perm in itertools.permutations(range(3)):
            assert complex_.relabel(slot_permutation(4, 3, perm)) == complex_

    def test_deleted_join_needs_two_slots(self):
        with pytest.raises(InvalidComplexError):
            deleted_join(points(2), 1)


class TestDuals:

    def test_dual_of_the_one_skeleton(self):
        tetrahedron = simplex(range(4))
        assert alexander_dual(skeleton(tetrahedron, 1)) == skeleton(tetrahedron, 0)

    def test_dual_of_a_boundary_is_the_empty_face(self):
        dual = alexander_dual(simplex_boundary(range(4)))
        assert dual.faces == {EMPTY_FACE}

    def test_dual_of_a_full_simplex_is_void(self):
        assert alexander_dual(simplex(range(3))).is_void

    def test_double_dual(self):
        complex_ = SimplicialComplex(range(5), [[0, 1, 2], [2, 3], [3, 4], [1, 4]])
        assert alexander_dual(alexander_dual(complex_)) == complex_

    def test_bier_sphere_of_the_one_skeleton_is_the_board(self):
        assert bier_sphere(skeleton(simplex(range(4)), 1)).facet_lists() == board().facet_lists()

    def test_bier_sphere_of_a_triangle_boundary(self, triangle_boundary):
        sphere = bier_sphere(triangle_boundary)
        assert sphere.dimension == 1
        assert len(sphere.facets) == 3

    def test_bier_sphere_of_two_points(self):
        sphere = bier_sphere(points(2))
        assert sphere.dimension == 0
        assert len(sphere.facets) == 2

    @pytest.mark.parametrize("complex_", [simplex(range(3)), SimplicialComplex(range(3), [[]])])
    def test_degenerate_bier_input(self, complex_):
        with pytest.raises(InvalidComplexError):
            bier_sphere(complex_)


class TestSkeleta:

    def test_one_skeleton_of_the_tetrahedron(self):
        graph = skeleton(simplex(range(4)), 1)
        assert graph.f_vector() == [1, 4, 6]

    def test_top_skeleton_is_the_complex(self):
        complex_ = board()
        assert skeleton(complex_, complex_.dimension) == complex_

    def test_zero_skeleton(self):
        assert skeleton(simplex(range(4)), 0) == points(4)


class TestQuotient:

    def test_vertex_map(self):
        target, vertex_map = quotient_map_3to2(multipartite_complex([3, 3, 3, 1]))
        assert target == multipartite_complex([2, 2, 2, 1])
        assert set(vertex_map.values()) == set(range(7))
        assert {vertex_map[v] for v in (2, 5, 8, 9)} == {1, 3, 5, 6}

    def test_faces_map_to_faces(self):
        source = multipartite_complex([3, 3, 3, 1])
        target, vertex_map = quotient_map_3to2(source)
        assert all(frozenset(vertex_map[v] for v in face) in target.faces for face in source.facets)

    def test_wrong_input(self):
        with pytest.raises(InvalidComplexError):
            quotient_map_3to2(multipartite_complex([3, 3]))

    def test_induced_map_on_deleted_joins_is_onto_facets(self):
        rooks = chessboard_complex(3, 4)
        source = join_all([rooks, rooks, rooks, points(4)])
        target = seven_point_target()
        vertex_map = deleted_join_quotient_map()
        images = {frozenset(vertex_map[v] for v in facet) for facet in source.facets}
        assert images <= set(target.facets)
        assert images == set(target.facets)

    def test_target_boards_share_the_board_sphere_orientation(self):
        target = seven_point_target()
        for color in range(3):
            offset = 8 * color
            projected = [[v - offset for v in facet if offset <= v < offset + 8] for facet in target.facets]
            assert SimplicialComplex(range(8), projected) == board_sphere()
        wide = multi_chessboard_complex(ChessboardSpec(2, 4, row_caps=(2, 1)))
        assert wide.relabel(transpose_chessboard(2, 4)) == board()


class TestSubdivision:

    def test_subdivided_triangle(self):
        subdivision, carriers = barycentric_subdivision(simplex(range(3)))
        assert len(carriers) == 7
        assert len(subdivision.facets) == 6
        assert subdivision.euler_characteristic() == 1

    def test_subdivided_board_sphere(self):
        subdivision, carriers = barycentric_subdivision(board())
        assert len(subdivision.vertices) == 8 + 18 + 12
        assert len(subdivision.facets) == 12 * 6
        assert subdivision.euler_characteristic() == 2
