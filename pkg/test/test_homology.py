import math

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_smith_normal_form

from forge.complexes.constructions import ChessboardSpec, join_all, multi_chessboard_complex, points, simplex, simplex_boundary
from forge.complexes.simplicial_complex import SimplicialComplex
from forge.config import Config, ResourceLimitError
from forge.homology.boundary import HomologyInputError, boundary_matrix
from forge.homology.homology import homology
from forge.homology.pseudomanifold import NotPureError, pseudomanifold_check
from forge.homology.smith import integer_rank, rank_mod2, smith_normal_form


class TestBoundary:

    def test_boundary_of_boundary_vanishes(self):
        complex_ = simplex(range(4))
        for p in range(2, 4):
            assert boundary_matrix(complex_, p).compose(boundary_matrix(complex_, p - 1)) == {}

    def test_augmentation(self, triangle_boundary):
        matrix = boundary_matrix(triangle_boundary, 0, augmented=True)
        assert matrix.shape == (1, 3)
        assert matrix.to_dense() == [[1, 1, 1]]

    def test_degree_out_of_range(self, triangle_boundary):
        with pytest.raises(HomologyInputError):
            boundary_matrix(triangle_boundary, 2)


class TestSmithNormalForm:

    @pytest.mark.parametrize("matrix, divisors", [
        ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
        ([[2, 0], [0, 3]], [1, 6]),
        ([[0, 0], [0, 0]], []),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], [1, 3]),
    ])
    def test_known_divisors(self, matrix, divisors):
        assert smith_normal_form(matrix) == divisors

    @pytest.mark.parametrize("matrix", [
        [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
        [[4, 6, 0, 2], [6, 9, 3, 0], [0, 3, 6, 3]],
        [[3, 0, 0], [0, 5, 0], [0, 0, 0], [1, 1, 1]],
    ])
    def test_agrees_with_sympy(self, matrix):
        # rank and the product of the invariant factors do not depend on the normalization
        normal = sympy_smith_normal_form(Matrix(matrix), domain=ZZ)
        diagonal = [abs(int(normal[i, i])) for i in range(min(normal.shape)) if normal[i, i] != 0]
        divisors = smith_normal_form(matrix)
        assert len(divisors) == Matrix(matrix).rank()
        assert math.prod(divisors) == math.prod(diagonal)

    def test_divisibility_chain(self):
        assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]

    def test_ranks(self):
        assert integer_rank([[2, 0], [0, 2]]) == 2
        assert rank_mod2(boundary_matrix(simplex_boundary(range(3)), 1)) == 2


class TestHomology:

    def test_circle(self, triangle_boundary):
        report = homology(triangle_boundary)
        assert report.betti == {-1: 0, 0: 0, 1: 1}
        assert report.torsion_free

    def test_board_sphere(self):
        board = multi_chessboard_complex(ChessboardSpec(4, 2, col_caps=(2, 1)))
        report = homology(board)
        assert report.betti_vector(0) == [0, 0, 1]
        assert report.torsion_free
        assert report.vanishes_below(2)

    def test_unreduced_counts_components(self):
        report = homology(points(3), reduced=False)
        assert report.betti == {0: 3}

    def test_projective_plane_has_torsion(self, projective_plane):
        report = homology(projective_plane)
        assert report.betti_vector(0) == [0, 0, 0]
        assert report.torsion[1] == [2]
        assert not report.torsion_free

    def test_projective_plane_mod_two(self, projective_plane):
        report = homology(projective_plane, mod2=True)
        assert report.betti_vector(0) == [0, 1, 1]

    def test_contractible(self):
        assert homology(simplex(range(5))).betti_vector(-1) == [0, 0, 0, 0, 0, 0]

    def test_degenerate_complexes(self):
        assert homology(SimplicialComplex(range(2), [])).betti == {}
        assert homology(SimplicialComplex(range(2), [[]])).betti == {-1: 1}

    def test_euler_characteristic(self):
        octahedron = join_all([points(2), points(2), points(2)])
        assert homology(octahedron, reduced=False).euler_characteristic() == 2

    def test_face_limit(self, monkeypatch):
        monkeypatch.setattr(Config, "max_faces_exact", 5)
        with pytest.raises(ResourceLimitError):
            homology(simplex_boundary(range(4)))
        assert homology(simplex_boundary(range(4)), mod2=True).betti_vector(0) == [0, 0, 1]

    def test_report_json(self, triangle_boundary):
        document = homology(triangle_boundary).to_json()
        assert document["betti"] == {"-1": 0, "0": 0, "1": 1}
        assert document["coefficients"] == "Z"


class TestPseudomanifold:

    def test_sphere_is_closed_and_orientable(self):
        board = multi_chessboard_complex(ChessboardSpec(4, 2, col_caps=(2, 1)))
        report = pseudomanifold_check(board)
        assert report.closed_orientable
        assert report.dimension == 2

    def test_projective_plane_is_not_orientable(self, projective_plane):
        report = pseudomanifold_check(projective_plane)
        assert report.ridge_regular and report.strongly_connected
        assert not report.orientable

    def test_disk_has_free_ridges(self):
        report = pseudomanifold_check(simplex(range(3)))
        assert not report.ridge_regular

    def test_impure_complex(self):
        with pytest.raises(NotPureError):
            pseudomanifold_check(SimplicialComplex(range(4), [[0, 1, 2], [2, 3]]))
