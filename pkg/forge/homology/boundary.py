from typing import Dict, List

from forge.complexes.simplicial_complex import Face, SimplicialComplex


class HomologyInputError(ValueError):
    pass


class BoundaryMatrix:
    """
    Sparse integer boundary matrix; rows are the (p-1)-faces and columns the p-faces,
    both in canonical order. Column j maps row index to entry.
    """

    def __init__(self, p: int, row_faces: List[Face], col_faces: List[Face], columns: Dict[int, Dict[int, int]]) -> None:
        self.p = p
        self.row_faces = row_faces
        self.col_faces = col_faces
        self.columns = columns

    @property
    def shape(self):
        return len(self.row_faces), len(self.col_faces)

    def to_dense(self) -> List[List[int]]:
        dense = [[0] * len(self.col_faces) for _ in self.row_faces]
        for j, column in self.columns.items():
            for i, value in column.items():
                dense[i][j] = value
        return dense

    def compose(self, lower: "BoundaryMatrix") -> Dict[int, Dict[int, int]]:
        """
        Sparse product lower * self; empty for boundary matrices of a complex.
        """
        product: Dict[int, Dict[int, int]] = {}
        for j, column in self.columns.items():
            accumulated: Dict[int, int] = {}
            for k, value in column.items():
                for i, other in lower.columns.get(k, {}).items():
                    accumulated[i] = accumulated.get(i, 0) + value * other
            accumulated = {i: value for i, value in accumulated.items() if value}
            if accumulated:
                product[j] = accumulated
        return product


def boundary_sign(face: Face, vertex: int) -> int:
    index = sorted(face).index(vertex)
    return -1 if index % 2 else 1


def boundary_matrix(complex_: SimplicialComplex, p: int, augmented: bool = False) -> BoundaryMatrix:
    """
    Simplicial boundary ∂_p with orientation from the sorted vertex order.
    With augmented=True, p = 0 gives the augmentation onto the empty face.
    """
    lowest = 0 if augmented else 1
    if p < lowest or p > complex_.dimension:
        raise HomologyInputError(f"Boundary degree {p} out of range for a complex of dimension {complex_.dimension}")
    row_faces = complex_.faces_of_dim(p - 1)
    col_faces = complex_.faces_of_dim(p)
    row_index = {face: i for i, face in enumerate(row_faces)}
    columns: Dict[int, Dict[int, int]] = {}
    for j, face in enumerate(col_faces):
        ordered = sorted(face)
        columns[j] = {row_index[face - {v}]: (-1 if i % 2 else 1) for i, v in enumerate(ordered)}
    return BoundaryMatrix(p, row_faces, col_faces, columns)
