import itertools
import logging
from typing import Dict, FrozenSet, List, Sequence, Tuple

from forge.complexes.simplicial_complex import Face, InvalidComplexError, SimplicialComplex

logger = logging.getLogger("forge")


class ChessboardSpec:
    """
    Board of rows x cols cells with per-row and per-column rook caps.
    Cell (row, col) is the vertex row * cols + col.
    """

    def __init__(self, rows: int, cols: int, row_caps: Sequence[int] = None, col_caps: Sequence[int] = None) -> None:
        if rows < 1 or cols < 1:
            raise InvalidComplexError(f"Board dimensions should be positive, got {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.row_caps = tuple(row_caps) if row_caps is not None else (1,) * rows
        self.col_caps = tuple(col_caps) if col_caps is not None else (1,) * cols
        if len(self.row_caps) != rows or len(self.col_caps) != cols:
            raise InvalidComplexError("There should be one cap per row and one cap per column")
        if min(self.row_caps + self.col_caps) < 1:
            raise InvalidComplexError("Caps should be at least 1")

    def cell(self, row: int, col: int) -> int:
        return row * self.cols + col

    def cell_position(self, vertex: int) -> Tuple[int, int]:
        return divmod(vertex, self.cols)

    def __repr__(self) -> str:
        return f"ChessboardSpec({self.rows}x{self.cols}, rows={self.row_caps}, cols={self.col_caps})"


def simplex(ground_set: Sequence[int]) -> SimplicialComplex:
    return SimplicialComplex(ground_set, [ground_set], maximal=True)


def simplex_boundary(ground_set: Sequence[int]) -> SimplicialComplex:
    ground_set = tuple(ground_set)
    if not ground_set:
        raise InvalidComplexError("The boundary of the empty simplex is not defined")
    facets = [frozenset(ground_set) - {v} for v in ground_set]
    return SimplicialComplex(ground_set, facets, maximal=True)


def points(n: int) -> SimplicialComplex:
    """
    The 0-dimensional complex [n].
    """
    return SimplicialComplex(range(n), [[v] for v in range(n)], maximal=True)


def multipartite_complex(sizes: Sequence[int]) -> SimplicialComplex:
    """
    Complete multipartite complex K_{t0,...,tk} = [t0] * ... * [tk].
    Vertices are laid out color-major: color c occupies a consecutive block.
    """
    if not sizes:
        raise InvalidComplexError("At least one color class is required")
    if any(size < 1 for size in sizes):
        raise InvalidComplexError(f"Color class sizes should be positive, got {list(sizes)}")
    classes = color_blocks(sizes)
    facets = [frozenset(choice) for choice in itertools.product(*classes)]
    return SimplicialComplex(range(sum(sizes)), facets, maximal=True)


def color_blocks(sizes: Sequence[int]) -> List[Tuple[int, ...]]:
    blocks = []
    offset = 0
    for size in sizes:
        blocks.append(tuple(range(offset, offset + size)))
        offset += size
    return blocks


def chessboard_complex(m: int, n: int) -> SimplicialComplex:
    return multi_chessboard_complex(ChessboardSpec(m, n))


def multi_chessboard_complex(spec: ChessboardSpec) -> SimplicialComplex:
    cells = [(row, col) for row in range(spec.rows) for col in range(spec.cols)]
    row_load = [0] * spec.rows
    col_load = [0] * spec.cols
    chosen: List[int] = []
    facets: List[FrozenSet[int]] = []

    def fits(row, col):
        return row_load[row] < spec.row_caps[row] and col_load[col] < spec.col_caps[col]

    def place(index):
        if index == len(cells):
            if not any(fits(row, col) for row, col in cells if spec.cell(row, col) not in chosen):
                facets.append(frozenset(chosen))
            return
        row, col = cells[index]
        if fits(row, col):
            row_load[row] += 1
            col_load[col] += 1
            chosen.append(spec.cell(row, col))
            place(index + 1)
            chosen.pop()
            row_load[row] -= 1
            col_load[col] -= 1
        place(index + 1)

    place(0)
    return SimplicialComplex(range(spec.rows * spec.cols), facets, maximal=True)


def join(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    """
    Join on the disjoint union of the ground sets: the i-th ground vertex of the first
    complex becomes i, the j-th of the second becomes len(first.ground_set) + j.
    """
    offset = len(first.ground_set)
    first_map = {v: i for i, v in enumerate(first.ground_set)}
    second_map = {v: offset + j for j, v in enumerate(second.ground_set)}
    ground_set = range(offset + len(second.ground_set))
    if first.is_void or second.is_void:
        return SimplicialComplex(ground_set, [])
    facets = [
        frozenset(first_map[v] for v in sigma) | frozenset(second_map[v] for v in tau)
        for sigma in first.facets for tau in second.facets
    ]
    return SimplicialComplex(ground_set, facets, maximal=True)


def join_all(complexes: Sequence[SimplicialComplex]) -> SimplicialComplex:
    result = complexes[0]
    for other in complexes[1:]:
        result = join(result, other)
    return result


def deleted_join(complex_: SimplicialComplex, r: int) -> SimplicialComplex:
    """
    r-fold deleted join: r-tuples of pairwise disjoint faces.
    Vertex p of the ground set (by position) in slot i becomes p * r + i.
    """
    if r < 2:
        raise InvalidComplexError(f"The deleted join needs at least two slots, got {r}")
    return deleted_join_of([complex_] * r)


def deleted_join_of(complexes: Sequence[SimplicialComplex]) -> SimplicialComplex:
    """
    Deleted join of complexes on a common ground set; slot i holds a face of complexes[i].
    """
    ground = complexes[0].ground_set
    if any(set(other.ground_set) != set(ground) for other in complexes):
        raise InvalidComplexError("Deleted join factors should share a ground set")
    r = len(complexes)
    m = len(ground)
    flat_ground = range(m * r)
    if any(other.is_void for other in complexes):
        return SimplicialComplex(flat_ground, [])

    position = {v: p for p, v in enumerate(ground)}
    face_masks = []
    for other in complexes:
        masks = set()
        for face in other.faces:
            mask = 0
            for v in face:
                mask |= 1 << position[v]
            masks.add(mask)
        face_masks.append(masks)

    slots = [0] * r
    unassigned: List[int] = []
    facets: List[Face] = []

    def is_maximal():
        for p in unassigned:
            bit = 1 << p
            for i in range(r):
                if slots[i] | bit in face_masks[i]:
                    return False
        return True

    def assign(p):
        if p == m:
            if is_maximal():
                facets.append(frozenset(q * r + i for i in range(r) for q in range(m) if slots[i] >> q & 1))
            return
        bit = 1 << p
        for i in range(r):
            extended = slots[i] | bit
            if extended in face_masks[i]:
                slots[i] = extended
                assign(p + 1)
                slots[i] ^= bit
        unassigned.append(p)
        assign(p + 1)
        unassigned.pop()

    assign(0)
    logger.debug(f"Deleted join of {r} factors on {m} vertices has {len(facets)} facets")
    return SimplicialComplex(flat_ground, facets, maximal=True)


def alexander_dual(complex_: SimplicialComplex, ground_set: Sequence[int] = None) -> SimplicialComplex:
    """
    Faces are the sets whose complement in the ground set is not a face.
    The dual of the full simplex is the void complex.
    """
    ground = tuple(ground_set) if ground_set is not None else complex_.ground_set
    if not set(complex_.vertices) <= set(ground):
        raise InvalidComplexError("The complex should live inside the ground set")
    full = frozenset(ground)
    faces = complex_.faces
    dual_faces = []
    for size in range(len(ground) + 1):
        for subset in itertools.combinations(ground, size):
            complement = full - frozenset(subset)
            if complement not in faces:
                dual_faces.append(frozenset(subset))
    if not dual_faces:
        logger.debug("Alexander dual of a full simplex is the void complex")
    return SimplicialComplex(ground, dual_faces)


def bier_sphere(complex_: SimplicialComplex) -> SimplicialComplex:
    """
    Bier(K) = K *_Δ K°, a sphere of dimension n-2 on the ground set [n] x [2].
    """
    ground = complex_.ground_set
    if complex_.is_void or complex_.facets == (frozenset(),):
        raise InvalidComplexError("Bier spheres need a complex strictly containing {∅}")
    if frozenset(ground) in complex_.faces:
        raise InvalidComplexError("Bier spheres need a complex strictly contained in the full simplex")
    return deleted_join_of([complex_, alexander_dual(complex_, ground)])


def skeleton(complex_: SimplicialComplex, d: int) -> SimplicialComplex:
    if d < 0:
        raise InvalidComplexError(f"Skeleton dimension should be non-negative, got {d}")
    return SimplicialComplex(complex_.ground_set, [face for face in complex_.faces if len(face) <= d + 1])


def transpose_chessboard(m: int, n: int) -> Dict[int, int]:
    """
    Vertex bijection from the m x n board to the n x m board.
    """
    return {row * n + col: col * m + row for row in range(m) for col in range(n)}


def slot_permutation(m: int, r: int, perm: Sequence[int]) -> Dict[int, int]:
    """
    Vertex map of a deleted join on [m] x [r] moving slot i to slot perm[i].
    """
    return {p * r + i: p * r + perm[i] for p in range(m) for i in range(r)}


def quotient_map_3to2(complex_: SimplicialComplex) -> Tuple[SimplicialComplex, Dict[int, int]]:
    """
    The map K_{3,3,3,1} -> K_{2,2,2,1} identifying the third vertex of each 3-class with
    the second one.
    """
    if complex_ != multipartite_complex([3, 3, 3, 1]):
        raise InvalidComplexError("The 3-to-2 quotient is defined on K_{3,3,3,1} only")
    vertex_map = {}
    for color in range(3):
        vertex_map[3 * color] = 2 * color
        vertex_map[3 * color + 1] = 2 * color + 1
        vertex_map[3 * color + 2] = 2 * color + 1
    vertex_map[9] = 6
    return multipartite_complex([2, 2, 2, 1]), vertex_map


def double_rook_board() -> ChessboardSpec:
    """
    The 4 x 2 board with one rook per row and column caps (2, 1): the rows are the four
    slots and column 0 takes the two identified copies.
    """
    return ChessboardSpec(4, 2, row_caps=(1, 1, 1, 1), col_caps=(2, 1))


def seven_point_target() -> SimplicialComplex:
    """
    Image of (Δ_{3,4})^{*3} * [4] under the 3-to-2 quotient: per color the double rook
    board, joined with the four slots of the singleton color.
    """
    board = multi_chessboard_complex(double_rook_board())
    return join_all([board, board, board, points(4)])


def deleted_join_quotient_map() -> Dict[int, int]:
    """
    Vertex map (Δ_{3,4})^{*3} * [4] -> seven_point_target() induced by the 3-to-2 quotient.
    Copy j at slot i of a color lands on cell (i, column[j]) of that color's board.
    """
    spec = double_rook_board()
    column = {0: 1, 1: 0, 2: 0}
    size = spec.rows * spec.cols
    vertex_map = {}
    for color in range(3):
        for copy in range(3):
            for slot in range(4):
                vertex_map[12 * color + 4 * copy + slot] = size * color + spec.cell(slot, column[copy])
    for slot in range(4):
        vertex_map[36 + slot] = 3 * size + slot
    return vertex_map
