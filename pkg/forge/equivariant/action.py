import logging
import math
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from forge.complexes.constructions import double_rook_board, join_all, multi_chessboard_complex, points, simplex_boundary
from forge.complexes.simplicial_complex import Face, SimplicialComplex

logger = logging.getLogger("forge")

IDENTITY = "1"
KLEIN_ELEMENTS = ("1", "a", "b", "c")
# a, b, c are the three involutions; the product of two distinct ones is the third
KLEIN_TABLE = {
    (g, h): (h if g == IDENTITY else g if h == IDENTITY else IDENTITY if g == h else ({"a", "b", "c"} - {g, h}).pop())
    for g in KLEIN_ELEMENTS for h in KLEIN_ELEMENTS
}
# double transpositions of [4]
KLEIN_ON_FOUR = {
    "1": (0, 1, 2, 3),
    "a": (1, 0, 3, 2),
    "b": (2, 3, 0, 1),
    "c": (3, 2, 1, 0),
}


class InvalidActionError(ValueError):
    pass


class PermAction:
    """
    Finite group acting on a complex by vertex permutations.

    Elements are named; `table[(g, h)]` is the name of g·h, acting as "first h, then g".
    """

    def __init__(self, complex_: SimplicialComplex, elements: Dict[str, Dict[int, int]], table: Dict[Tuple[str, str], str], identity: str = IDENTITY, name: str = "") -> None:
        self.complex = complex_
        self.elements = {g: dict(perm) for g, perm in elements.items()}
        self.table = dict(table)
        self.identity = identity
        self.name = name
        for g, perm in self.elements.items():
            if set(perm) != set(complex_.ground_set) or set(perm.values()) != set(complex_.ground_set):
                raise InvalidActionError(f"Element {g} is not a permutation of the ground set")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def names(self) -> List[str]:
        return sorted(self.elements)

    def apply(self, g: str, vertex: int) -> int:
        return self.elements[g][vertex]

    def apply_face(self, g: str, face: Iterable[int]) -> Face:
        perm = self.elements[g]
        return frozenset(perm[v] for v in face)

    def inverse(self, g: str) -> str:
        return next(h for h in self.elements if self.table[(g, h)] == self.identity)

    def is_simplicial(self) -> bool:
        faces = self.complex.faces
        return all(self.apply_face(g, facet) in faces for g in self.elements for facet in self.complex.facets)

    def is_homomorphism(self) -> bool:
        for (g, h), gh in self.table.items():
            composed = {v: self.elements[g][self.elements[h][v]] for v in self.complex.ground_set}
            if composed != self.elements[gh]:
                return False
        return all(v == w for v, w in self.elements[self.identity].items())

    def validate(self) -> "PermAction":
        if not self.is_homomorphism():
            raise InvalidActionError(f"Action {self.name} does not respect the composition table")
        if not self.is_simplicial():
            raise InvalidActionError(f"Action {self.name} does not map faces to faces")
        return self

    def stabilizer(self, face: Iterable[int]) -> FrozenSet[str]:
        """
        Setwise stabilizer of a face.
        """
        face = frozenset(face)
        return frozenset(g for g in self.elements if self.apply_face(g, face) == face)

    def vertex_stabilizer(self, vertex: int) -> FrozenSet[str]:
        return frozenset(g for g, perm in self.elements.items() if perm[vertex] == vertex)

    def orbit(self, vertex: int) -> List[int]:
        return sorted({perm[vertex] for perm in self.elements.values()})

    def vertex_orbits(self) -> List[List[int]]:
        seen = set()
        orbits = []
        for v in self.complex.ground_set:
            if v not in seen:
                orbit = self.orbit(v)
                seen.update(orbit)
                orbits.append(orbit)
        return orbits

    def is_subgroup(self, subgroup: Iterable[str]) -> bool:
        subgroup = set(subgroup)
        return self.identity in subgroup and subgroup <= set(self.elements) and all(
            self.table[(g, h)] in subgroup for g in subgroup for h in subgroup)

    def conjugates(self, subgroup: FrozenSet[str]) -> FrozenSet[FrozenSet[str]]:
        result = set()
        for g in self.elements:
            g_inv = self.inverse(g)
            result.add(frozenset(self.table[(self.table[(g, h)], g_inv)] for h in subgroup))
        return frozenset(result)

    def on_complex(self, complex_: SimplicialComplex, vertex_map: Dict[int, int]) -> "PermAction":
        """
        Transports the action along a vertex bijection onto another complex.
        """
        inverse = {w: v for v, w in vertex_map.items()}
        elements = {
            g: {w: vertex_map[perm[inverse[w]]] for w in complex_.ground_set}
            for g, perm in self.elements.items()
        }
        return PermAction(complex_, elements, self.table, self.identity, self.name)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "elements": {g: [self.elements[g][v] for v in self.complex.ground_set] for g in self.names},
        }

    def __repr__(self) -> str:
        return f"PermAction({self.name}, order={self.order}, on {self.complex})"


def trivial_action(complex_: SimplicialComplex) -> PermAction:
    return PermAction(complex_, {IDENTITY: {v: v for v in complex_.ground_set}}, {(IDENTITY, IDENTITY): IDENTITY}, name="trivial")


def board_sphere() -> SimplicialComplex:
    """
    The multiple chessboard complex on 4 rows and 2 columns, column 0 taking two rooks.
    Cell (t, side) is the vertex 2t + side.
    """
    return multi_chessboard_complex(double_rook_board())


def klein_actions() -> Tuple[PermAction, PermAction]:
    """
    Klein four-group permuting the rows of the board sphere and the vertices of ∂Δ_[4].
    """
    board = board_sphere()
    on_board = {
        g: {2 * t + side: 2 * perm[t] + side for t in range(4) for side in range(2)}
        for g, perm in KLEIN_ON_FOUR.items()
    }
    tetrahedron = simplex_boundary(range(4))
    on_tetrahedron = {g: {t: perm[t] for t in range(4)} for g, perm in KLEIN_ON_FOUR.items()}
    return (
        PermAction(board, on_board, KLEIN_TABLE, name="klein4-board").validate(),
        PermAction(tetrahedron, on_tetrahedron, KLEIN_TABLE, name="klein4-tetrahedron").validate(),
    )


# sign patterns of a, b, c acting diagonally on R^3
KLEIN_SIGNS = {"1": (1, 1, 1), "a": (1, -1, -1), "b": (-1, 1, -1), "c": (-1, -1, 1)}


def octahedron_model() -> PermAction:
    """
    S⁰ * S⁰ * S⁰ with vertices 2i, 2i + 1 = ±e_i; the group acts by the diagonal sign changes,
    so a fixes ±e_0 and swaps the other two pairs.
    """
    octahedron = join_all([points(2), points(2), points(2)])
    elements = {}
    for g, signs in KLEIN_SIGNS.items():
        elements[g] = {2 * i + side: 2 * i + (side if signs[i] == 1 else 1 - side) for i in range(3) for side in range(2)}
    return PermAction(octahedron, elements, KLEIN_TABLE, name="klein4-octahedron").validate()


def sign_vector(vertex: int) -> Tuple[int, int, int]:
    """
    Cube vertex id -> sign vector; bit 2 - i set means a negative i-th coordinate.
    """
    return tuple(-1 if vertex >> (2 - i) & 1 else 1 for i in range(3))


def cube_vertex(signs: Iterable[int]) -> int:
    vertex = 0
    for sign in signs:
        vertex = 2 * vertex + (1 if sign < 0 else 0)
    return vertex


def even_vertex(t: int) -> Tuple[int, int, int]:
    """
    e_t: e_0 = (1, 1, 1) and e_t its image under the t-th involution.
    """
    signs = KLEIN_SIGNS[KLEIN_ELEMENTS[t]]
    return tuple(signs)


def cube_model() -> PermAction:
    """
    Octahedral representation sphere on the eight sign vectors of the cube.

    The even vertices e_0..e_3 span the inscribed tetrahedron; the triangles are
    {e_a, e_b, -e_c} for distinct a, b, c. The group acts by diagonal sign changes.
    """
    facets = []
    for a in range(4):
        for b in range(a + 1, 4):
            for c in range(4):
                if c not in (a, b):
                    minus_c = tuple(-x for x in even_vertex(c))
                    facets.append([cube_vertex(even_vertex(a)), cube_vertex(even_vertex(b)), cube_vertex(minus_c)])
    cube = SimplicialComplex(range(8), facets, maximal=True)
    elements = {
        g: {v: cube_vertex(s * x for s, x in zip(signs, sign_vector(v))) for v in range(8)}
        for g, signs in KLEIN_SIGNS.items()
    }
    return PermAction(cube, elements, KLEIN_TABLE, name="klein4-cube").validate()


def fixed_subcomplex(action: PermAction, subgroup: Iterable[str]) -> SimplicialComplex:
    """
    Faces pointwise fixed by every element of the subgroup. Without fixed vertices this is {∅}.
    """
    subgroup = set(subgroup)
    if not action.is_subgroup(subgroup):
        raise InvalidActionError(f"{sorted(subgroup)} is not a subgroup of {action.name}")
    fixed = [v for v in action.complex.vertices if all(action.apply(g, v) == v for g in subgroup)]
    return action.complex.induced_subcomplex(fixed)


class OrbitType:

    def __init__(self, stabilizer: FrozenSet[str], index: int, orbits: int) -> None:
        self.stabilizer = stabilizer
        self.index = index
        self.orbits = orbits

    def to_json(self) -> dict:
        return {"stabilizer": sorted(self.stabilizer), "index": self.index, "orbits": self.orbits}


class OrbitTypeReport:
    """
    Stabilizer classes of face orbits outside an invariant subcomplex, with their indices |G/H|.
    """

    def __init__(self, group_order: int, orbit_types: List[OrbitType]) -> None:
        self.group_order = group_order
        self.orbit_types = orbit_types

    @property
    def indices(self) -> List[int]:
        return [orbit_type.index for orbit_type in self.orbit_types]

    @property
    def gcd(self) -> int:
        return math.gcd(*self.indices) if self.orbit_types else 0

    @property
    def free(self) -> bool:
        return all(orbit_type.index == self.group_order for orbit_type in self.orbit_types)

    def to_json(self) -> dict:
        return {
            "group_order": self.group_order,
            "orbit_types": [orbit_type.to_json() for orbit_type in self.orbit_types],
            "gcd": self.gcd,
        }


def orbit_types(action: PermAction, invariant: Optional[SimplicialComplex] = None) -> OrbitTypeReport:
    """
    The stabilizer of an interior point of a face is its setwise stabilizer; conjugate stabilizers
    are merged.
    """
    excluded = invariant.faces if invariant is not None else set()
    seen = set()
    counts: Dict[FrozenSet[FrozenSet[str]], Tuple[FrozenSet[str], int]] = {}
    for face in action.complex.sorted_faces():
        if not face or face in excluded or face in seen:
            continue
        orbit = {action.apply_face(g, face) for g in action.elements}
        seen |= orbit
        stabilizer = action.stabilizer(face)
        conjugacy_class = action.conjugates(stabilizer)
        representative, count = counts.get(conjugacy_class, (min(conjugacy_class, key=sorted), 0))
        counts[conjugacy_class] = (representative, count + 1)
    types = sorted(
        (OrbitType(representative, action.order // len(representative), count) for representative, count in counts.values()),
        key=lambda t: (t.index, sorted(t.stabilizer)))
    report = OrbitTypeReport(action.order, types)
    for index in report.indices:
        if action.order % index:
            raise InvalidActionError(f"Orbit index {index} does not divide the group order {action.order}")
    return report


def lift_action(action: PermAction, subdivision: SimplicialComplex, carriers: List[Face]) -> PermAction:
    """
    Action on the barycentric subdivision: the barycenter of a face goes to the barycenter of its image.
    """
    index = {face: i for i, face in enumerate(carriers)}
    elements = {
        g: {i: index[action.apply_face(g, face)] for i, face in enumerate(carriers)}
        for g in action.elements
    }
    return PermAction(subdivision, elements, action.table, action.identity, f"{action.name}-sd").validate()


def named_group_action(group: str, complex_: SimplicialComplex, permutations: Dict[str, List[int]] = None) -> PermAction:
    """
    Builds an action from a group name and, for non-trivial groups, one permutation per element
    listed along the ground set.
    """
    if group == "trivial":
        return trivial_action(complex_)
    if group == "klein4":
        if permutations is None or set(permutations) != set(KLEIN_ELEMENTS):
            raise InvalidActionError(f"A klein4 action needs permutations for {list(KLEIN_ELEMENTS)}")
        elements = {
            g: {v: permutations[g][position] for position, v in enumerate(complex_.ground_set)}
            for g in KLEIN_ELEMENTS
        }
        return PermAction(complex_, elements, KLEIN_TABLE, name="klein4").validate()
    raise AttributeError(f"Unknown group '{group}'")
