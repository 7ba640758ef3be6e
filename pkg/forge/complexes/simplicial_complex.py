import itertools
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

Face = FrozenSet[int]
EMPTY_FACE: Face = frozenset()


def canonical_key(face: Iterable[int]) -> Tuple[int, Tuple[int, ...]]:
    """
    Sort key used for every face listing: by size, then by sorted vertex tuple.
    """
    ordered = tuple(sorted(face))
    return len(ordered), ordered


class InvalidComplexError(ValueError):
    pass


class SimplicialComplex:
    """
    Finite abstract simplicial complex on integer vertices.

    The complex is stored by its facets; the full face set is materialized on first use.
    A complex without facets is the void complex, the complex whose only facet is the
    empty face is {∅}.
    """

    def __init__(self, ground_set: Iterable[int], facets: Iterable[Iterable[int]], maximal: bool = False) -> None:
        self.ground_set = tuple(ground_set)
        if len(set(self.ground_set)) != len(self.ground_set):
            raise InvalidComplexError("Ground set contains duplicate vertices")
        if any(not isinstance(v, int) or v < 0 for v in self.ground_set):
            raise InvalidComplexError("Vertices should be non-negative integers")
        self._position = {v: i for i, v in enumerate(self.ground_set)}

        candidates = {frozenset(facet) for facet in facets}
        for facet in candidates:
            for v in facet:
                if v not in self._position:
                    raise InvalidComplexError(f"Vertex {v} is not part of the ground set")
        if not maximal:
            candidates = self._maximal_elements(candidates)
        self.facets: Tuple[Face, ...] = tuple(sorted(candidates, key=canonical_key))
        self._faces: Optional[Set[Face]] = None

    @classmethod
    def from_faces(cls, ground_set: Iterable[int], faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(ground_set, faces)

    def _mask(self, face: Iterable[int]) -> int:
        mask = 0
        for v in face:
            mask |= 1 << self._position[v]
        return mask

    def _maximal_elements(self, candidates: Set[Face]) -> Set[Face]:
        ordered = sorted(candidates, key=len, reverse=True)
        kept: List[int] = []
        maximal = set()
        for face in ordered:
            mask = self._mask(face)
            if any(mask & other == mask for other in kept):
                continue
            kept.append(mask)
            maximal.add(face)
        return maximal

    @property
    def is_void(self) -> bool:
        return len(self.facets) == 0

    @property
    def dimension(self) -> int:
        """
        Dimension of the complex; -1 for {∅} and, by convention, -2 for the void complex.
        """
        if self.is_void:
            return -2
        return max(len(facet) for facet in self.facets) - 1

    @property
    def vertices(self) -> Tuple[int, ...]:
        used = set().union(*self.facets) if self.facets else set()
        return tuple(v for v in self.ground_set if v in used)

    @property
    def faces(self) -> Set[Face]:
        if self._faces is None:
            self._faces = self._close_downward()
        return self._faces

    def _close_downward(self) -> Set[Face]:
        faces: Set[Face] = set()
        if self.is_void:
            return faces
        by_size: Dict[int, Set[Face]] = {}
        for facet in self.facets:
            by_size.setdefault(len(facet), set()).add(facet)
        for size in range(max(by_size), -1, -1):
            level = by_size.get(size, set())
            faces |= level
            if size == 0:
                break
            below = by_size.setdefault(size - 1, set())
            for face in level:
                for v in face:
                    below.add(face - {v})
        return faces

    def is_face(self, face: Iterable[int]) -> bool:
        return frozenset(face) in self.faces

    def __contains__(self, face) -> bool:
        return self.is_face(face)

    def faces_of_dim(self, p: int) -> List[Face]:
        return sorted((face for face in self.faces if len(face) == p + 1), key=canonical_key)

    def sorted_faces(self) -> List[Face]:
        return sorted(self.faces, key=canonical_key)

    def f_vector(self) -> List[int]:
        """
        Face counts f_{-1}, f_0, ..., f_dim (index 0 counts the empty face).
        """
        counts = [0] * (self.dimension + 2) if not self.is_void else []
        for face in self.faces:
            counts[len(face)] += 1
        return counts

    def euler_characteristic(self, reduced: bool = False) -> int:
        return sum(-1 if (len(face) - 1) % 2 else 1 for face in self.faces if face or reduced)

    def boundary_faces(self, face: Face) -> List[Face]:
        return [face - {v} for v in sorted(face)]

    def cofacets(self, face: Face) -> List[Face]:
        result = []
        for v in self.vertices:
            if v not in face:
                candidate = face | {v}
                if candidate in self.faces:
                    result.append(candidate)
        return result

    def is_pure(self) -> bool:
        return len({len(facet) for facet in self.facets}) <= 1

    def is_downward_closed(self) -> bool:
        return all(face - {v} in self.faces for face in self.faces for v in face)

    def relabel(self, mapping: Dict[int, int], ground_set: Iterable[int] = None) -> "SimplicialComplex":
        """
        Image of the complex under an injective vertex relabeling.
        """
        if len(set(mapping[v] for v in self.ground_set)) != len(self.ground_set):
            raise InvalidComplexError("Relabeling should be injective on the ground set")
        if ground_set is None:
            ground_set = sorted(mapping[v] for v in self.ground_set)
        return SimplicialComplex(
            ground_set, [[mapping[v] for v in facet] for facet in self.facets], maximal=True)

    def induced_subcomplex(self, vertices: Iterable[int]) -> "SimplicialComplex":
        kept = frozenset(vertices)
        return SimplicialComplex(
            [v for v in self.ground_set if v in kept],
            [face for face in self.faces if face <= kept])

    def subcomplex_from_faces(self, faces: Iterable[Face]) -> "SimplicialComplex":
        faces = list(faces)
        for face in faces:
            if face not in self.faces:
                raise InvalidComplexError(f"{sorted(face)} is not a face")
        return SimplicialComplex(self.ground_set, faces)

    def facet_lists(self) -> List[List[int]]:
        return [sorted(facet) for facet in self.facets]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self.ground_set) == set(other.ground_set) and set(self.facets) == set(other.facets)

    def __hash__(self) -> int:
        return hash((frozenset(self.ground_set), frozenset(self.facets)))

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dimension}, vertices={len(self.vertices)}, facets={len(self.facets)})"


def all_subsets(vertices: Iterable[int]) -> Iterable[Face]:
    vertices = tuple(vertices)
    for size in range(len(vertices) + 1):
        for subset in itertools.combinations(vertices, size):
            yield frozenset(subset)
