import logging
from typing import Dict, Iterable, List, Optional

from forge.complexes.constructions import join
from forge.complexes.simplicial_complex import Face, SimplicialComplex
from forge.homology.pseudomanifold import NotPureError, pseudomanifold_check

logger = logging.getLogger("forge")


class DegreeError(ValueError):
    pass


class InvalidMapError(ValueError):
    pass


class SimplicialMap:
    """
    Vertex map between complexes; faces go to the set of images of their vertices.
    """

    def __init__(self, source: SimplicialComplex, target: SimplicialComplex, vertex_map: Dict[int, int]) -> None:
        self.source = source
        self.target = target
        self.vertex_map = dict(vertex_map)
        missing = [v for v in source.ground_set if v not in self.vertex_map]
        if missing:
            raise InvalidMapError(f"Vertices {missing} have no image")
        stray = [w for w in self.vertex_map.values() if w not in set(target.ground_set)]
        if stray:
            raise InvalidMapError(f"Images {sorted(set(stray))} are not vertices of the target")

    def image(self, face: Iterable[int]) -> Face:
        return frozenset(self.vertex_map[v] for v in face)

    def non_simplicial_facets(self) -> List[Face]:
        faces = self.target.faces
        return [facet for facet in self.source.facets if self.image(facet) not in faces]

    def is_simplicial(self) -> bool:
        return not self.non_simplicial_facets()

    def validate(self) -> "SimplicialMap":
        bad = self.non_simplicial_facets()
        if bad:
            raise InvalidMapError(f"Facet {sorted(bad[0])} maps to the non-face {sorted(self.image(bad[0]))}")
        return self

    def collapses(self) -> bool:
        return any(len(self.image(facet)) < len(facet) for facet in self.source.facets)

    def is_surjective_on_facets(self) -> bool:
        images = {self.image(facet) for facet in self.source.facets}
        return all(facet in images for facet in self.target.facets)

    def compose(self, first: "SimplicialMap") -> "SimplicialMap":
        """
        self after first.
        """
        return SimplicialMap(first.source, self.target, {v: self.vertex_map[w] for v, w in first.vertex_map.items()})

    def tags(self) -> List[str]:
        tags = []
        if self.collapses():
            tags.append("collapsing")
        if not self.is_surjective_on_facets():
            tags.append("non-surjective")
        return tags

    def to_json(self) -> dict:
        return {"vertex_map": [[v, self.vertex_map[v]] for v in self.source.ground_set]}

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialMap) and self.vertex_map == other.vertex_map and \
            self.source == other.source and self.target == other.target

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.vertex_map.items())))

    def __repr__(self) -> str:
        return f"SimplicialMap({[self.vertex_map[v] for v in self.source.ground_set]})"


def identity_map(complex_: SimplicialComplex) -> SimplicialMap:
    return SimplicialMap(complex_, complex_, {v: v for v in complex_.ground_set})


def permutation_sign(values: List[int]) -> int:
    sign = 1
    values = list(values)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if values[i] > values[j]:
                sign = -sign
    return sign


def _closed_orientation(complex_: SimplicialComplex, role: str) -> Dict[Face, int]:
    try:
        report = pseudomanifold_check(complex_)
    except NotPureError as e:
        raise DegreeError(f"The {role} is not a pseudomanifold: {e}")
    if not report.closed_orientable:
        raise DegreeError(f"The {role} is not a closed orientable pseudomanifold")
    return report.orientation


def degrees_per_target_facet(f: SimplicialMap) -> Dict[Face, int]:
    """
    Signed preimage count of every facet of the target, orientations taken from the pseudomanifold check.
    """
    if f.source.dimension != f.target.dimension:
        raise DegreeError(f"Dimensions differ: {f.source.dimension} and {f.target.dimension}")
    f.validate()
    source_orientation = _closed_orientation(f.source, "source")
    target_orientation = _closed_orientation(f.target, "target")
    counts = {facet: 0 for facet in f.target.facets}
    for facet in f.source.facets:
        image = f.image(facet)
        if len(image) < len(facet):
            continue
        ordered_image = [f.vertex_map[v] for v in sorted(facet)]
        counts[image] += source_orientation[facet] * permutation_sign(ordered_image) * target_orientation[image]
    return counts


def degree(f: SimplicialMap) -> int:
    counts = degrees_per_target_facet(f)
    values = set(counts.values())
    if len(values) != 1:
        raise DegreeError(f"Signed preimage counts differ between target facets: {sorted(values)}")
    return values.pop()


def join_of_maps(f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """
    f * g on the join layout of forge.complexes.constructions.join.
    """
    source = join(f.source, g.source)
    target = join(f.target, g.target)
    source_offset = len(f.source.ground_set)
    target_offset = len(f.target.ground_set)
    target_position = {w: i for i, w in enumerate(f.target.ground_set)}
    second_target_position = {w: target_offset + i for i, w in enumerate(g.target.ground_set)}
    vertex_map = {}
    for i, v in enumerate(f.source.ground_set):
        vertex_map[i] = target_position[f.vertex_map[v]]
    for j, v in enumerate(g.source.ground_set):
        vertex_map[source_offset + j] = second_target_position[g.vertex_map[v]]
    return SimplicialMap(source, target, vertex_map)


def degree_or_none(f: SimplicialMap) -> Optional[int]:
    try:
        return degree(f)
    except DegreeError:
        logger.debug(f"No degree for {f}", exc_info=True)
        return None
