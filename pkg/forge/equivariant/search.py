import logging
from typing import Dict, List, Optional, Tuple

from forge.complexes.simplicial_complex import Face
from forge.complexes.subdivision import barycentric_subdivision
from forge.config import Config
from forge.equivariant.action import (
    KLEIN_ELEMENTS,
    KLEIN_ON_FOUR,
    PermAction,
    cube_model,
    cube_vertex,
    even_vertex,
    klein_actions,
    lift_action,
    orbit_types,
)
from forge.equivariant.simplicial_map import DegreeError, SimplicialMap, degree
from forge.search_strategy.sequence_strategy import ThreadWithReturnValue

logger = logging.getLogger("forge")


class _OrbitPlan:
    """
    Orbit representatives of the source action in ground-set order, together with the facets
    that become fully assigned once each orbit is placed.
    """

    def __init__(self, source: PermAction) -> None:
        self.source = source
        self.orbits = source.vertex_orbits()
        self.representatives = [orbit[0] for orbit in self.orbits]
        step_of = {}
        for step, orbit in enumerate(self.orbits):
            for v in orbit:
                step_of[v] = step
        self.facets_at: List[List[Face]] = [[] for _ in self.orbits]
        for facet in source.complex.facets:
            if facet:
                self.facets_at[max(step_of[v] for v in facet)].append(facet)


def _group_element_mapping(source: PermAction, representative: int) -> Dict[int, str]:
    """
    For every vertex of the orbit, one group element carrying the representative to it.
    """
    mapping = {}
    for g in source.names:
        mapping.setdefault(source.apply(g, representative), g)
    return mapping


def _candidates(source: PermAction, target: PermAction, representative: int, exact_stabilizer: bool) -> List[int]:
    stabilizer = source.vertex_stabilizer(representative)
    result = []
    for w in target.complex.ground_set:
        target_stabilizer = target.vertex_stabilizer(w)
        if exact_stabilizer and target_stabilizer != stabilizer:
            continue
        if stabilizer <= target_stabilizer:
            result.append(w)
    return result


def _check_group_names(source: PermAction, target: PermAction) -> None:
    if set(source.elements) != set(target.elements) or source.table != target.table:
        raise AttributeError(f"Actions {source.name} and {target.name} are not actions of the same group")


class _EquivariantBacktracking:

    def __init__(self, source: PermAction, target: PermAction, bijective: bool) -> None:
        _check_group_names(source, target)
        self.source = source
        self.target = target
        self.bijective = bijective
        self.plan = _OrbitPlan(source)
        self.candidates = [
            _candidates(source, target, representative, bijective) for representative in self.plan.representatives
        ]
        self.carriers = [_group_element_mapping(source, representative) for representative in self.plan.representatives]
        self.target_faces = target.complex.faces
        self.target_facets = set(target.complex.facets)

    def candidate_count(self) -> int:
        count = 1
        for options in self.candidates:
            count *= len(options)
        return count

    def _place(self, step: int, w: int, assignment: Dict[int, int], used: set) -> Optional[List[int]]:
        placed = []
        for v, g in self.carriers[step].items():
            image = self.target.apply(g, w)
            if self.bijective and image in used:
                for u in placed:
                    used.discard(assignment.pop(u))
                return None
            assignment[v] = image
            used.add(image)
            placed.append(v)
        return placed

    def _faces_ok(self, step: int, assignment: Dict[int, int]) -> bool:
        for facet in self.plan.facets_at[step]:
            image = frozenset(assignment[v] for v in facet)
            if self.bijective:
                if image not in self.target_facets:
                    return False
            elif image not in self.target_faces:
                return False
        return True

    def search(self, first_choices: List[int] = None, stop_at_first: bool = False) -> List[Dict[int, int]]:
        results: List[Dict[int, int]] = []
        assignment: Dict[int, int] = {}
        used: set = set()
        steps = len(self.plan.representatives)

        def extend(step: int) -> bool:
            if step == steps:
                if not self.bijective or len(self.target_facets) == len(self.source.complex.facets):
                    results.append(dict(assignment))
                    return stop_at_first
                return False
            options = first_choices if step == 0 and first_choices is not None else self.candidates[step]
            for w in options:
                placed = self._place(step, w, assignment, used)
                if placed is None:
                    continue
                if self._faces_ok(step, assignment) and extend(step + 1):
                    return True
                for v in placed:
                    used.discard(assignment.pop(v))
            return False

        extend(0)
        return results


def equivariant_iso_search(source: PermAction, target: PermAction) -> Optional[SimplicialMap]:
    """
    First equivariant vertex bijection, in candidate order, mapping facets onto facets.
    """
    if len(source.complex.vertices) != len(target.complex.vertices) or len(source.complex.facets) != len(target.complex.facets):
        logger.info(f"No isomorphism between {source.complex} and {target.complex}: sizes differ")
        return None
    search = _EquivariantBacktracking(source, target, bijective=True)
    Config.check_limit("max_map_candidates", search.candidate_count())
    found = search.search(stop_at_first=True)
    if not found:
        logger.info(f"No equivariant isomorphism {source.name} -> {target.name}")
        return None
    iso = SimplicialMap(source.complex, target.complex, found[0])
    logger.info(f"Equivariant isomorphism {source.name} -> {target.name}: {iso}")
    return iso


class MapRecord:

    def __init__(self, simplicial_map: SimplicialMap, degree_value: Optional[int], tags: List[str]) -> None:
        self.map = simplicial_map
        self.degree = degree_value
        self.tags = tags

    def to_json(self) -> dict:
        document = self.map.to_json()
        document["degree"] = self.degree
        document["tags"] = self.tags
        return document


class EquivariantScan:
    """
    All equivariant simplicial maps found at one subdivision level, with their degrees.
    """

    def __init__(self, level: int, records: List[MapRecord], modulus: int, candidates: int) -> None:
        self.level = level
        self.records = records
        self.modulus = modulus
        self.candidates = candidates

    @property
    def degrees(self) -> List[Optional[int]]:
        return [record.degree for record in self.records]

    @property
    def parities(self) -> List[int]:
        return sorted({d % 2 for d in self.degrees if d is not None})

    @property
    def parity_congruent(self) -> bool:
        return len(self.parities) <= 1

    @property
    def congruent_mod_gcd(self) -> bool:
        if self.modulus <= 1:
            return True
        return len({d % self.modulus for d in self.degrees if d is not None}) <= 1

    @property
    def empty(self) -> bool:
        return not self.records

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "candidates": self.candidates,
            "maps": [record.to_json() for record in self.records],
            "modulus": self.modulus,
            "parity_congruent": self.parity_congruent,
            "congruent_mod_gcd": self.congruent_mod_gcd,
            "empty": self.empty,
        }


def _degree_record(simplicial_map: SimplicialMap) -> MapRecord:
    tags = simplicial_map.tags()
    try:
        value = degree(simplicial_map)
    except DegreeError as e:
        logger.debug(f"Degree undefined for {simplicial_map}: {e}")
        value = None
        tags.append("undefined-degree")
    return MapRecord(simplicial_map, value, tags)


def enumerate_equivariant_maps(source: PermAction, target: PermAction, level: int = 0) -> EquivariantScan:
    """
    Every equivariant vertex map from the source (barycentrically subdivided `level` times) into
    the target whose facets map to faces. Worker threads split the choices of the first orbit.
    """
    if level not in (0, 1):
        raise AttributeError(f"Subdivision level should be 0 or 1, got {level}")
    if level == 1:
        subdivision, carriers = barycentric_subdivision(source.complex)
        source = lift_action(source, subdivision, carriers)
    search = _EquivariantBacktracking(source, target, bijective=False)
    candidates = search.candidate_count()
    Config.check_limit("max_map_candidates", candidates)
    logger.info(f"Scanning equivariant maps {source.name} -> {target.name} at level {level}: {candidates} candidates")

    first_options = search.candidates[0] if search.candidates else []
    maps: List[Dict[int, int]] = []
    if candidates:
        # each thread gets its own backtracking state
        chunks = [[w] for w in first_options]
        threads = []
        for chunk in chunks:
            worker = _EquivariantBacktracking(source, target, bijective=False)
            thread = ThreadWithReturnValue(target=worker.search, args=(chunk,))
            thread.start()
            threads.append(thread)
        for thread in threads:
            maps.extend(thread.join())
    maps.sort(key=lambda assignment: [assignment[v] for v in source.complex.ground_set])
    records = [_degree_record(SimplicialMap(source.complex, target.complex, assignment)) for assignment in maps]
    modulus = orbit_types(source).gcd
    scan = EquivariantScan(level, records, modulus, candidates)
    logger.info(f"Found {len(records)} equivariant maps at level {level}, degree parities {scan.parities}")
    return scan


def check_equivariance(simplicial_map: SimplicialMap, source: PermAction, target: PermAction) -> bool:
    return all(
        simplicial_map.vertex_map[source.apply(g, v)] == target.apply(g, simplicial_map.vertex_map[v])
        for g in source.elements for v in source.complex.ground_set
    )


def radial_approximation() -> SimplicialMap:
    """
    Simplicial approximation of the radial projection from the cube sphere onto ∂Δ_[4]:
    e_t goes to t, -e_t to a vertex of the opposite triangle chosen equivariantly.
    """
    cube = cube_model()
    _, tetrahedron = klein_actions()
    vertex_map = {}
    for t in range(4):
        even = cube_vertex(even_vertex(t))
        vertex_map[even] = t
        vertex_map[7 - even] = KLEIN_ON_FOUR[KLEIN_ELEMENTS[1]][t]
    return SimplicialMap(cube.complex, tetrahedron.complex, vertex_map).validate()


def reference_composite() -> Tuple[SimplicialMap, SimplicialMap]:
    """
    The equivariant isomorphism from the board sphere onto the cube sphere, and its composite
    with the radial approximation onto ∂Δ_[4].
    """
    board, _ = klein_actions()
    iso = equivariant_iso_search(board, cube_model())
    if iso is None:
        raise DegreeError("The board sphere has no equivariant isomorphism onto the cube sphere")
    return iso, radial_approximation().compose(iso)
