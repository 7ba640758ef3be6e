import logging
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx

from forge.complexes.simplicial_complex import Face, SimplicialComplex, canonical_key

logger = logging.getLogger("forge")

Pair = Tuple[Face, Face]


class DiscreteVectorField:
    """
    Partial matching of faces with cofaces; pairs are stored as (lower, upper).
    """

    def __init__(self, complex_: SimplicialComplex, pairs: Iterable[Pair]) -> None:
        self.complex = complex_
        self.pairs: List[Pair] = sorted(
            ((frozenset(lower), frozenset(upper)) for lower, upper in pairs),
            key=lambda pair: canonical_key(pair[0]))
        self.partner: Dict[Face, Face] = {}
        for lower, upper in self.pairs:
            self.partner[lower] = upper
            self.partner[upper] = lower

    def status(self, face: Face) -> str:
        partner = self.partner.get(face)
        if partner is None:
            return "critical"
        return "up" if len(partner) > len(face) else "down"

    def is_matched_up(self, face: Face) -> bool:
        partner = self.partner.get(face)
        return partner is not None and len(partner) > len(face)

    def critical_cells(self) -> List[Face]:
        return [face for face in self.complex.sorted_faces() if face and face not in self.partner]

    def critical_by_dimension(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for face in self.critical_cells():
            counts[len(face) - 1] = counts.get(len(face) - 1, 0) + 1
        return dict(sorted(counts.items()))

    def to_json(self) -> dict:
        return {
            "pairs": [[sorted(lower), sorted(upper)] for lower, upper in self.pairs],
            "critical": [sorted(face) for face in self.critical_cells()],
        }


class Violation:

    def __init__(self, condition: str, faces: List[Face], message: str) -> None:
        self.condition = condition
        self.faces = faces
        self.message = message

    def to_json(self) -> dict:
        return {"condition": self.condition, "faces": [sorted(f) for f in self.faces], "message": self.message}

    def __repr__(self) -> str:
        return f"Violation({self.condition}: {self.message})"


class DvfReport:

    def __init__(self, violations: List[Violation]) -> None:
        self.violations = violations

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"valid": self.valid, "violations": [v.to_json() for v in self.violations]}


def check_dvf(field: DiscreteVectorField) -> DvfReport:
    """
    Checks that every face is in at most one pair (a), that pairs are facet/coface
    pairs of the complex (b) and that the empty face is unmatched (c).
    """
    violations = []
    seen: Dict[Face, Pair] = {}
    for lower, upper in field.pairs:
        for face in (lower, upper):
            if face in seen:
                violations.append(Violation(
                    "a", [face], f"{sorted(face)} is in pairs {_render_pair(seen[face])} and {_render_pair((lower, upper))}"))
            else:
                seen[face] = (lower, upper)
        if not (lower < upper and len(upper) == len(lower) + 1):
            violations.append(Violation("b", [lower, upper], f"{sorted(lower)} is not a facet of {sorted(upper)}"))
        elif upper not in field.complex.faces:
            violations.append(Violation("b", [upper], f"{sorted(upper)} is not a face of the complex"))
        if not lower:
            violations.append(Violation("c", [lower, upper], f"The empty face is matched with {sorted(upper)}"))
    return DvfReport(violations)


def _render_pair(pair: Pair) -> str:
    return f"({sorted(pair[0])}, {sorted(pair[1])})"


class GradientPath:
    """
    Zig-zag α0 ↗ β0 ↘ α1 ↗ β1 ↘ ...; faces alternate between lower and upper cells.
    """

    def __init__(self, faces: List[Face]) -> None:
        self.faces = faces

    @property
    def closed(self) -> bool:
        return len(self.faces) > 2 and self.faces[0] == self.faces[-1]

    def render(self) -> str:
        parts = [str(sorted(self.faces[0]))]
        for index, face in enumerate(self.faces[1:]):
            arrow = "↗" if index % 2 == 0 else "↘"
            parts.append(f"{arrow} {sorted(face)}")
        return " ".join(parts)

    def to_json(self) -> list:
        return [sorted(face) for face in self.faces]


class AcyclicityReport:

    def __init__(self, acyclic: bool, witness_cycle: Optional[GradientPath]) -> None:
        self.acyclic = acyclic
        self.witness_cycle = witness_cycle

    def to_json(self) -> dict:
        return {
            "acyclic": self.acyclic,
            "witness_cycle": self.witness_cycle.to_json() if self.witness_cycle else None,
        }


def gradient_graph(field: DiscreteVectorField) -> nx.DiGraph:
    """
    Up-edges along matched pairs, down-edges from upper cells to their other facets that
    are themselves matched upward; directed cycles are closed gradient paths.
    """
    graph = nx.DiGraph()
    for lower, upper in field.pairs:
        graph.add_edge(lower, upper)
    for lower, upper in field.pairs:
        for v in sorted(upper):
            facet = upper - {v}
            if facet != lower and field.is_matched_up(facet):
                graph.add_edge(upper, facet)
    return graph


def acyclicity(field: DiscreteVectorField) -> AcyclicityReport:
    graph = gradient_graph(field)
    try:
        cycle = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        return AcyclicityReport(True, None)
    faces = [edge[0] for edge in cycle]
    start = next(i for i, face in enumerate(faces) if field.is_matched_up(face) and field.partner[face] == faces[(i + 1) % len(faces)])
    faces = faces[start:] + faces[:start]
    path = GradientPath(faces + [faces[0]])
    logger.warning(f"Closed gradient path found: {path.render()}")
    return AcyclicityReport(False, path)


def apex_matching(complex_: SimplicialComplex, apex: int) -> DiscreteVectorField:
    """
    Element matching σ ↔ σ ∪ {apex} over all nonempty σ avoiding the apex.
    """
    pairs = []
    for face in complex_.sorted_faces():
        if face and apex not in face:
            coface = face | {apex}
            if coface in complex_.faces:
                pairs.append((face, coface))
    return DiscreteVectorField(complex_, pairs)
