from typing import Dict, List, Optional

import networkx as nx

from forge.complexes.simplicial_complex import Face, SimplicialComplex


class NotPureError(ValueError):
    pass


class PseudomanifoldReport:

    def __init__(self, dimension: int, ridge_regular: bool, strongly_connected: bool, orientation: Optional[Dict[Face, int]]) -> None:
        self.pure = True
        self.dimension = dimension
        self.ridge_regular = ridge_regular
        self.strongly_connected = strongly_connected
        self.orientation = orientation

    @property
    def orientable(self) -> bool:
        return self.orientation is not None

    @property
    def closed_orientable(self) -> bool:
        return self.ridge_regular and self.strongly_connected and self.orientable

    def to_json(self) -> dict:
        return {
            "pure": self.pure,
            "dimension": self.dimension,
            "ridge_regular": self.ridge_regular,
            "strongly_connected": self.strongly_connected,
            "orientable": self.orientable,
        }


def induced_sign(facet: Face, ridge: Face) -> int:
    """
    Sign of the ridge in the boundary of the facet, both oriented by sorted vertex order.
    """
    (removed,) = facet - ridge
    return -1 if sorted(facet).index(removed) % 2 else 1


def ridge_incidence(complex_: SimplicialComplex) -> Dict[Face, List[Face]]:
    incidence: Dict[Face, List[Face]] = {}
    for facet in complex_.facets:
        for v in sorted(facet):
            incidence.setdefault(facet - {v}, []).append(facet)
    return incidence


def pseudomanifold_check(complex_: SimplicialComplex) -> PseudomanifoldReport:
    if complex_.is_void or not complex_.is_pure():
        raise NotPureError("Pseudomanifold checks need a pure complex")
    incidence = ridge_incidence(complex_)
    ridge_regular = all(len(facets) == 2 for facets in incidence.values())

    adjacency = nx.Graph()
    adjacency.add_nodes_from(complex_.facets)
    for ridge, facets in incidence.items():
        for i in range(len(facets)):
            for j in range(i + 1, len(facets)):
                adjacency.add_edge(facets[i], facets[j], ridge=ridge)
    strongly_connected = nx.is_connected(adjacency)
    return PseudomanifoldReport(complex_.dimension, ridge_regular, strongly_connected, _orient(complex_, incidence, adjacency))


def _orient(complex_: SimplicialComplex, incidence: Dict[Face, List[Face]], adjacency: nx.Graph) -> Optional[Dict[Face, int]]:
    if any(len(facets) > 2 for facets in incidence.values()):
        return None
    orientation: Dict[Face, int] = {}
    for component in sorted(nx.connected_components(adjacency), key=lambda c: min(sorted(f) for f in c)):
        root = min(component, key=sorted)
        orientation[root] = 1
        for parent, child in nx.bfs_edges(adjacency, root):
            ridge = adjacency.edges[parent, child]["ridge"]
            orientation[child] = -orientation[parent] * induced_sign(parent, ridge) * induced_sign(child, ridge)
    for ridge, facets in incidence.items():
        if len(facets) == 2:
            first, second = facets
            if orientation[first] * induced_sign(first, ridge) + orientation[second] * induced_sign(second, ridge) != 0:
                return None
    return orientation
