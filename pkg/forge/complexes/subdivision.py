from typing import Dict, List, Tuple

from forge.complexes.simplicial_complex import Face, SimplicialComplex


def barycentric_subdivision(complex_: SimplicialComplex) -> Tuple[SimplicialComplex, List[Face]]:
    """
    Order complex of the nonempty faces.

    Returns the subdivision together with the list mapping each new vertex to the face of
    the original complex whose barycenter it is; new vertex ids follow the canonical face order.
    """
    carriers = [face for face in complex_.sorted_faces() if face]
    index: Dict[Face, int] = {face: i for i, face in enumerate(carriers)}

    # maximal chains: one per facet and ordering of its vertices
    chains = set()
    for facet in complex_.facets:
        if not facet:
            continue
        for chain in _maximal_chains(facet):
            chains.add(frozenset(index[face] for face in chain))
    return SimplicialComplex(range(len(carriers)), chains), carriers


def _maximal_chains(facet: Face) -> List[List[Face]]:
    if len(facet) == 1:
        return [[facet]]
    chains = []
    for v in sorted(facet):
        for chain in _maximal_chains(facet - {v}):
            chains.append(chain + [facet])
    return chains
