from forge.complexes.simplicial_complex import EMPTY_FACE, Face, InvalidComplexError, SimplicialComplex, canonical_key
from forge.complexes.constructions import (
    ChessboardSpec,
    alexander_dual,
    bier_sphere,
    chessboard_complex,
    deleted_join,
    deleted_join_of,
    join,
    join_all,
    multi_chessboard_complex,
    multipartite_complex,
    points,
    quotient_map_3to2,
    simplex,
    simplex_boundary,
    skeleton,
)
from forge.complexes.subdivision import barycentric_subdivision
